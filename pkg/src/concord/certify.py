"""Non-concordance certificates for the links ``L(K)``.

A certificate is a list of steps.  Each step either records an invariant
computed by this package (and can be recomputed from the subject) or applies
one rule from the closed catalogue :data:`RULES` to earlier steps.  The 4D
topology behind the rules is cited, never computed.

Conclusions are one-sided: a silent obstruction yields ``Inconclusive``,
never "concordant".
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

from .ccomplex import CComplex, build_LK_ccomplex, two_variable_alexander
from .floer import d_one_over_n_surgery, tau, v0_alternating
from .kirby import RationalSurgery, blow_down_LK, double_branched_cover_genus1, genus1_bands, slam_dunk_reduce
from .knots import (
    KnotExpr,
    Reverse,
    Sum,
    Torus,
    Unknot,
    WhiteheadPos,
    connected_sum,
    reverse,
    seifert_matrix,
    signature,
)
from .laurent import LaurentPoly2
from .parser import parse_knot_expression

__all__ = [
    "Conclusion",
    "InferenceRule",
    "RULES",
    "Step",
    "Certificate",
    "ReplayError",
    "FamilyRow",
    "certify_not_hopf",
    "certify_family",
    "sqp_certificate",
    "check_LK_alexander",
    "alexander_is_one",
    "strongly_quasipositive",
    "family_d_pipeline",
    "replay",
    "validate_certificate",
    "render_markdown",
    "render_table",
]


class Conclusion(str, Enum):
    NOT_CONCORDANT_TO_HOPF = "NotConcordantToHopf"
    NOT_CONCORDANT_TO_LOCALLY_KNOTTED_HOPF = "NotConcordantToLocallyKnottedHopf"
    FAMILY_PAIRWISE_DISTINCT = "FamilyPairwiseDistinct"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class InferenceRule:
    name: str
    premises: tuple[str, ...]
    conclusion: str


RULES: dict[str, InferenceRule] = {
    r.name: r
    for r in [
        InferenceRule(
            "lk_construction", (),
            "L(K) has two unknotted components with linking number 1; L(U) is the Hopf link",
        ),
        InferenceRule(
            "lk_covering_knot", (),
            "in the 2-fold cover of S^3 branched along L2(K), L1(K) lifts to Wh+(K # r(K), 0)",
        ),
        InferenceRule(
            "lk_blowdown", (),
            "blowing down L2(K) with framing +1 turns L1(K) into D(U,-2,K,0)",
        ),
        InferenceRule(
            "covering_knot_concordance", ("L and L' are concordant",),
            "their 2-fold covering knots are concordant in a rational homology S^3 x I",
        ),
        InferenceRule(
            "covering_knot_hopf", ("L is concordant to the Hopf link",),
            "the 2-fold covering knot of L is rationally slice",
        ),
        InferenceRule(
            "blowdown_concordance", ("L and L' are concordant", "L2 and L2' are unknots"),
            "the blown-down knots are concordant in a homotopy S^3 x I",
        ),
        InferenceRule(
            "blowdown_hopf", ("L is concordant to the Hopf link", "L2 is unknotted"),
            "the knot obtained by blowing down L2 is slice in a homotopy 4-ball",
        ),
        InferenceRule(
            "local_knotting",
            ("L and J have unknotted components", "L is concordant to a locally knotted J"),
            "L is concordant to J",
        ),
        InferenceRule(
            "branched_cover_cobordism", ("knots concordant in a homotopy S^3 x I",),
            "their branched double covers are Z/2-homology cobordant, so d in the spin^c "
            "structure 0 agrees",
        ),
        InferenceRule(
            "tau_rational_slice", ("tau(J) != 0",), "J is not rationally slice",
        ),
        InferenceRule(
            "tau_homotopy_slice", ("tau(J) != 0",), "J is not slice in any homotopy 4-ball",
        ),
        InferenceRule(
            "sqp_plumbing", ("K is strongly quasipositive",),
            "D(U,-2,K,0) is strongly quasipositive",
        ),
        InferenceRule(
            "sqp_homotopy_slice", ("J is nontrivial and strongly quasipositive",),
            "J is not slice in any homotopy 4-ball",
        ),
    ]
}


class ReplayError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    """``kind`` is ``"invariant"`` (recomputable) or ``"rule"`` (catalogue)."""

    claim: str
    kind: str
    name: str
    args: dict[str, Any] = field(default_factory=dict)
    value: Any = None
    uses: tuple[int, ...] = ()
    route: str | None = None

    def to_json(self) -> dict[str, Any]:
        just: dict[str, Any] = {"kind": self.kind}
        if self.kind == "invariant":
            just.update(invariant=self.name, args=self.args, value=self.value)
        else:
            rule = RULES[self.name]
            just.update(rule=self.name, statement=rule.conclusion, premises=list(rule.premises),
                        uses=list(self.uses))
        d: dict[str, Any] = {"claim": self.claim, "justification": just}
        if self.route:
            d["route"] = self.route
        return d


@dataclass(frozen=True)
class Certificate:
    subject: dict[str, Any]
    steps: tuple[Step, ...]
    conclusion: Conclusion
    table: tuple[dict[str, Any], ...] = ()

    def to_json(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "subject": self.subject,
            "steps": [s.to_json() for s in self.steps],
            "conclusion": self.conclusion.value,
        }
        if self.table:
            d["table"] = list(self.table)
        return d

    def dumps(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=indent)

    def canonical(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


# -- invariant steps -----------------------------------------------------------


def alexander_is_one(c: CComplex) -> bool:
    return two_variable_alexander(c) == LaurentPoly2.one()


def check_LK_alexander(K: KnotExpr) -> bool:
    """True iff Cooper's method gives ``Δ_{L(K)} ≐ 1``."""
    return alexander_is_one(build_LK_ccomplex(K))


def strongly_quasipositive(e: KnotExpr) -> tuple[bool, bool]:
    """``(is_sqp, nontrivial)`` by propagation from positive torus knots.

    Closed under ``#`` and reversal; nothing else is known to be SQP here
    (in particular mirrors are not).
    """
    match e:
        case Unknot():
            return True, False
        case Torus():
            return True, True
        case Sum(left=a, right=b):
            sa, na = strongly_quasipositive(a)
            sb, nb = strongly_quasipositive(b)
            return sa and sb, sa and sb and (na or nb)
        case Reverse(inner=a):
            return strongly_quasipositive(a)
    return False, False


def family_d_pipeline(K: KnotExpr) -> tuple[RationalSurgery, Fraction]:
    """Blow down, take the branched double cover, slam-dunk, evaluate ``d``."""
    knot = blow_down_LK(K)
    cover = double_branched_cover_genus1(seifert_matrix(knot), genus1_bands(knot))
    surgery = slam_dunk_reduce(cover)
    coeff = surgery.coefficient
    if coeff.numerator != 1 or coeff.denominator < 1:
        raise RuntimeError(f"pipeline produced S^3_{coeff}, expected 1/n surgery")
    return surgery, d_one_over_n_surgery(surgery.knot, coeff.denominator).value


def _family_knot(n: int) -> KnotExpr:
    return Torus(2, 2 * n + 1)


_INVARIANTS: dict[str, Callable[..., Any]] = {
    "lk_alexander": lambda K: str(two_variable_alexander(build_LK_ccomplex(parse_knot_expression(K)))),
    "tau": lambda K: tau(parse_knot_expression(K)).value,
    "sqp": lambda K: list(strongly_quasipositive(parse_knot_expression(K))),
    "family_d": lambda n: str(family_d_pipeline(_family_knot(n))[1]),
}


def _invariant(claim: str, name: str, route: str | None = None, **args) -> Step:
    return Step(claim, "invariant", name, dict(args), _INVARIANTS[name](**args), route=route)


def _rule(claim: str, name: str, uses: tuple[int, ...] = (), route: str | None = None) -> Step:
    return Step(claim, "rule", name, uses=uses, route=route)


def _preamble(K: KnotExpr) -> list[Step]:
    k = str(K)
    return [
        _rule(f"L({k}) has unknotted components and linking number 1", "lk_construction"),
        _invariant(f"Delta_L({k})(x,y) = 1", "lk_alexander", K=k),
    ]


# -- certificates ---------------------------------------------------------------


def certify_not_hopf(K: KnotExpr) -> Certificate:
    """Both tau routes for ``L(K)``, upgraded to locally knotted Hopf links."""
    k = str(K)
    subject = {"kind": "not_hopf", "link": f"L({k})", "K": k}
    steps = _preamble(K)
    tK = tau(K).value
    steps.append(_invariant(f"tau({k}) = {'unknown' if tK is None else tK}", "tau", K=k))
    if tK is None or tK <= 0:
        return Certificate(subject, tuple(steps), Conclusion.INCONCLUSIVE)

    J = WhiteheadPos(connected_sum(K, reverse(K)), 0)
    i = len(steps)
    steps += [
        _rule(f"the 2-fold covering knot of L({k}) is {J}", "lk_covering_knot", route="A"),
        _invariant(f"tau({J}) = 1", "tau", K=str(J), route="A"),
        _rule(f"{J} is not rationally slice", "tau_rational_slice", (i + 1,), route="A"),
        _rule(f"L({k}) is not concordant to the Hopf link", "covering_knot_hopf", (i, i + 2), route="A"),
    ]
    B = blow_down_LK(K)
    j = len(steps)
    steps += [
        _rule(f"blowing down L2 leaves {B}", "lk_blowdown", route="B"),
        _invariant(f"tau({B}) = 1", "tau", K=str(B), route="B"),
        _rule(f"{B} is not homotopically slice", "tau_homotopy_slice", (j + 1,), route="B"),
        _rule(f"L({k}) is not concordant to the Hopf link", "blowdown_hopf", (j, j + 2), route="B"),
    ]
    if steps[i + 1].value != 1 or steps[j + 1].value != 1:
        raise RuntimeError(f"tau rules disagree with tau({k}) = {tK} > 0")
    steps.append(_rule(
        f"L({k}) is not concordant to any locally knotted Hopf link", "local_knotting", (0, i + 3, j + 3),
    ))
    return Certificate(subject, tuple(steps), Conclusion.NOT_CONCORDANT_TO_LOCALLY_KNOTTED_HOPF)


def sqp_certificate(K: KnotExpr) -> Certificate:
    """Strong quasipositivity route for ``L(K)``."""
    k = str(K)
    subject = {"kind": "sqp", "link": f"L({k})", "K": k}
    steps = _preamble(K)
    steps.append(_invariant(f"strong quasipositivity of {k}: [sqp, nontrivial]", "sqp", K=k))
    is_sqp, nontrivial = steps[-1].value
    if not (is_sqp and nontrivial):
        return Certificate(subject, tuple(steps), Conclusion.INCONCLUSIVE)
    B = blow_down_LK(K)
    i = len(steps)
    steps += [
        _rule(f"blowing down L2 leaves {B}", "lk_blowdown"),
        _rule(f"{B} is nontrivial and strongly quasipositive", "sqp_plumbing", (i - 1,)),
        _rule(f"{B} is not homotopically slice", "sqp_homotopy_slice", (i + 1,)),
        _rule(f"L({k}) is not concordant to the Hopf link", "blowdown_hopf", (i, i + 2)),
    ]
    return Certificate(subject, tuple(steps), Conclusion.NOT_CONCORDANT_TO_HOPF)


@dataclass(frozen=True)
class FamilyRow:
    n: int
    signature: int
    tau: int
    v0: int
    d: Fraction
    surgery: str

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "signature": self.signature, "tau": self.tau, "v0": self.v0,
                "d": str(self.d), "surgery": self.surgery}


def _family_row(n: int) -> FamilyRow:
    K = _family_knot(n)
    KK = connected_sum(K, reverse(K))
    surgery, d = family_d_pipeline(K)
    direct = d_one_over_n_surgery(KK, 4).value
    if d != direct or d != -2 * n:
        raise RuntimeError(f"n={n}: pipeline d = {d}, formula d = {direct}, expected {-2 * n}")
    return FamilyRow(n, signature(KK), tau(K).value, v0_alternating(KK), d, str(surgery.coefficient))


def certify_family(N: int) -> tuple[Certificate, list[FamilyRow]]:
    """``L(T(2,2n+1))`` for ``n = 1..N`` are pairwise non-concordant."""
    if N < 1:
        raise ValueError("N must be at least 1")
    rows = [_family_row(n) for n in range(1, N + 1)]
    if len({r.d for r in rows}) != N:
        raise RuntimeError("d-invariants are not pairwise distinct")
    subject = {"kind": "family", "links": "L(T(2,2n+1))", "n_max": N}
    steps = [
        _rule("each L(T(2,2n+1)) has unknotted components and linking number 1", "lk_construction"),
        _invariant("Delta_L(K)(x,y) = 1 for every K (C-complex independent of K)", "lk_alexander", K="U"),
        _rule("blowing down L2(n) leaves D(U,-2,T(2,2n+1),0)", "lk_blowdown"),
    ]
    first = len(steps)
    for r in rows:
        steps.append(_invariant(
            f"d(S^3_1/4(T(2,{2 * r.n + 1}) # r(T(2,{2 * r.n + 1})))) = {r.d}", "family_d", n=r.n,
        ))
    d_steps = tuple(range(first, len(steps)))
    m = len(steps)
    steps += [
        _rule("a concordance L(m) ~ L(n) blows down to a homotopy concordance of the blown-down knots",
              "blowdown_concordance", (2,)),
        _rule("equal d in the spin^c structure 0 would follow; the computed d are pairwise distinct, "
              "so L(m), L(n) are not concordant for m != n", "branched_cover_cobordism", (m,) + d_steps),
        _rule("d != 0 = d(S^3), so no L(n) is concordant to the Hopf link (whose blow-down is U)",
              "branched_cover_cobordism", (m, 0) + d_steps),
        _rule("no L(n) is concordant to a locally knotted Hopf link", "local_knotting", (0, m + 2)),
    ]
    cert = Certificate(subject, tuple(steps), Conclusion.FAMILY_PAIRWISE_DISTINCT,
                       tuple(r.to_json() for r in rows))
    return cert, rows


# -- replay -------------------------------------------------------------------------


def _regenerate(subject: dict[str, Any]) -> Certificate:
    kind = subject.get("kind")
    if kind == "not_hopf":
        return certify_not_hopf(parse_knot_expression(subject["K"]))
    if kind == "sqp":
        return sqp_certificate(parse_knot_expression(subject["K"]))
    if kind == "family":
        return certify_family(int(subject["n_max"]))[0]
    raise ReplayError(f"unknown certificate kind {kind!r}")


def replay(data: dict[str, Any] | str) -> Certificate:
    """Recompute every invariant step and regenerate the certificate.

    Raises :class:`ReplayError` on the first discrepancy.
    """
    if isinstance(data, str):
        data = json.loads(data)
    steps = data.get("steps", [])
    for idx, step in enumerate(steps):
        just = step.get("justification", {})
        if just.get("kind") == "invariant":
            fn = _INVARIANTS.get(just.get("invariant"))
            if fn is None:
                raise ReplayError(f"step {idx}: unknown invariant {just.get('invariant')!r}")
            value = fn(**just.get("args", {}))
            if value != just.get("value"):
                raise ReplayError(f"step {idx}: recomputed {value!r}, certificate says {just.get('value')!r}")
        elif just.get("kind") == "rule":
            if just.get("rule") not in RULES:
                raise ReplayError(f"step {idx}: rule {just.get('rule')!r} is not in the catalogue")
            if any(not 0 <= u < idx for u in just.get("uses", [])):
                raise ReplayError(f"step {idx}: cites a step that does not precede it")
        else:
            raise ReplayError(f"step {idx}: unknown justification kind {just.get('kind')!r}")
    fresh = _regenerate(data.get("subject", {}))
    if fresh.canonical() != json.dumps(data, sort_keys=True, separators=(",", ":")):
        raise ReplayError("certificate differs from its regeneration")
    return fresh


def validate_certificate(data: dict[str, Any] | str) -> bool:
    try:
        replay(data)
    except (ReplayError, ValueError, KeyError, TypeError):
        return False
    return True


# -- rendering ------------------------------------------------------------------------


def render_markdown(cert: Certificate) -> str:
    subj = cert.subject
    title = subj.get("link") or f"{subj.get('links')} for n = 1..{subj.get('n_max')}"
    lines = [f"# Certificate for {title}", ""]
    for idx, s in enumerate(cert.steps):
        route = f" [route {s.route}]" if s.route else ""
        if s.kind == "invariant":
            why = f"computed `{s.name}` = `{s.value}`"
        else:
            cites = ", ".join(str(u) for u in s.uses)
            why = f"rule `{s.name}`" + (f" from steps {cites}" if cites else "")
        lines.append(f"{idx}. {s.claim}{route} ({why})")
    lines += ["", f"**Conclusion:** {cert.conclusion.value}"]
    if cert.table:
        lines += ["", render_table(cert.table, "md").rstrip()]
    return "\n".join(lines) + "\n"


_COLUMNS = ("n", "signature", "tau", "v0", "d", "surgery")


def render_table(rows, fmt: str = "md") -> str:
    """Family table as ``csv``, aligned markdown ``md`` or ``json``."""
    data = [r.to_json() if isinstance(r, FamilyRow) else dict(r) for r in rows]
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(data)
        return buf.getvalue()
    if fmt == "md":
        cells = [list(_COLUMNS)] + [[str(r[c]) for c in _COLUMNS] for r in data]
        widths = [max(len(row[i]) for row in cells) for i in range(len(_COLUMNS))]
        fmt_row = lambda row: "| " + " | ".join(v.rjust(w) for v, w in zip(row, widths)) + " |"  # noqa: E731
        sep = "|" + "|".join("-" * (w + 1) + ":" for w in widths) + "|"
        return "\n".join([fmt_row(cells[0]), sep] + [fmt_row(r) for r in cells[1:]]) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")
