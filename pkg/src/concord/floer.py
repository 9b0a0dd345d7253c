"""Closed-form Heegaard Floer invariants for the knots this package builds.

Nothing here computes a chain complex.  ``tau`` is a partial evaluator: each
node of a :class:`~concord.knots.KnotExpr` is matched against a known
theorem, and the result carries the list of rules that produced it so that
certificates can cite them.  Nodes no rule covers make the value unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd

from .knots import (
    GenDouble,
    KnotExpr,
    Mirror,
    RawSeifert,
    Reverse,
    Sum,
    Torus,
    Unknot,
    WhiteheadPos,
    is_alternating,
    signature,
)

__all__ = [
    "TauStep",
    "TauResult",
    "DValue",
    "RuleConflictError",
    "NotAlternatingError",
    "tau",
    "v0_alternating",
    "d_one_over_n_surgery",
    "d_lens",
    "d_lens_all",
    "TAU_RULES",
]

TAU_RULES = {
    "unknot": "tau(U) = 0",
    "torus": "tau(T(p,q)) = (p-1)(q-1)/2 for positive torus knots",
    "alternating": "tau(K) = -signature(K)/2 for alternating K",
    "additivity": "tau(A # B) = tau(A) + tau(B)",
    "reversal": "tau(r(K)) = tau(K)",
    "mirror": "tau(m(K)) = -tau(K)",
    "whitehead_double": "tau(Wh+(K,t)) = 1 if t < 2 tau(K) else 0",
    "levine_double": "tau(D(U,-2,K,0)) = 1 if tau(K) > 0 else 0",
    "unmatched": "no rule applies; value unknown",
}


class RuleConflictError(RuntimeError):
    """Two applicable rules disagreed: an internal bug, never a user error."""


class NotAlternatingError(ValueError):
    pass


@dataclass(frozen=True)
class TauStep:
    rule: str
    expr: str
    value: int | None
    check: bool = False

    def to_json(self) -> dict:
        d = {"rule": self.rule, "expr": self.expr, "value": self.value}
        if self.check:
            d["check"] = True
        return d


@dataclass(frozen=True)
class TauResult:
    """``value`` is ``None`` when some node was not covered by any rule."""

    value: int | None
    derivation: tuple[TauStep, ...]

    @property
    def known(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {"value": self.value, "derivation": [s.to_json() for s in self.derivation]}


def tau(e: KnotExpr) -> TauResult:
    steps: list[TauStep] = []
    value = _tau(e, steps)
    return TauResult(value, tuple(steps))


def _tau(e: KnotExpr, steps: list[TauStep]) -> int | None:
    value: int | None
    match e:
        case Unknot():
            value, rule = 0, "unknot"
        case Torus(p=p, q=q):
            value, rule = (p - 1) * (q - 1) // 2, "torus"
        case RawSeifert(alternating=True):
            value, rule = -signature(e) // 2, "alternating"
        case Sum(left=a, right=b):
            va, vb = _tau(a, steps), _tau(b, steps)
            value = None if va is None or vb is None else va + vb
            rule = "additivity"
        case Reverse(inner=a):
            value, rule = _tau(a, steps), "reversal"
        case Mirror(inner=a):
            va = _tau(a, steps)
            value, rule = (None if va is None else -va), "mirror"
        case WhiteheadPos(companion=k, twists=t) | GenDouble(J=Unknot(), s=-1, K=k, t=t):
            vk = _tau(k, steps)
            value = None if vk is None else int(t < 2 * vk)
            rule = "whitehead_double"
        case GenDouble(J=Unknot(), s=-2, K=k, t=0):
            vk = _tau(k, steps)
            value = None if vk is None else int(vk > 0)
            rule = "levine_double"
        case _:
            value, rule = None, "unmatched"
    if value is None and rule != "unmatched":
        rule = f"{rule}:unknown_input"
    steps.append(TauStep(rule, str(e), value))
    if value is not None and rule != "alternating" and is_alternating(e):
        check = -signature(e) // 2
        if check != value:
            raise RuleConflictError(f"tau({e}): rule {rule!r} gives {value}, alternating rule gives {check}")
        steps.append(TauStep("alternating", str(e), check, check=True))
    return value


@dataclass(frozen=True)
class DValue:
    """Correction term; ``spinc_index`` labels the Spin^c structure."""

    value: Fraction
    spinc_index: int = 0

    def to_json(self) -> dict:
        return {"value": str(self.value), "spinc_index": self.spinc_index}


def v0_alternating(e: KnotExpr) -> int:
    """``V_0 = max(0, ceil(-σ/4))``, valid for alternating knots only."""
    if not is_alternating(e):
        raise NotAlternatingError(f"{e} is not known to be alternating")
    return max(0, ceil(Fraction(-signature(e), 4)))


def d_one_over_n_surgery(e: KnotExpr, n: int) -> DValue:
    """``d(S^3_{1/n}(K)) = -2 V_0(K)`` for alternating ``K`` and ``n >= 1``.

    The value is independent of ``n``.
    """
    if n < 1:
        raise ValueError("surgery coefficient must be 1/n with n >= 1")
    return DValue(Fraction(-2 * v0_alternating(e)), 0)


def d_lens(p: int, q: int, i: int) -> DValue:
    """``d(L(p,q), i)`` by the standard recursion, iteratively.

    ``q`` is reduced mod ``p`` first; ``p = 1`` gives ``S^3`` and 0.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    if not 0 <= i < p:
        raise ValueError(f"spin^c index {i} out of range for p = {p}")
    q %= p
    total, sign = Fraction(0), 1
    a, b, j = p, q, i
    while a > 1:
        total += sign * Fraction((2 * j + 1 - a - b) ** 2 - a * b, 4 * a * b)
        a, b, j = b, a % b, j % b
        sign = -sign
    return DValue(total, i)


def d_lens_all(p: int, q: int) -> list[Fraction]:
    return [d_lens(p, q, i).value for i in range(p)]
