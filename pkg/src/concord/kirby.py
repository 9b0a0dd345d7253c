"""Framed links at linking-matrix level: slam-dunks, blow-downs and the
genus-1 branched double cover.

A :class:`FramedChain` is an ordered list of framed, knot-labelled
components plus a symmetric linking matrix.  When ``chain`` is true the
components form a linear chain in which neighbours clasp exactly once
geometrically; only then do knot labels survive a blow-down.  A label of
``None`` means the knot type is not tracked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .knots import GenDouble, KnotExpr, Torus, Unknot, WhiteheadPos, connected_sum, reverse, seifert_matrix
from .matrix import IntMatrix
from .parser import parse_knot_expression

__all__ = [
    "FramedComponent",
    "FramedChain",
    "RationalSurgery",
    "KirbyError",
    "SlamDunkError",
    "slam_dunk_reduce",
    "blow_down",
    "blow_down_LK",
    "double_branched_cover_genus1",
    "genus1_bands",
]


class KirbyError(ValueError):
    pass


class SlamDunkError(KirbyError):
    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (component {index})")
        self.index = index


@dataclass(frozen=True)
class FramedComponent:
    framing: Fraction
    knot: KnotExpr | None

    def label(self) -> str:
        return "?" if self.knot is None else str(self.knot)


def _is_chain_shaped(linking: Sequence[Sequence[int]]) -> bool:
    n = len(linking)
    return all(
        abs(linking[i][j]) == (1 if abs(i - j) == 1 else 0)
        for i in range(n)
        for j in range(n)
        if i != j
    )


@dataclass(frozen=True)
class FramedChain:
    components: tuple[FramedComponent, ...]
    linking: IntMatrix
    chain: bool = False

    def __post_init__(self):
        n = len(self.components)
        if n < 1:
            raise KirbyError("a framed link needs at least one component")
        if self.linking.shape != (n, n):
            raise KirbyError(f"linking matrix must be {n}x{n}")
        off = [[0 if i == j else self.linking[i, j] for j in range(n)] for i in range(n)]
        if any(off[i][j] != off[j][i] for i in range(n) for j in range(n)):
            raise KirbyError("linking matrix must be symmetric")
        if self.chain and not _is_chain_shaped(off):
            raise KirbyError("a chain links consecutive components once and nothing else")
        # store off-diagonal part only; framings live on the components
        object.__setattr__(self, "linking", IntMatrix(tuple(map(tuple, off)), n))

    @classmethod
    def linear(cls, parts: Sequence[tuple[Fraction | int | str, KnotExpr | None]],
               signs: Sequence[int] | None = None) -> "FramedChain":
        """Linear chain; ``signs[i]`` is the linking number of components i, i+1."""
        n = len(parts)
        signs = [1] * (n - 1) if signs is None else list(signs)
        lk = [[0] * n for _ in range(n)]
        for i, s in enumerate(signs):
            lk[i][i + 1] = lk[i + 1][i] = s
        comps = tuple(FramedComponent(Fraction(f), k) for f, k in parts)
        return cls(comps, IntMatrix(tuple(map(tuple, lk)), n), chain=True)

    @property
    def framings(self) -> tuple[Fraction, ...]:
        return tuple(c.framing for c in self.components)

    def linking_matrix(self) -> IntMatrix:
        """Full linking matrix with framings on the diagonal (integer framings only)."""
        if any(f.denominator != 1 for f in self.framings):
            raise KirbyError("linking matrix needs integer framings")
        n = len(self.components)
        return IntMatrix(tuple(
            tuple(int(self.framings[i]) if i == j else self.linking[i, j] for j in range(n))
            for i in range(n)
        ), n)

    def to_json(self) -> dict[str, Any]:
        n = len(self.components)
        diag = [int(f) if f.denominator == 1 else 0 for f in self.framings]
        return {
            "components": [{"framing": str(c.framing), "knot": c.label()} for c in self.components],
            "linking": [[diag[i] if i == j else self.linking[i, j] for j in range(n)] for i in range(n)],
            "chain": self.chain,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any] | str) -> "FramedChain":
        """Read the JSON form.

        Diagonal linking entries must match integer framings (or be 0 for
        rational framings).  A missing ``"linking"`` means a linear chain.
        Without an explicit ``"chain"`` key, a matrix of chain shape is read
        as a geometric chain.
        """
        if isinstance(data, str):
            data = json.loads(data)
        comps = []
        for c in data["components"]:
            label = c.get("knot", "U")
            knot = None if label == "?" else parse_knot_expression(label)
            comps.append(FramedComponent(Fraction(str(c["framing"])), knot))
        n = len(comps)
        diag = [int(c.framing) if c.framing.denominator == 1 else 0 for c in comps]
        raw = data.get("linking")
        if raw is None:
            raw = [[diag[i] if i == j else int(abs(i - j) == 1) for j in range(n)] for i in range(n)]
        if len(raw) != n or any(len(row) != n for row in raw):
            raise KirbyError(f"linking matrix must be {n}x{n}")
        for i, c in enumerate(comps):
            if raw[i][i] != diag[i]:
                raise KirbyError(f"linking[{i}][{i}] = {raw[i][i]} disagrees with framing {c.framing}")
        off = [[0 if i == j else raw[i][j] for j in range(n)] for i in range(n)]
        chain = data.get("chain", _is_chain_shaped(off))
        return cls(tuple(comps), IntMatrix.from_rows(off) if n else IntMatrix.zeros(0), chain=bool(chain))


@dataclass(frozen=True)
class RationalSurgery:
    knot: KnotExpr
    coefficient: Fraction

    def __post_init__(self):
        if not isinstance(self.coefficient, Fraction):
            object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    def to_json(self) -> dict[str, str]:
        return {"knot": str(self.knot), "coefficient": str(self.coefficient)}


def slam_dunk_reduce(c: FramedChain) -> RationalSurgery:
    """Fold a chain ``[(a1, K), (a2, U), ..., (ak, U)]`` into ``S^3_r(K)``.

    ``r = a1 - 1/(a2 - 1/(... - 1/ak))``; hitting ``1/0`` raises
    :class:`SlamDunkError` naming the offending component.
    """
    if not c.chain:
        raise KirbyError("slam-dunk needs a linear chain")
    head, *tail = c.components
    if head.knot is None:
        raise KirbyError("head component has an untracked knot type")
    for i, comp in enumerate(tail, start=1):
        if not isinstance(comp.knot, Unknot):
            raise KirbyError(f"component {i} must be an unknot to be slam-dunked")
        if comp.framing.denominator != 1:
            raise KirbyError(f"component {i} needs an integer framing")
    r = c.framings[-1]
    for i in range(len(c.components) - 2, -1, -1):
        if r == 0:
            raise SlamDunkError("slam-dunk through a 0-framed tail", i + 1)
        r = c.framings[i] - 1 / r
    return RationalSurgery(head.knot, r)


def blow_down(c: FramedChain, index: int) -> FramedChain:
    """Blow down the ±1-framed unknot ``index``.

    ``a_i -> a_i - ε lk(i,u)^2`` and ``lk(i,j) -> lk(i,j) - ε lk(i,u) lk(j,u)``.
    Knot labels are kept for chains (each neighbour meets the spanning disk
    of ``u`` once); in a general framed link they become untracked.
    """
    n = len(c.components)
    if not 0 <= index < n:
        raise KirbyError(f"no component {index}")
    u = c.components[index]
    if u.framing not in (1, -1):
        raise KirbyError(f"component {index} has framing {u.framing}, not ±1")
    if not isinstance(u.knot, Unknot):
        raise KirbyError(f"component {index} is not an unknot")
    if n == 1:
        raise KirbyError("blowing down the only component leaves the empty link")
    eps = int(u.framing)
    keep = [i for i in range(n) if i != index]
    lk = c.linking
    comps = []
    for i in keep:
        knot = c.components[i].knot if c.chain else None
        comps.append(FramedComponent(c.components[i].framing - eps * lk[i, index] ** 2, knot))
    new_lk = tuple(
        tuple(0 if i == j else lk[i, j] - eps * lk[i, index] * lk[j, index] for j in keep)
        for i in keep
    )
    new_chain = c.chain and _is_chain_shaped(new_lk)
    return FramedChain(tuple(comps), IntMatrix(new_lk, len(keep)), chain=new_chain)


def blow_down_LK(K: KnotExpr) -> KnotExpr:
    """Knot left by blowing down the second component of ``L(K)`` (+1 framing)."""
    return GenDouble(Unknot(), -2, K, 0)


def genus1_bands(e: KnotExpr) -> tuple[KnotExpr, KnotExpr]:
    """Knot types of the two band cores of the genus-1 surface ``seifert_matrix(e)`` uses.

    Band order follows the basis of that matrix.
    """
    match e:
        case GenDouble(J=j, K=k):
            return (k, j)
        case WhiteheadPos(companion=k):
            return (Unknot(), k)
        case Torus(p=2, q=3):
            return (Unknot(), Unknot())
    if seifert_matrix(e).shape != (2, 2):
        raise KirbyError(f"{e} has no genus-1 Seifert surface here")
    raise KirbyError(f"band knot types of {e} are not tracked")


def double_branched_cover_genus1(V: IntMatrix, band_labels: tuple[KnotExpr, KnotExpr]) -> FramedChain:
    """Surgery description of the branched double cover of a genus-1 knot.

    Component ``i`` lifts band ``i`` (core ``J`` becomes ``J # J^r``) with
    framing ``(V + V^T)[i][i]``; the two link ``(V + V^T)[0][1]`` times.
    """
    if V.shape != (2, 2):
        raise KirbyError("genus-1 Seifert matrix must be 2x2")
    if abs((V - V.T).det()) != 1:
        raise KirbyError("V - V^T is not unimodular")
    W = V + V.T
    comps = tuple(
        FramedComponent(Fraction(W[i, i]), connected_sum(band, reverse(band)))
        for i, band in enumerate(band_labels)
    )
    lk = IntMatrix(((0, W[0, 1]), (W[0, 1], 0)))
    return FramedChain(comps, lk, chain=abs(W[0, 1]) == 1)
