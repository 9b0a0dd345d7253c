"""Two-variable Alexander polynomials from C-complexes (Cooper's method).

A C-complex for a 2-component link is a pair of Seifert surfaces ``S1, S2``
meeting only in clasps.  For a basis ``a_1..a_n`` of ``H_1(S1 ∪ S2)`` and a
sign pair ``ε = (ε1, ε2)`` let ``a_i^ε`` be the pushoff of ``a_i`` off ``S1``
in its ``ε1`` normal direction and off ``S2`` in its ``ε2`` direction; the
generalized Seifert matrices are ``A^ε[i][j] = lk(a_i^ε, a_j)``.

With both surfaces disks, ::

    Δ_L(x, y) ≐ det( A^{++} - y A^{+-} - x A^{-+} + x y A^{--} )

where ``x`` is the meridian of the first component.  This is the
one-variable formula ``det(V - t V^T)`` with one sign per surface, and it
was validated against an independent Fox-calculus computation on the
(2,4) torus link and against the Torres condition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .knots import KnotExpr
from .laurent import LaurentPoly1, LaurentPoly2, eval_at_y_one, normalize_units_1, normalize_units_2
from .matrix import IntMatrix, bareiss_det

__all__ = [
    "CComplex",
    "CComplexError",
    "two_variable_alexander",
    "build_LK_ccomplex",
    "hopf_ccomplex",
    "torres_check",
    "LK_A_PP",
    "LK_A_PM",
]


class CComplexError(ValueError):
    pass


@dataclass(frozen=True)
class CComplex:
    """Pushoff-linking data of a two-surface C-complex.

    ``A_mm`` must equal ``A_pp^T`` and ``A_mp`` must equal ``A_pm^T``
    (pushing ``a`` off in direction ``-ε`` links ``b`` as ``b^ε`` links ``a``).
    ``component_polys`` are the Alexander polynomials of the two components.
    """

    basis_size: int
    A_pp: IntMatrix
    A_pm: IntMatrix
    A_mp: IntMatrix
    A_mm: IntMatrix
    lk: int
    component_polys: tuple[LaurentPoly1, LaurentPoly1] = field(
        default=(LaurentPoly1.one(), LaurentPoly1.one())
    )

    def __post_init__(self):
        n = self.basis_size
        for name in ("A_pp", "A_pm", "A_mp", "A_mm"):
            if getattr(self, name).shape != (n, n):
                raise CComplexError(f"{name} has shape {getattr(self, name).shape}, expected {(n, n)}")
        if self.A_mm != self.A_pp.T:
            raise CComplexError("A_mm must be the transpose of A_pp")
        if self.A_mp != self.A_pm.T:
            raise CComplexError("A_mp must be the transpose of A_pm")

    def congruent(self, P: IntMatrix) -> "CComplex":
        """Change of basis ``A -> P^T A P`` applied to all four matrices."""
        def f(A: IntMatrix) -> IntMatrix:
            return P.T @ A @ P

        return CComplex(self.basis_size, f(self.A_pp), f(self.A_pm), f(self.A_mp), f(self.A_mm),
                        self.lk, self.component_polys)

    def to_json(self) -> dict[str, Any]:
        return {
            "basis_size": self.basis_size,
            "A_pp": self.A_pp.tolist(),
            "A_pm": self.A_pm.tolist(),
            "A_mp": self.A_mp.tolist(),
            "A_mm": self.A_mm.tolist(),
            "lk": self.lk,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any] | str) -> "CComplex":
        if isinstance(data, str):
            data = json.loads(data)
        keys = ("basis_size", "A_pp", "A_pm", "A_mp", "A_mm", "lk")
        missing = [k for k in keys if k not in data]
        if missing:
            raise CComplexError(f"missing field {missing[0]!r}")
        n = int(data["basis_size"])
        mats = [IntMatrix.from_rows(data[k]) if n else IntMatrix.zeros(0) for k in keys[1:5]]
        return cls(n, *mats, lk=int(data["lk"]))


def _matrix_poly(c: CComplex) -> list[list[LaurentPoly2]]:
    x, y = LaurentPoly2.gens()
    xy = x * y
    n = c.basis_size
    return [
        [c.A_pp[i, j] - y * c.A_pm[i, j] - x * c.A_mp[i, j] + xy * c.A_mm[i, j] for j in range(n)]
        for i in range(n)
    ]


def two_variable_alexander(c: CComplex) -> LaurentPoly2:
    """``Δ_L(x, y)`` in canonical unit-normalized form."""
    det = bareiss_det(_matrix_poly(c), LaurentPoly2.zero(), LaurentPoly2.one(), lambda a, b: a.divexact(b))
    return normalize_units_2(det)


def hopf_ccomplex() -> CComplex:
    """Two disks with a single clasp: ``H_1`` is trivial."""
    z = IntMatrix.zeros(0)
    return CComplex(0, z, z, z, z, lk=1)


# C-complex of L(K): S2 a disk bounded by L2; S1 a disk bounded by L1, a thin
# band meeting S2 in three clasps (two of one sign, one of the other, so
# lk = 1).  The band runs out to a finger tied in K and back; the finger has
# framing 0.  Basis curves:
#   a: through the two clasps at the base of the finger, around the finger;
#   b: through the finger's second clasp and the remaining clasp.
# Pushoffs were read off a polygonal model of this picture (see the geometric
# oracle in the test suite).  Knotting the finger changes no pushoff linking
# number because the band is 0-framed, so the matrices do not depend on K.
LK_A_PP = IntMatrix(((0, -1), (0, 1)))
LK_A_PM = IntMatrix.zeros(2)


def build_LK_ccomplex(K: KnotExpr) -> CComplex:
    """C-complex of the link ``L(K)``; identical for every ``K``."""
    return CComplex(2, LK_A_PP, LK_A_PM, LK_A_PM.T, LK_A_PP.T, lk=1)


def torres_check(p: LaurentPoly2, lk: int, delta1: LaurentPoly1) -> bool:
    """Torres condition ``Δ_L(t, 1) ≐ Δ_{L1}(t) (t^lk - 1)/(t - 1)``.

    For ``lk = 0`` the right side is 0, so the check asks ``Δ_L(t, 1) = 0``.
    Negative ``lk`` uses ``|lk|`` (the quotients agree up to a unit).
    """
    lhs = eval_at_y_one(p)
    k = abs(lk)
    geometric = LaurentPoly1.from_coefficients([1] * k)
    rhs = delta1 * geometric
    return normalize_units_1(lhs) == normalize_units_1(rhs)
