"""Knot expressions and their Seifert-matrix invariants.

A :class:`KnotExpr` is a small immutable syntax tree built from torus knots,
raw Seifert matrices, connected sum, mirror image, orientation reversal,
positive Whitehead doubles and generalized (two-annulus plumbing) doubles.

Conventions: ``T(2, 2n+1)`` has the bidiagonal Seifert matrix with ``-1`` on
the diagonal and ``+1`` above it, so ``signature(T(2,3)) == -2`` and the
torus knots here are right-handed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .laurent import LaurentPoly1, normalize_units_1
from .matrix import IntMatrix, bareiss_det, symmetric_signature

__all__ = [
    "KnotExpr",
    "Unknot",
    "Torus",
    "RawSeifert",
    "Sum",
    "Mirror",
    "Reverse",
    "WhiteheadPos",
    "GenDouble",
    "InvalidKnotError",
    "connected_sum",
    "reverse",
    "mirror",
    "is_alternating",
    "seifert_matrix",
    "alexander_polynomial",
    "alexander_from_seifert",
    "signature",
    "determinant",
    "torsion_coefficients",
    "symmetrized_coefficients",
    "invariants",
]


class InvalidKnotError(ValueError):
    """A leaf that does not describe a knot (e.g. ``T(2,2)``)."""


class KnotExpr:
    """Base class for knot-expression nodes."""

    __slots__ = ()

    def __str__(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError


@dataclass(frozen=True)
class Unknot(KnotExpr):
    def __str__(self) -> str:
        return "U"


@dataclass(frozen=True)
class Torus(KnotExpr):
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q <= self.p:
            raise InvalidKnotError(f"T({self.p},{self.q}) needs 2 <= p < q")
        if gcd(self.p, self.q) != 1:
            raise InvalidKnotError(f"T({self.p},{self.q}) is a link, not a knot")

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class RawSeifert(KnotExpr):
    """A knot given only through a Seifert matrix.

    ``alternating`` is asserted by the caller; it cannot be read off ``V``.
    """

    V: IntMatrix
    alternating: bool = False

    def __post_init__(self):
        if not self.V.is_square() or self.V.rows % 2:
            raise InvalidKnotError("a knot Seifert matrix is square of even size")
        if abs((self.V - self.V.T).det()) != 1:
            raise InvalidKnotError("V - V^T is not unimodular")

    def __str__(self) -> str:
        body = str(self.V.tolist()).replace(" ", "")
        return f"seifert({body},alt)" if self.alternating else f"seifert({body})"


@dataclass(frozen=True)
class Sum(KnotExpr):
    left: KnotExpr
    right: KnotExpr

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Sum) else str(self.right)
        return f"{self.left} # {right}"


@dataclass(frozen=True)
class Mirror(KnotExpr):
    inner: KnotExpr

    def __str__(self) -> str:
        return f"m({self.inner})"


@dataclass(frozen=True)
class Reverse(KnotExpr):
    inner: KnotExpr

    def __str__(self) -> str:
        return f"r({self.inner})"


@dataclass(frozen=True)
class WhiteheadPos(KnotExpr):
    companion: KnotExpr
    twists: int

    def __str__(self) -> str:
        return f"Wh+({self.companion},{self.twists})"


@dataclass(frozen=True)
class GenDouble(KnotExpr):
    """Boundary of two plumbed annuli: cores ``J`` (``s`` twists) and ``K`` (``t`` twists)."""

    J: KnotExpr
    s: int
    K: KnotExpr
    t: int

    def __str__(self) -> str:
        return f"D({self.J},{self.s},{self.K},{self.t})"


def connected_sum(a: KnotExpr, b: KnotExpr) -> KnotExpr:
    """``a # b``, dropping unknot summands."""
    if isinstance(a, Unknot):
        return b
    if isinstance(b, Unknot):
        return a
    return Sum(a, b)


def reverse(e: KnotExpr) -> KnotExpr:
    return e if isinstance(e, Unknot) else Reverse(e)


def mirror(e: KnotExpr) -> KnotExpr:
    return e if isinstance(e, Unknot) else Mirror(e)


def is_alternating(e: KnotExpr) -> bool:
    """Conservative alternation flag: True only when it is certain."""
    match e:
        case Unknot():
            return True
        case Torus(p=p):
            return p == 2
        case RawSeifert(alternating=flag):
            return flag
        case Sum(left=a, right=b):
            return is_alternating(a) and is_alternating(b)
        case Mirror(inner=a) | Reverse(inner=a):
            return is_alternating(a)
        case _:
            return False


def _torus_seifert(p: int, q: int) -> IntMatrix:
    # fibre surface of T(p,q): -(B_{p-1} kron B_{q-1}) with B_n = I - (superdiagonal)
    def b(n: int) -> IntMatrix:
        return IntMatrix(tuple(tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n)) for i in range(n)), n)

    return -(b(p - 1).kron(b(q - 1)))


def seifert_matrix(e: KnotExpr) -> IntMatrix:
    """Seifert matrix built structurally from the expression.

    Doubles carry only the genus-1 surface of their pattern: the companion
    cores contribute nothing to linking numbers of 0-framed annuli.
    """
    match e:
        case Unknot():
            return IntMatrix((), 0)
        case Torus(p=p, q=q):
            return _torus_seifert(p, q)
        case RawSeifert(V=V):
            return V
        case Sum(left=a, right=b):
            return IntMatrix.block_diag(seifert_matrix(a), seifert_matrix(b))
        case Mirror(inner=a):
            return -seifert_matrix(a).T
        case Reverse(inner=a):
            return seifert_matrix(a).T
        case WhiteheadPos(twists=s):
            return IntMatrix(((-1, 1), (0, s)))
        case GenDouble(s=s, t=t):
            return IntMatrix(((t, 1), (0, s)))
    raise TypeError(f"not a knot expression: {e!r}")


def alexander_from_seifert(V: IntMatrix) -> LaurentPoly1:
    """``det(V - t V^T)`` by fraction-free elimination, unit-normalized."""
    t = LaurentPoly1.monomial(1)
    n = V.rows
    m = [[LaurentPoly1(V[i, j]) - t * V[j, i] for j in range(n)] for i in range(n)]
    det = bareiss_det(m, LaurentPoly1.zero(), LaurentPoly1.one(), lambda a, b: a.divexact(b))
    return normalize_units_1(det)


@lru_cache(maxsize=1024)
def alexander_polynomial(e: KnotExpr) -> LaurentPoly1:
    """``det(V - t V^T)`` up to units, in canonical form.

    Uses that the block-diagonal determinant factors over ``#`` and that
    ``Δ`` is symmetric, so mirrors and reverses share it.
    """
    match e:
        case Sum(left=a, right=b):
            return normalize_units_1(alexander_polynomial(a) * alexander_polynomial(b))
        case Mirror(inner=a) | Reverse(inner=a):
            return alexander_polynomial(a)
    return alexander_from_seifert(seifert_matrix(e))


@lru_cache(maxsize=1024)
def signature(e: KnotExpr) -> int:
    """Signature of ``V + V^T``, additive over ``#`` and negated by mirroring."""
    match e:
        case Sum(left=a, right=b):
            return signature(a) + signature(b)
        case Mirror(inner=a):
            return -signature(a)
        case Reverse(inner=a):
            return signature(a)
    V = seifert_matrix(e)
    return symmetric_signature(V + V.T)


def determinant(e: KnotExpr) -> int:
    """``|Δ(-1)|``."""
    return abs(alexander_polynomial(e)(-1))


def symmetrized_coefficients(delta: LaurentPoly1) -> list[int]:
    """``[a0, a1, ...]`` with ``Δ(t) = a0 + Σ a_j (t^j + t^-j)`` and ``Δ(1) = 1``.

    Raises ``ValueError`` unless ``Δ(1) = ±1`` and ``Δ`` is symmetric.
    """
    if delta.is_zero():
        raise ValueError("zero polynomial is not a knot polynomial")
    lo, hi = delta.degree_span()
    if (hi - lo) % 2:
        raise ValueError(f"{delta} is not symmetric")
    mid = (lo + hi) // 2
    sym = delta.shift(-mid)
    value = sym(1)
    if value not in (1, -1):
        raise ValueError(f"Δ(1) = {value}; not the Alexander polynomial of a knot")
    if value == -1:
        sym = -sym
    half = (hi - lo) // 2
    coeffs = [sym.coefficient(k) for k in range(half + 1)]
    if any(sym.coefficient(-k) != coeffs[k] for k in range(half + 1)):
        raise ValueError(f"{delta} is not symmetric")
    return coeffs


def torsion_coefficients(e: KnotExpr, upto: int) -> list[int]:
    """``t_i = Σ_{j>=1} j a_{i+j}`` for ``i = 0..upto``."""
    a = symmetrized_coefficients(alexander_polynomial(e))
    top = len(a) - 1

    def coeff(k: int) -> int:
        return a[k] if k <= top else 0

    return [sum(j * coeff(i + j) for j in range(1, top - i + 1)) for i in range(upto + 1)]


def invariants(e: KnotExpr, upto: int | None = None) -> dict:
    """The classical invariants as a JSON-ready dict."""
    delta = alexander_polynomial(e)
    if upto is None:
        upto = max(delta.degree_span()[1] // 2, 0)
    return {
        "expr": str(e),
        "alexander": str(delta),
        "signature": signature(e),
        "determinant": determinant(e),
        "torsion_coefficients": torsion_coefficients(e, upto),
        "alternating": is_alternating(e),
        "seifert_matrix": seifert_matrix(e).tolist(),
    }
