"""Exact integer matrices, fraction-free determinants and congruence signatures."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Sequence, TypeVar

__all__ = ["IntMatrix", "bareiss_det", "symmetric_signature"]

R = TypeVar("R")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; ``entries`` is a tuple of row tuples.

    A ``0 x 0`` matrix is allowed (the empty Seifert matrix of the unknot).
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        ncols = widths.pop() if widths else max(self.cols, 0)
        if self.cols >= 0 and rows and self.cols != ncols:
            raise ValueError("declared column count does not match entries")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "cols", ncols)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "IntMatrix":
        m = n if m is None else m
        return cls(tuple((0,) * m for _ in range(n)), m)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def block_diag(cls, *blocks: "IntMatrix") -> "IntMatrix":
        n = sum(b.rows for b in blocks)
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b.entries):
                out[off + i][off: off + b.cols] = row
            off += b.rows
        return cls(tuple(map(tuple, out)), n)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)) if self.rows else (), self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.entries), self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
            other.cols,
        )

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            tuple(
                tuple(a * b for a in ra for b in rb)
                for ra in self.entries
                for rb in other.entries
            ),
            self.cols * other.cols,
        )

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def det(self) -> int:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det([list(r) for r in self.entries], 0, 1, lambda a, b: a // b)

    def is_symmetric(self) -> bool:
        return self == self.T

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        return str(self.tolist())


def bareiss_det(
    m: Sequence[Sequence[R]],
    zero: R,
    one: R,
    divexact: Callable[[R, R], R],
) -> R:
    """Fraction-free Gaussian elimination over an integral domain.

    ``divexact(a, b)`` must return the exact quotient; Bareiss guarantees
    every division it performs is exact.
    """
    n = len(m)
    if n == 0:
        return one
    a = [list(r) for r in m]
    sign, prev = 1, one
    for k in range(n - 1):
        if a[k][k] == zero:
            for i in range(k + 1, n):
                if a[i][k] != zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divexact(a[i][j] * pivot - a[i][k] * a[k][j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else zero - det


def _content_reduce(b: list[list[int]]) -> None:
    g = 0
    for row in b:
        for v in row:
            g = gcd(g, v)
    if g > 1:
        for row in b:
            row[:] = [v // g for v in row]


def symmetric_signature(m: IntMatrix) -> int:
    """Signature of a symmetric integer matrix by exact congruence reduction.

    Uses only positive rescalings, so no fractions appear.  A nonzero
    diagonal entry ``p`` is split off via ``B -> p*B - c c^T`` (the Schur
    complement scaled by ``p``).  When the diagonal vanishes a hyperbolic
    ``[[0, a], [a, 0]]`` block is split off instead; it contributes 0.
    """
    if not m.is_square() or not m.is_symmetric():
        raise ValueError("signature needs a symmetric matrix")
    b = m.tolist()
    sig = 0
    while b:
        n = len(b)
        k = next((i for i in range(n) if b[i][i]), None)
        if k is not None:
            p = b[k][k]
            s = 1 if p > 0 else -1
            sig += s
            rest = [i for i in range(n) if i != k]
            c = [b[i][k] for i in rest]
            # p * (Schur complement): signature picks up the sign of p
            nb = [[p * b[i][j] - c[a] * c[bb] for bb, j in enumerate(rest)] for a, i in enumerate(rest)]
            if s < 0:
                nb = [[-v for v in row] for row in nb]
            b = nb
        else:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if b[i][j]), None)
            if pair is None:
                break
            i0, j0 = pair
            a = b[i0][j0]
            rest = [i for i in range(n) if i not in pair]
            ci = [b[r][i0] for r in rest]
            cj = [b[r][j0] for r in rest]
            # a^2 * (B - C P^{-1} C^T) with P = [[0, a], [a, 0]]
            b = [
                [a * a * b[r][s] - a * (ci[x] * cj[y] + cj[x] * ci[y]) for y, s in enumerate(rest)]
                for x, r in enumerate(rest)
            ]
        _content_reduce(b)
    return sig
