"""Independent Alexander polynomials via Fox calculus on braid closures.

Used only as a test oracle.  The group of the closure of a braid ``β`` on
``n`` strands is ``<x_1..x_n | β(x_i) = x_i>`` with the Artin action; Fox
derivatives of the relators, abelianized (each ``x_i`` goes to the meridian
variable of its component), give the Alexander matrix.  Deleting one
relator and column ``j`` leaves a square minor equal, up to units, to
``Δ(t)`` for a knot and to ``Δ(x, y) (t_{c(j)} - 1)`` for a 2-component link.
"""

from __future__ import annotations

import sympy as sp

from concord.laurent import LaurentPoly1, LaurentPoly2, normalize_units_1, normalize_units_2

Word = list[tuple[int, int]]  # (generator index, ±1)


def _inv(w: Word) -> Word:
    return [(g, -e) for g, e in reversed(w)]


def _reduce(w: Word) -> Word:
    out: Word = []
    for letter in w:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def _substitute(w: Word, images: list[Word]) -> Word:
    out: Word = []
    for g, e in w:
        out += images[g] if e == 1 else _inv(images[g])
    return _reduce(out)


def artin_images(n: int, braid: list[int]) -> list[Word]:
    """Images of ``x_0..x_{n-1}`` under the braid, letters ``±(i+1)`` for ``σ_i^{±1}``."""
    images: list[Word] = [[(i, 1)] for i in range(n)]
    for letter in braid:
        i = abs(letter) - 1
        step: list[Word] = [[(k, 1)] for k in range(n)]
        if letter > 0:
            step[i] = [(i, 1), (i + 1, 1), (i, -1)]
            step[i + 1] = [(i, 1)]
        else:
            step[i] = [(i + 1, 1)]
            step[i + 1] = [(i + 1, -1), (i, 1), (i + 1, 1)]
        # apply the new generator after the ones already applied
        images = [_substitute(w, step) for w in images]
    return images


def components(n: int, braid: list[int]) -> list[int]:
    perm = list(range(n))
    for letter in braid:
        i = abs(letter) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    comp = [-1] * n
    label = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        k = start
        while comp[k] < 0:
            comp[k] = label
            k = perm[k]
        label += 1
    return comp


def _fox(w: Word, j: int, ab: list[sp.Expr]) -> sp.Expr:
    total, prefix = sp.Integer(0), sp.Integer(1)
    for g, e in w:
        if e == 1:
            if g == j:
                total += prefix
            prefix *= ab[g]
        else:
            prefix /= ab[g]
            if g == j:
                total -= prefix
    return total


def _to_laurent(expr: sp.Expr, syms, cls):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    den_poly = sp.Poly(den, *syms)
    if len(den_poly.terms()) != 1:
        raise ValueError(f"not a Laurent polynomial: {expr}")
    (den_exp, den_c), = den_poly.terms()
    terms = {}
    for exp, c in sp.Poly(sp.expand(num), *syms).terms():
        q = sp.Rational(c, den_c)
        if q.q != 1:
            raise ValueError(f"non-integral coefficient in {expr}")
        terms[tuple(a - b for a, b in zip(exp, den_exp))] = int(q)
    return cls(terms)


def alexander_from_braid(n: int, braid: list[int]):
    """Normalized ``LaurentPoly1`` (knot) or ``LaurentPoly2`` (2-component link)."""
    comp = components(n, braid)
    mu = max(comp) + 1
    if mu > 2:
        raise ValueError("only knots and 2-component links")
    syms = sp.symbols("t") if mu == 1 else sp.symbols("x y")
    syms = (syms,) if mu == 1 else syms
    ab = [syms[c] for c in comp]
    images = artin_images(n, braid)
    relators = [_reduce(images[i] + [(i, -1)]) for i in range(n)]
    j = n - 1
    M = sp.Matrix([[_fox(r, k, ab) for k in range(n) if k != j] for r in relators[:-1]])
    minor = sp.cancel(M.det()) if n > 1 else sp.Integer(1)
    if mu == 1:
        return normalize_units_1(_to_laurent(minor, syms, LaurentPoly1))
    return normalize_units_2(_to_laurent(sp.cancel(minor / (ab[j] - 1)), syms, LaurentPoly2))
