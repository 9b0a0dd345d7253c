"""Integer Laurent polynomials in one variable ``t`` or two variables ``x, y``.

Polynomials are immutable and stored sparsely as ``{exponent tuple: coeff}``
with no zero coefficients.  Alexander polynomials are only defined up to
units ``±t^k`` (resp. ``±x^i y^j``); :func:`normalize_units_1` and
:func:`normalize_units_2` pick the canonical associate used throughout.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "LaurentPoly1",
    "LaurentPoly2",
    "normalize_units_1",
    "normalize_units_2",
    "eval_at_y_one",
    "parse_laurent",
]

Exp = tuple[int, ...]


class LaurentPoly:
    """Sparse Laurent polynomial over Z in the variables ``VARS``."""

    VARS: tuple[str, ...] = ()
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | int = ()):
        n = len(self.VARS)
        acc: dict[Exp, int] = {}
        if isinstance(terms, int):
            items = [((0,) * n, terms)]
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        for exp, c in items:
            if isinstance(exp, int):
                exp = (exp,)
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong arity for {self.VARS}")
            acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[Exp, int]):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * len(cls.VARS): 1})

    @classmethod
    def constant(cls, c: int):
        return cls(c)

    @classmethod
    def monomial(cls, exp: Exp | int, coeff: int = 1):
        return cls({exp: coeff})

    @classmethod
    def gens(cls):
        n = len(cls.VARS)
        return tuple(cls.monomial(tuple(int(i == k) for i in range(n))) for k in range(n))

    # -- basic accessors ------------------------------------------------------

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exponents(self) -> Exp:
        if not self._terms:
            return (0,) * len(self.VARS)
        return tuple(min(e[k] for e in self._terms) for k in range(len(self.VARS)))

    def max_exponents(self) -> Exp:
        if not self._terms:
            return (0,) * len(self.VARS)
        return tuple(max(e[k] for e in self._terms) for k in range(len(self.VARS)))

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return self._raw({tuple(-a * -k for a in e): c ** (-k)})
            raise ValueError("only units can be raised to negative powers")
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: Exp | int):
        """Multiply by the monomial with exponent ``exp``."""
        if isinstance(exp, int):
            exp = (exp,)
        return self._raw({tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def divexact(self, other):
        """Exact quotient ``self / other``; raises ``ArithmeticError`` otherwise."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by a non-polynomial")
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.zero()
        # Shift both to honest polynomials; with the divisor having zero minimal
        # exponents an exact Laurent quotient is itself a polynomial.
        smin, dmin = self.min_exponents(), other.min_exponents()
        num = self.shift(tuple(-a for a in smin))
        den = other.shift(tuple(-a for a in dmin))
        lead_e, lead_c = max(den._terms.items())
        rem = dict(num._terms)
        quot: dict[Exp, int] = {}
        while rem:
            e, c = max(rem.items())
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if min(qe) < 0 or c % lead_c:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            qc = c // lead_c
            quot[qe] = qc
            for de, dc in den._terms.items():
                te = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(te, 0) - qc * dc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        shift = tuple(a - b for a, b in zip(smin, dmin))
        return self._raw(quot).shift(shift)

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)(other)
        if not isinstance(other, LaurentPoly) or other.VARS != self.VARS:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.VARS, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, *values):
        """Evaluate at integer or Fraction values (zero is rejected for negative powers)."""
        if len(values) != len(self.VARS):
            raise ValueError(f"expected {len(self.VARS)} values")
        total = 0
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, k in zip(values, e):
                term *= Fraction(v) ** k
            total += term
        return int(total) if total.denominator == 1 else total

    def substitute_inverse(self):
        """``p(t^-1)`` (all variables inverted)."""
        return self._raw({tuple(-a for a in e): c for e, c in self._terms.items()})

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def associated(self, other) -> bool:
        """True iff ``self`` and ``other`` agree up to a unit ``±monomial``."""
        return _normalize(self) == _normalize(other)

    # -- text ------------------------------------------------------------------

    def _monomial_str(self, e: Exp) -> str:
        parts = []
        for name, k in zip(self.VARS, e):
            if k == 0:
                continue
            parts.append(name if k == 1 else f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.items()):
            mono = self._monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"


class LaurentPoly1(LaurentPoly):
    """Laurent polynomial in ``t``; exponents may be given as plain ints."""

    VARS = ("t",)
    __slots__ = ()

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0):
        """Build ``sum coeffs[k] t^(low + k)``."""
        return cls({(low + k,): c for k, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return {e[0]: c for e, c in self._terms.items()}

    def coefficient(self, k: int) -> int:
        return self._terms.get((k,), 0)

    def degree_span(self) -> tuple[int, int]:
        return self.min_exponents()[0], self.max_exponents()[0]

    def __call__(self, value):
        return self.evaluate(value)


class LaurentPoly2(LaurentPoly):
    """Laurent polynomial in ``x, y``."""

    VARS = ("x", "y")
    __slots__ = ()

    def __call__(self, x, y):
        return self.evaluate(x, y)


def _normalize(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    q = p.shift(tuple(-a for a in p.min_exponents()))
    if min(q._terms.items())[1] < 0:
        q = -q
    return q


def normalize_units_1(p: LaurentPoly1) -> LaurentPoly1:
    """Associate of ``p`` with lowest exponent 0 and positive constant term."""
    return _normalize(p)


def normalize_units_2(p: LaurentPoly2) -> LaurentPoly2:
    """Associate with lowest x- and y-exponents 0 and lex-first term positive."""
    return _normalize(p)


def eval_at_y_one(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute ``y = 1`` and rename ``x`` to ``t``."""
    acc: dict[Exp, int] = {}
    for (i, _j), c in p._terms.items():
        acc[(i,)] = acc.get((i,), 0) + c
    return LaurentPoly1(acc)


_MONO = r"[a-z](?:\^-?\d+)?(?:\s*\*\s*[a-z](?:\^-?\d+)?)*"
_TERM = re.compile(rf"\s*([+-])?\s*(?:(\d+)(?:\s*\*\s*({_MONO}))?|({_MONO}))\s*")
_FACTOR = re.compile(r"([a-z])(?:\^(-?\d+))?")


def parse_laurent(text: str, variables: int | tuple[str, ...] = 1) -> LaurentPoly:
    """Parse the textual form produced by ``str()``, e.g. ``1 - t + t^2``.

    ``variables`` is 1 or 2 (``t`` or ``x, y``).  Variable names outside the
    chosen set raise ``ValueError``.
    """
    cls = LaurentPoly1 if variables in (1, ("t",)) else LaurentPoly2
    names = cls.VARS
    s = text.strip()
    if s in ("", "0"):
        return cls.zero()
    pos, terms = 0, []
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(4) is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        sign, digits, mono_after, mono_alone = m.groups()
        if sign is None and pos > 0:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        mono = mono_after or mono_alone or ""
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        exp = [0] * len(names)
        for var, k in _FACTOR.findall(mono):
            if var not in names:
                raise ValueError(f"unknown variable {var!r} in {text!r}")
            exp[names.index(var)] += int(k) if k else 1
        terms.append((tuple(exp), coeff))
        pos = m.end()
    return cls(terms)
