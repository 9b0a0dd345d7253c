from __future__ import annotations

import json

import pytest
from hypothesis import given, settings

from concord.ccomplex import (
    LK_A_PM,
    LK_A_PP,
    CComplex,
    CComplexError,
    build_LK_ccomplex,
    hopf_ccomplex,
    torres_check,
    two_variable_alexander,
)
from concord.certify import alexander_is_one, check_LK_alexander
from concord.knots import Reverse, Sum, Torus, Unknot, WhiteheadPos, alexander_polynomial
from concord.laurent import LaurentPoly1, LaurentPoly2, normalize_units_2, parse_laurent
from concord.matrix import IntMatrix
from oracles.ccomplex_geometry import three_clasp_hopf, two_clasp_torus_link
from oracles.fox import alexander_from_braid
from strategies import unimodular

ONE = LaurentPoly2.one()
CORPUS_KNOTS = [Unknot(), Torus(2, 3), Torus(2, 5), Torus(3, 4), Sum(Torus(2, 3), Reverse(Torus(2, 3))),
                WhiteheadPos(Torus(2, 3), 1)]


def from_oracle(data, lk):
    n = len(data["pp"])
    return CComplex(n, *(IntMatrix.from_rows(data[k]) for k in ("pp", "pm", "mp", "mm")), lk=lk)


def torus_link_24() -> CComplex:
    return from_oracle(two_clasp_torus_link(), 2)


def corpus() -> list[CComplex]:
    return [hopf_ccomplex(), torus_link_24()] + [build_LK_ccomplex(k) for k in CORPUS_KNOTS]


def test_frozen_LK_matrices_match_geometric_model():
    data = three_clasp_hopf()
    assert IntMatrix.from_rows(data["pp"]) == LK_A_PP
    assert IntMatrix.from_rows(data["pm"]) == LK_A_PM
    assert IntMatrix.from_rows(data["mp"]) == LK_A_PM.T
    assert IntMatrix.from_rows(data["mm"]) == LK_A_PP.T


def test_hopf_is_one():
    assert two_variable_alexander(hopf_ccomplex()) == ONE


@pytest.mark.parametrize("K", CORPUS_KNOTS, ids=str)
def test_LK_is_one_and_independent_of_K(K):
    c = build_LK_ccomplex(K)
    assert c == build_LK_ccomplex(Unknot())
    assert two_variable_alexander(c) == ONE
    assert check_LK_alexander(K)


def test_torus_link_matches_fox_oracle():
    cooper = two_variable_alexander(torus_link_24())
    assert cooper == alexander_from_braid(2, [1, 1, 1, 1])
    assert cooper == parse_laurent("1 + x*y", 2)


def test_hopf_fox_oracle_agrees():
    assert alexander_from_braid(2, [1, 1]) == two_variable_alexander(hopf_ccomplex())


def test_torres_examples():
    one1 = LaurentPoly1.one()
    assert torres_check(ONE, 1, one1)
    assert not torres_check(ONE, 2, one1)
    assert torres_check(two_variable_alexander(torus_link_24()), 2, one1)
    assert torres_check(LaurentPoly2.zero(), 0, one1)
    assert not torres_check(ONE, 0, one1)


@pytest.mark.parametrize("c", corpus(), ids=lambda c: f"n{c.basis_size}-lk{c.lk}")
def test_torres_on_corpus(c):
    assert torres_check(two_variable_alexander(c), c.lk, LaurentPoly1.one())


@pytest.mark.parametrize("c", corpus(), ids=lambda c: f"n{c.basis_size}-lk{c.lk}")
def test_symmetry_on_corpus(c):
    p = two_variable_alexander(c)
    assert normalize_units_2(p.substitute_inverse()) == p


@settings(max_examples=100, deadline=None)
@given(unimodular(2))
def test_congruence_invariance(P):
    assert abs(P.det()) == 1
    c = build_LK_ccomplex(Unknot())
    assert two_variable_alexander(c.congruent(P)) == two_variable_alexander(c)


def test_corrupted_ccomplex_is_caught():
    bad = CComplex(2, IntMatrix(((1, -1), (0, 1))), LK_A_PM, LK_A_PM.T, IntMatrix(((1, 0), (-1, 1))), lk=1)
    assert not alexander_is_one(bad)


def test_json_round_trip():
    c = build_LK_ccomplex(Torus(2, 3))
    text = json.dumps(c.to_json())
    assert CComplex.from_json(text) == c
    assert CComplex.from_json(hopf_ccomplex().to_json()) == hopf_ccomplex()


def test_invalid_ccomplex():
    z2 = IntMatrix.zeros(2)
    with pytest.raises(CComplexError):
        CComplex(2, LK_A_PP, z2, z2, LK_A_PP, lk=1)  # A_mm must be A_pp^T
    with pytest.raises(CComplexError):
        CComplex(3, LK_A_PP, z2, z2, LK_A_PP.T, lk=1)
    with pytest.raises(CComplexError):
        CComplex.from_json({"basis_size": 0, "lk": 1, "A_pp": [], "A_pm": [], "A_mp": []})


def test_component_polys_default_trivial():
    c = build_LK_ccomplex(Torus(2, 3))
    assert c.component_polys == (LaurentPoly1.one(), LaurentPoly1.one())
    assert alexander_polynomial(Unknot()) == c.component_polys[0]
