from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from concord.floer import d_lens, tau
from concord.kirby import (
    FramedChain,
    FramedComponent,
    KirbyError,
    RationalSurgery,
    SlamDunkError,
    blow_down,
    blow_down_LK,
    double_branched_cover_genus1,
    genus1_bands,
    slam_dunk_reduce,
)
from concord.knots import (
    GenDouble,
    Mirror,
    Reverse,
    Sum,
    Torus,
    Unknot,
    WhiteheadPos,
    alexander_polynomial,
    connected_sum,
    determinant,
    reverse,
    seifert_matrix,
    signature,
)
from concord.laurent import LaurentPoly1
from concord.matrix import IntMatrix
from oracles.continued_fraction import matrix_fold

U = Unknot()
T23 = Torus(2, 3)
PATTERN = IntMatrix(((0, 1), (0, -2)))
CORPUS = [U, T23, Torus(2, 5), Torus(3, 4), Mirror(T23), Sum(T23, Torus(2, 5)), WhiteheadPos(T23, 0)]


def test_slam_dunk_examples():
    KK = Sum(T23, Reverse(T23))
    assert slam_dunk_reduce(FramedChain.linear([(0, KK), (-4, U)])) == RationalSurgery(KK, Fraction(1, 4))
    assert slam_dunk_reduce(FramedChain.linear([(7, T23)])) == RationalSurgery(T23, Fraction(7))
    for n in range(1, 10):
        r = slam_dunk_reduce(FramedChain.linear([(0, U), (-n, U)]))
        assert r == RationalSurgery(U, Fraction(1, n))
        # S^3_{1/n}(U) is S^3
        assert r.coefficient.numerator == 1 and d_lens(1, 0, 0).value == 0


def test_slam_dunk_zero_division_reports_index():
    with pytest.raises(SlamDunkError) as exc:
        slam_dunk_reduce(FramedChain.linear([(3, T23), (0, U)]))
    assert exc.value.index == 1
    with pytest.raises(SlamDunkError) as exc:
        slam_dunk_reduce(FramedChain.linear([(3, T23), (1, U), (1, U)]))
    assert exc.value.index == 1


def test_slam_dunk_preconditions():
    with pytest.raises(KirbyError):
        slam_dunk_reduce(FramedChain.linear([(0, U), (1, T23)]))
    with pytest.raises(KirbyError):
        slam_dunk_reduce(FramedChain.linear([(0, U), ("1/2", U)]))
    general = FramedChain((FramedComponent(Fraction(0), U),), IntMatrix.zeros(1))
    with pytest.raises(KirbyError):
        slam_dunk_reduce(general)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_slam_dunk_matches_matrix_fold(framings):
    expected = matrix_fold(framings)
    assume(expected is not None)
    chain = FramedChain.linear([(framings[0], T23)] + [(a, U) for a in framings[1:]])
    assert slam_dunk_reduce(chain).coefficient == expected


def test_blow_down_examples():
    hopf = FramedChain.linear([(0, U), (1, U)])
    out = blow_down(hopf, 1)
    assert out.framings == (Fraction(-1),) and out.components[0].knot == U
    lk2 = FramedChain(
        (FramedComponent(Fraction(0), T23), FramedComponent(Fraction(1), U)),
        IntMatrix(((0, 2), (2, 0))),
    )
    out = blow_down(lk2, 1)
    assert out.framings == (Fraction(-4),) and out.components[0].knot is None
    assert blow_down(FramedChain.linear([(0, U), (-1, U)]), 1).framings == (Fraction(1),)


def test_blow_down_inside_chain_keeps_chain():
    c = FramedChain.linear([(2, T23), (1, U), (3, U)])
    out = blow_down(c, 1)
    assert out.chain and out.framings == (Fraction(1), Fraction(2))
    assert out.linking[0, 1] == -1 and out.components[0].knot == T23


def test_blow_down_errors():
    c = FramedChain.linear([(0, U), (2, U)])
    with pytest.raises(KirbyError):
        blow_down(c, 1)
    with pytest.raises(KirbyError):
        blow_down(FramedChain.linear([(0, U), (1, T23)]), 1)
    with pytest.raises(KirbyError):
        blow_down(FramedChain.linear([(1, U)]), 0)
    with pytest.raises(KirbyError):
        blow_down(c, 5)


@st.composite
def framed_links(draw):
    n = draw(st.integers(2, 5))
    lk = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lk[i][j] = lk[j][i] = draw(st.integers(-3, 3))
    framings = [draw(st.integers(-5, 5)) for _ in range(n)]
    u = draw(st.integers(0, n - 1))
    framings[u] = draw(st.sampled_from([1, -1]))
    comps = tuple(FramedComponent(Fraction(f), U) for f in framings)
    return FramedChain(comps, IntMatrix.from_rows(lk)), u


@settings(max_examples=100, deadline=None)
@given(framed_links())
def test_blow_down_scales_determinant_by_epsilon(data):
    c, u = data
    eps = int(c.framings[u])
    assert c.linking_matrix().det() == eps * blow_down(c, u).linking_matrix().det()


def test_blow_down_LK():
    assert blow_down_LK(U) == GenDouble(U, -2, U, 0)
    assert alexander_polynomial(blow_down_LK(U)) == LaurentPoly1.one()
    assert signature(blow_down_LK(U)) == 0
    assert tau(blow_down_LK(T23)).value == 1
    assert tau(blow_down_LK(Mirror(T23))).value == 0


def test_cover_examples():
    c = double_branched_cover_genus1(PATTERN, (T23, U))
    assert c.framings == (0, -4)
    assert c.components[0].knot == Sum(T23, Reverse(T23)) and c.components[1].knot == U
    tref = double_branched_cover_genus1(seifert_matrix(T23), (U, U))
    assert tref.framings == (-2, -2) and abs(tref.linking_matrix().det()) == 3
    wh = double_branched_cover_genus1(IntMatrix(((-1, 1), (0, 0))), (U, U))
    assert wh.framings == (-2, 0) and abs(wh.linking_matrix().det()) == 1
    with pytest.raises(KirbyError):
        double_branched_cover_genus1(IntMatrix(((1, 0), (0, 1))), (U, U))
    with pytest.raises(KirbyError):
        double_branched_cover_genus1(seifert_matrix(Torus(2, 5)), (U, U))


@pytest.mark.parametrize("K", CORPUS, ids=str)
def test_pipeline_identity(K):
    knot = blow_down_LK(K)
    cover = double_branched_cover_genus1(seifert_matrix(knot), genus1_bands(knot))
    assert slam_dunk_reduce(cover) == RationalSurgery(connected_sum(K, reverse(K)), Fraction(1, 4))


@pytest.mark.parametrize("K", [T23, WhiteheadPos(T23, 3), GenDouble(U, -2, T23, 0), GenDouble(T23, 1, U, -1)], ids=str)
def test_cover_determinant_matches_knot(K):
    cover = double_branched_cover_genus1(seifert_matrix(K), genus1_bands(K))
    assert abs(cover.linking_matrix().det()) == determinant(K)


def test_genus1_bands():
    assert genus1_bands(GenDouble(Torus(2, 5), -2, T23, 0)) == (T23, Torus(2, 5))
    assert genus1_bands(WhiteheadPos(T23, 0)) == (U, T23)
    with pytest.raises(KirbyError):
        genus1_bands(Torus(2, 5))
    with pytest.raises(KirbyError):
        genus1_bands(Mirror(T23))


def test_json_round_trip():
    c = double_branched_cover_genus1(PATTERN, (T23, U))
    assert FramedChain.from_json(json.dumps(c.to_json())) == c
    data = {"components": [{"framing": "1/2", "knot": "T(2,3)"}, {"framing": "3", "knot": "?"}],
            "linking": [[0, 2], [2, 3]]}
    c = FramedChain.from_json(data)
    assert not c.chain and c.components[1].knot is None and c.framings[0] == Fraction(1, 2)
    assert FramedChain.from_json(c.to_json()) == c


def test_json_rejects_inconsistent_diagonal():
    with pytest.raises(KirbyError):
        FramedChain.from_json({"components": [{"framing": "2", "knot": "U"}], "linking": [[3]]})
    with pytest.raises(KirbyError):
        FramedChain.from_json({"components": [{"framing": "0", "knot": "U"}] * 2,
                               "linking": [[0, 1], [2, 0]]})
