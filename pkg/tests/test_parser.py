from __future__ import annotations

import pytest
from hypothesis import given, settings

from concord.knots import GenDouble, Mirror, RawSeifert, Reverse, Sum, Torus, Unknot, WhiteheadPos
from concord.matrix import IntMatrix
from concord.parser import KnotSemanticError, KnotSyntaxError, parse_knot_expression as parse
from strategies import knot_exprs

T23 = Torus(2, 3)


def test_grammar_examples():
    assert parse("T(2,3) # r(T(2,3))") == Sum(T23, Reverse(T23))
    assert parse("Wh+(T(2,3) # r(T(2,3)), 0)") == WhiteheadPos(Sum(T23, Reverse(T23)), 0)
    assert parse("D(U,-2,m(T(2,3)),0)") == GenDouble(Unknot(), -2, Mirror(T23), 0)
    assert parse("  U ") == Unknot()
    assert parse("seifert([[-1,1],[0,-1]])") == RawSeifert(IntMatrix(((-1, 1), (0, -1))))
    assert parse("seifert([[-1,1],[0,1]], alt)").alternating


def test_sum_is_left_associative():
    assert parse("U # T(2,3) # T(2,5)") == Sum(Sum(Unknot(), T23), Torus(2, 5))
    assert parse("U # (T(2,3) # T(2,5))") == Sum(Unknot(), Sum(T23, Torus(2, 5)))


@pytest.mark.parametrize(
    "text,pos",
    [("T(2,", 4), ("T(2,3) #", 8), ("X", 0), ("T(2,3))", 6), ("Wh+(U 0)", 6), ("m(U", 3), ("T(2,3) $", 7)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(KnotSyntaxError) as exc:
        parse(text)
    assert exc.value.pos == pos


@pytest.mark.parametrize("text", ["T(2,2)", "T(1,3)", "T(3,2)", "seifert([[1,0],[0,1]])", "seifert([[1]])"])
def test_semantic_errors(text):
    with pytest.raises(KnotSemanticError):
        parse(text)


@settings(max_examples=100, deadline=None)
@given(knot_exprs)
def test_render_parse_round_trip(e):
    assert parse(str(e)) == e
