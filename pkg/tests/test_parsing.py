from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spbw import format_polynomial, make_ring, parse_polynomial
from spbw.errors import PolySyntaxError, UnknownVariable, ValidationFailure
from spbw.parsing import ring_from_spec

from support import ring


@pytest.fixture
def weyl():
    return make_ring("x y", {"y*x": "-x*y + 1"})


def test_reordering_applies_relation(weyl):
    x, y = weyl.gens()
    assert parse_polynomial("y*x", weyl) == -x * y + 1
    assert parse_polynomial("0", weyl) == weyl.zero()
    assert not parse_polynomial("x - x", weyl)


def test_shift_ring_entry():
    S = ring("shift")
    x, y = S.gens()
    f = parse_polynomial("x*y^2+2*x*y", S)
    assert f == x * y**2 + 2 * x * y
    assert len(f) == 2


def test_rationals_parentheses_and_juxtaposition(weyl):
    x, y = weyl.gens()
    assert weyl("1/2*x") == Fraction(1, 2) * x
    assert weyl("(x + 1)(y - 1)") == (x + 1) * (y - 1)
    assert weyl("2 x y") == 2 * x * y
    assert weyl("-(x^2)^2") == -(x**4)
    assert weyl("x/3") == Fraction(1, 3) * x


def test_greedy_names():
    R = make_ring(["x1", "x12"])
    x1, x12 = R.gens()
    assert R("x12*x1") == x12 * x1
    assert R("x1x12") == x1 * x12


def test_unicode_names():
    R = make_ring(["x", "∂"], {"∂*x": "x*∂ + 1"})
    x, d = R.gens()
    assert R("∂x") == x * d + 1


@pytest.mark.parametrize("text, pos", [("x +", 3), ("x ** y", 3), ("(x", 2), ("x^y", 2)])
def test_syntax_errors(weyl, text, pos):
    with pytest.raises(PolySyntaxError) as exc:
        parse_polynomial(text, weyl)
    assert exc.value.position == pos


def test_unknown_variable(weyl):
    with pytest.raises(UnknownVariable):
        parse_polynomial("x*z", weyl)


def test_division_by_polynomial_rejected(weyl):
    with pytest.raises(PolySyntaxError):
        parse_polynomial("1/x", weyl)


def test_format_is_descending_with_explicit_products(weyl):
    assert format_polynomial(weyl("y*x")) == "-x*y + 1"
    assert format_polynomial(weyl.zero()) == "0"
    assert format_polynomial(weyl("-1/2*x^2*y + 3")) == "-1/2*x^2*y + 3"


def test_ring_file_rejects_bad_relations():
    base = {"field": "QQ", "variables": ["x", "y"], "order": {"type": "deglex"}}
    with pytest.raises(ValidationFailure):
        ring_from_spec({**base, "relations": [{"left": "x*y", "right": "y*x"}]})
    with pytest.raises(ValidationFailure):
        ring_from_spec({**base, "relations": [{"left": "y*x", "right": "y*x + 1"}]})
    with pytest.raises(ValidationFailure):
        ring_from_spec({**base, "field": "GF(2)", "relations": []})


terms = st.lists(
    st.tuples(st.fractions(max_denominator=5).filter(bool), st.integers(0, 3), st.integers(0, 3)),
    max_size=5,
)


@settings(max_examples=60, deadline=None)
@given(terms)
def test_print_parse_round_trip(ts):
    for name in ("weyl", "additive_weyl", "quantum_weyl"):
        R = ring(name)
        f = R.zero()
        for c, a, b in ts:
            f = f + c * R.gens()[0] ** a * R.gens()[-1] ** b
        assert parse_polynomial(format_polynomial(f), R) == f
