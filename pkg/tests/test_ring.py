from fractions import Fraction

import pytest

from spbw import (
    Involution,
    MonomialOrder,
    RingPresentation,
    apply_involution,
    check_presentation,
    make_ring,
    multiply,
    normalize_product,
    opposite,
    verify_involution,
)
from spbw.errors import DegreeBoundExceeded, UnverifiedInvolution, ValidationFailure
from spbw.ring import from_opposite, to_opposite

from oracles import WordRewriter
from support import ring


@pytest.fixture
def weyl():
    return make_ring("x y", {"y*x": "-x*y + 1"})


def test_valid_presentations():
    for name in ("weyl", "shift", "anticommuting", "additive_weyl", "quantum_weyl"):
        assert check_presentation(ring(name)).valid


def test_degree_violation_rejected():
    R = RingPresentation(["x", "y"], {(0, 1): (1, {(2, 1): 1})})
    report = check_presentation(R)
    assert not report.valid
    assert report.violations
    with pytest.raises(ValidationFailure):
        make_ring("x y", {"y*x": "x*y + x^2*y"})


def test_zero_coefficient_rejected():
    R = RingPresentation(["x", "y"], {(0, 1): (0, {(0, 0): 1})})
    assert not check_presentation(R).valid


def test_lower_part_must_sit_below_under_chosen_order():
    # y^2 < xy under deglex with x > y, but not with y > x
    assert check_presentation(make_ring("x y", {"y*x": "x*y + y^2"})).valid
    with pytest.raises(ValidationFailure):
        make_ring("x y", {"y*x": "x*y + y^2"}, precedence=["y", "x"])


def test_normalize_product(weyl):
    x, y = weyl.gens()
    assert normalize_product((0, 1), (1, 0), weyl) == -x * y + 1
    assert normalize_product((0, 2), (1, 0), weyl) == x * y**2
    assert normalize_product((1, 0), (1, 0), weyl) == x**2


def test_multiply_examples(weyl):
    x, y = weyl.gens()
    assert multiply(x, y) + multiply(y, x) == weyl.one()
    S = ring("shift")
    sx, sy = S.gens()
    assert sy * sx == sx * sy + sx
    assert sx * S.one() == sx


def test_rational_coefficients():
    W = ring("additive_weyl")
    x1, _, y1, _ = W.gens()
    assert y1 * x1 == Fraction(1, 2) * x1 * y1 + 1


def test_quantum_weyl_relations_hold():
    Q = ring("quantum_weyl")
    x2, x1, d1, d2 = Q.gens()
    assert d2 * d1 == d1 * d2 - d2**2
    assert d1 * x2 == x2 * d1 - x2 * d2
    assert d2 * x2 == 1 + x1 * d2 + x2 * d2
    u = [d1, -d2, Q.zero(), -x1]
    v = [d2 + x1, d2 + d1, x2, d1]
    assert sum((a * b for a, b in zip(u, v)), Q.zero()) == Q.one()


def test_word_rewriter_agrees_on_generator_words():
    Q = ring("quantum_weyl")
    oracle = WordRewriter(Q.n, Q.relations)
    gens = Q.gens()
    for a in range(Q.n):
        for b in range(Q.n):
            for c in range(Q.n):
                f = gens[a] * gens[b] * gens[c]
                word = {(a, b, c): Fraction(1)}
                assert f.term_dict == oracle.normal_form(word)


def test_involution_examples(weyl):
    x, y = weyl.gens()
    theta = Involution(weyl, {"x": "-x", "y": "-y"})
    with pytest.raises(UnverifiedInvolution):
        apply_involution(theta, x)
    assert verify_involution(theta)
    assert apply_involution(theta, x * y) == -x * y + 1
    assert apply_involution(theta, weyl.one()) == weyl.one()
    assert apply_involution(theta, x**2) == x**2


def test_identity_involution():
    C = make_ring("x y")
    assert verify_involution(Involution(C, ["x", "y"]))
    S = ring("shift")
    bad = Involution(S, ["x", "y"])
    assert not verify_involution(bad)
    assert bad.diagnostic


def test_opposite_reverses_products(weyl):
    op = opposite(weyl)
    x, y = weyl.gens()
    elems = [x, y, x * y + 3, y**2 - x, x**2 * y + y]
    for f in elems:
        for g in elems:
            lhs = to_opposite(f, op) * to_opposite(g, op)
            assert from_opposite(lhs, weyl) == g * f


def test_opposite_of_commutative_is_commutative():
    C = make_ring("x y z")
    assert opposite(C).is_commutative()


def test_opposite_additive_weyl_valid():
    op = opposite(ring("additive_weyl"))
    assert check_presentation(op).valid


def test_double_opposite():
    Q = ring("quantum_weyl")
    back = opposite(opposite(Q))
    assert back.variables == Q.variables
    assert back.relations == Q.relations


def test_degree_bound():
    R = make_ring("x y", {"y*x": "-x*y + 1"}, max_degree=4)
    x, y = R.gens()
    assert (x * y) ** 2
    with pytest.raises(DegreeBoundExceeded):
        (x * y) ** 3


def test_lex_order_compare():
    lex = MonomialOrder.lex(2)
    deg = MonomialOrder.deglex(2)
    assert lex.compare((1, 0), (0, 5)) > 0
    assert deg.compare((1, 0), (0, 5)) < 0
