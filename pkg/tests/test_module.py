import pytest
from hypothesis import given, settings, strategies as st

from spbw import (
    Cmp,
    ModuleOrder,
    ModuleTerm,
    PolyMatrix,
    compare_module_terms,
    matrix_apply,
    matrix_compose,
    right_apply,
    right_compose,
)
from spbw.errors import DimensionMismatch
from spbw.module import block_diag, hstack, vstack

from support import mat, matrix, ring, vec


@pytest.fixture
def weyl():
    return ring("weyl")


def test_top_order(weyl):
    top = ModuleOrder(weyl.order, "TOP")
    x, y = (1, 0), (0, 1)
    assert compare_module_terms(top, ModuleTerm(x, 0), ModuleTerm(y, 1)) == Cmp.GT
    assert compare_module_terms(top, ModuleTerm(x, 0), ModuleTerm(x, 1)) == Cmp.LT
    assert compare_module_terms(top, ModuleTerm(x, 1), ModuleTerm(x, 1)) == Cmp.EQ


def test_toprev_order(weyl):
    rev = ModuleOrder(weyl.order, "TOPREV")
    x = (1, 0)
    assert compare_module_terms(rev, ModuleTerm(x, 0), ModuleTerm(x, 1)) == Cmp.GT


def test_explicit_precedence(weyl):
    o = ModuleOrder(weyl.order, "TOP", position_precedence=(1, 2, 0))
    m = (0, 0)
    assert compare_module_terms(o, ModuleTerm(m, 1), ModuleTerm(m, 2), rank=3) == Cmp.GT
    assert compare_module_terms(o, ModuleTerm(m, 0), ModuleTerm(m, 2), rank=3) == Cmp.LT


def test_bad_precedence_rejected(weyl):
    with pytest.raises(ValueError):
        ModuleOrder(weyl.order, "TOP", (0, 0)).ranks(2)
    with pytest.raises(ValueError):
        ModuleOrder(weyl.order, "SIDEWAYS")


def test_matrix_apply_examples(weyl):
    F = matrix(weyl, "leftinv_F")
    e1 = vec(weyl, 1, 0)
    assert matrix_apply(F, e1) == F.column(0)
    assert matrix_apply(F, vec(weyl, "y", 0)) == vec(weyl, "y", "-x*y^2 + y", "x^2*y", "y")
    I = PolyMatrix.identity(weyl, 2)
    assert matrix_apply(I, vec(weyl, "x", "y")) == vec(weyl, "x", "y")
    with pytest.raises(DimensionMismatch):
        matrix_apply(F, vec(weyl, 1, 0, 0))


def test_compose_identity(weyl):
    F = matrix(weyl, "leftinv_F")
    assert matrix_compose(PolyMatrix.identity(weyl, 4), F) == F
    assert matrix_compose(F, PolyMatrix.identity(weyl, 2)) == F


def test_reference_left_inverse_uses_plain_product(weyl):
    # the reference L satisfies L F = I as a plain product; the composite-map
    # matrix (F^T L^T)^T differs because the ring is not commutative
    F = matrix(weyl, "leftinv_F")
    L = matrix(weyl, "leftinv_L_reference")
    assert (L @ F).is_identity()
    assert not matrix_compose(L, F).is_identity()


def test_minimal_presentation_splitting_as_composite():
    R = ring("weyl_yx")
    H1 = mat(R, [["y^2", "x*y - 1"], ["-x*y", "x^2"], ["y", "x"]])
    L1T = matrix(R, "rightinv_L_reference")
    assert matrix_compose(L1T.T, H1).is_identity()


def test_right_conventions(weyl):
    F = matrix(weyl, "rightinv_F")
    L = matrix(weyl, "rightinv_L_reference")
    assert right_compose(F, L).is_identity()
    assert right_apply(F, L.column(0)) == vec(weyl, 1, 0)


def test_empty_dimensions(weyl):
    Z = PolyMatrix.zero(weyl, 3, 0)
    assert Z.shape == (3, 0)
    assert Z.T.shape == (0, 3)
    assert (Z @ PolyMatrix.zero(weyl, 0, 2)).is_zero()
    assert (Z @ PolyMatrix.zero(weyl, 0, 2)).shape == (3, 2)


def test_stacking(weyl):
    A = mat(weyl, [["x", 1]])
    B = mat(weyl, [["y", 0]])
    assert vstack(weyl, [A, B]) == mat(weyl, [["x", 1], ["y", 0]])
    assert hstack(weyl, [A, B]) == mat(weyl, [["x", 1, "y", 0]])
    D = block_diag(weyl, A, B)
    assert D.shape == (2, 4)
    assert D == mat(weyl, [["x", 1, 0, 0], [0, 0, "y", 0]])


small = st.lists(st.sampled_from(["0", "1", "x", "y", "x*y", "y^2 - 1", "-2*x + y"]), min_size=4, max_size=4)


@settings(max_examples=40, deadline=None)
@given(small, small, st.lists(st.sampled_from(["0", "1", "x", "y", "x - y"]), min_size=2, max_size=2))
def test_compose_matches_apply(g, f, a):
    R = ring("weyl")
    G = mat(R, [g[:2], g[2:]])
    F = mat(R, [f[:2], f[2:]])
    v = vec(R, *a)
    assert matrix_apply(matrix_compose(G, F), v) == matrix_apply(G, matrix_apply(F, v))
    assert right_apply(right_compose(G, F), v) == right_apply(G, right_apply(F, v))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), min_size=3, max_size=3),
       st.sampled_from(["TOP", "TOPREV"]), st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_module_order_total_and_compatible(terms, scheme, shift):
    R = ring("weyl")
    o = ModuleOrder(R.order, scheme)
    ts = [ModuleTerm((a, b), p) for a, b, p in terms]
    c = lambda s, t: compare_module_terms(o, s, t, rank=3)
    for s in ts:
        for t in ts:
            assert c(s, t) == -c(t, s)
            if c(s, t) == Cmp.LT:
                m = lambda u: ModuleTerm(tuple(e + d for e, d in zip(u.monomial, shift)), u.position)
                assert c(m(s), m(t)) == Cmp.LT
    a, b, d = sorted(ts, key=lambda t: o.term_key(3)((t.position, t.monomial)))
    assert c(a, b) <= 0 and c(b, d) <= 0 and c(a, d) <= 0
