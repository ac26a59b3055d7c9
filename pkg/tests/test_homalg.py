import pytest

from spbw import (
    FreeResolution,
    PolyMatrix,
    cokernel_resolution,
    fold_resolution_step,
    free_resolution,
    is_stably_free,
    minimal_presentation,
    projective_dimension,
    projective_dimension_ffr,
    stably_free,
)
from spbw.errors import FoldFailed, InvalidSplitting, NotExact, NotFinite
from spbw.groebner import unit_vector

from support import mat, matrix, ring


@pytest.fixture
def shift():
    return ring("shift")


def reference_resolution(B):
    return FreeResolution([matrix(B, n) for n in ("projdim_F0", "projdim_F1", "projdim_F2")])


def test_fold_reproduces_reference_H1(shift):
    res = reference_resolution(shift)
    folded = fold_resolution_step(res, 2, matrix(shift, "projdim_G2T"))
    assert folded.length == 1
    assert folded.maps[1] == matrix(shift, "projdim_H1")
    assert folded.check_compositions()


def test_fold_rejects_bad_splitting(shift):
    res = reference_resolution(shift)
    G = matrix(shift, "projdim_G2T")
    with pytest.raises(InvalidSplitting):
        fold_resolution_step(res, 2, G + G)
    with pytest.raises(ValueError):
        fold_resolution_step(res, 1, G)


def test_pd_from_reference_resolution(shift):
    report = projective_dimension_ffr(reference_resolution(shift))
    assert report.pd == 1
    assert report.fold_trace == [(2, True), (1, False)]
    assert (matrix(shift, "projdim_F2").T @ report.certificates[0].inverse).is_identity()


def test_pd_from_generators(shift):
    gens = matrix(shift, "projdim_gens").row_list()
    report = projective_dimension(gens)
    assert report.pd == 1
    assert report.method == "resolution"
    assert projective_dimension_ffr(report.resolution_used).pd == 1


def test_pd_of_free_module():
    R = ring("weyl")
    gens = [unit_vector(R, 2, 0), unit_vector(R, 2, 1)]
    assert projective_dimension(gens).pd == 0
    F1 = matrix(ring("weyl_yx"), "minpres_F1")
    assert projective_dimension(relations=F1).pd == 0


def test_pd_needs_finite_resolution(shift):
    res = FreeResolution([matrix(shift, "projdim_F0")], finite=False)
    with pytest.raises(NotFinite):
        projective_dimension_ffr(res)


def test_anticommuting_example_not_stably_free():
    C = ring("anticommuting")
    gens = matrix(C, "anticomm_gens").row_list()
    verdict, res, trace = stably_free(gens)
    assert not verdict
    assert res.ranks() == [6, 2]
    assert trace == [(1, False)]
    assert projective_dimension(gens).pd == 1


def test_weyl_relation_module_stably_free():
    A = ring("weyl_yx")
    F1 = matrix(A, "minpres_F1")
    with pytest.raises(NotExact):
        is_stably_free(F1)
    verdict, res, trace = stably_free(relations=F1)
    assert verdict
    assert verdict.injectivity.is_zero()


def test_injective_relations_decided_directly():
    Q = ring("quantum_weyl")
    F1 = matrix(Q, "basis_F1")
    verdict = is_stably_free(F1)
    assert verdict.stably_free
    assert (F1.T @ verdict.certificate.inverse).is_identity()
    R = ring("weyl")
    assert is_stably_free(PolyMatrix.zero(R, 3, 0)).stably_free


def test_non_stably_free_injective():
    R = ring("weyl")
    F1 = mat(R, [["x"], ["x^2"]])
    verdict = is_stably_free(F1)
    assert not verdict
    assert verdict.certificate is None


def test_minimal_presentation_of_weyl_module():
    A = ring("weyl_yx")
    mp = minimal_presentation(cokernel_resolution(matrix(A, "minpres_F1")))
    assert mp.H1 == mat(A, [["y^2", "x*y - 1"], ["-x*y", "x^2"], ["y", "x"]])
    assert mp.H0 == mat(A, [[1, 0, 0], [0, 1, 0]])
    assert mp.injectivity.is_zero()
    assert mp.splitting.inverse == mat(A, [[0, -1], [-1, 0], ["x", "y"]])
    assert (mp.H1.T @ mp.splitting.inverse).is_identity()
    assert mp.fold_trace == [(2, True), (1, True)]


def test_minimal_presentation_free_and_injective_inputs():
    R = ring("weyl")
    mp = minimal_presentation(free_resolution([unit_vector(R, 2, 0), unit_vector(R, 2, 1)]))
    assert mp.H1.shape == (2, 0)
    Q = ring("quantum_weyl")
    F1 = matrix(Q, "basis_F1")
    mp = minimal_presentation(cokernel_resolution(F1))
    assert mp.H1 == F1


def test_minimal_presentation_fails_when_not_stably_free():
    C = ring("anticommuting")
    gens = matrix(C, "anticomm_gens").row_list()
    with pytest.raises(FoldFailed) as exc:
        minimal_presentation(free_resolution(gens))
    assert exc.value.step == 1
