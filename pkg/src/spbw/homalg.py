"""Projective dimension, stably-freeness and minimal presentations.

All three rest on one operation: if the last map ``F_m`` of a finite free
resolution has ``F_m^T`` right invertible with right inverse ``G_m^T``, the
resolution can be shortened by one step with

    H_{m-1} = [F_{m-1}; G_m]        (stack rows)
    H_{m-2} = [F_{m-2}  0]          (pad columns)
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FoldFailed, InvalidSplitting, NotExact, NotFinite
from .inverses import InverseCertificate, right_inverse
from .module import PolyMatrix, hstack, vstack
from .syzygy import (
    FreeResolution,
    SyzygyBasis,
    cokernel_resolution,
    free_resolution,
    syzygies,
)


@dataclass
class PdReport:
    pd: int
    resolution_used: FreeResolution
    fold_trace: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    method: str = "ffr"

    def __post_init__(self):
        if self.pd > self.resolution_used.length:
            raise ValueError("pd cannot exceed the resolution length")


@dataclass
class MinimalPresentation:
    """Exact ``0 -> A^s --H1--> A^r --H0--> M -> 0``."""

    H1: PolyMatrix
    H0: PolyMatrix
    injectivity: SyzygyBasis
    splitting: InverseCertificate | None
    resolution: FreeResolution
    fold_trace: list = field(default_factory=list)


@dataclass
class StablyFreeVerdict:
    stably_free: bool
    certificate: InverseCertificate | None
    injectivity: SyzygyBasis | None = None

    def __bool__(self):
        return self.stably_free


def fold_resolution_step(resolution, m, g_transpose):
    """Shorten ``resolution`` at its last map ``F_m`` given ``G_m^T`` with ``F_m^T G_m^T = I``."""
    maps = resolution.maps
    if m != resolution.length or m < 2:
        raise ValueError(f"can only fold the last map of a resolution of length >= 2 (m={m})")
    ring = resolution.ring
    Fm = maps[m]
    if g_transpose.shape != (Fm.rows, Fm.cols) or not (Fm.T @ g_transpose).is_identity():
        raise InvalidSplitting(f"G_{m}^T is not a right inverse of F_{m}^T")
    top = vstack(ring, [maps[m - 1], g_transpose.T])
    prev = maps[m - 2]
    padded = hstack(ring, [prev, PolyMatrix.zero(ring, prev.rows, Fm.cols)])
    res = FreeResolution(maps[: m - 2] + [padded, top], True, resolution.quotient)
    if not res.check_compositions():
        raise InvalidSplitting("folded resolution does not compose to zero")
    return res


def _cascade(resolution, order=None, method="opposite"):
    """Right-inverse cascade; returns ``(pd, folded resolution, trace, certificates)``."""
    if not resolution.finite:
        raise NotFinite("projective dimension needs a finite free resolution")
    res = resolution
    j = res.length
    trace, certs = [], []
    if j == 0:
        return 0, res, trace, certs
    while True:
        cert = right_inverse(res.maps[j].T, order, method)
        trace.append((j, cert is not None))
        if cert is None:
            return j, res, trace, certs
        if not cert.verify(res.maps[j].T):
            raise InvalidSplitting("right inverse failed re-verification")
        certs.append(cert)
        if j == 1:
            return 0, res, trace, certs
        res = fold_resolution_step(res, j, cert.inverse)
        j -= 1


def projective_dimension_ffr(resolution, order=None, method="opposite"):
    """pd from a finite free resolution by repeated folding."""
    pd, res, trace, certs = _cascade(resolution, order, method)
    return PdReport(pd, res, trace, certs, "ffr")


def _resolve(generators=None, relations=None, max_length=None, order=None):
    if (generators is None) == (relations is None):
        raise ValueError("give exactly one of generators or relations")
    if generators is not None:
        return free_resolution(generators, max_length, order)
    return cokernel_resolution(relations, max_length, order)


def projective_dimension(generators=None, gld_bound=None, relations=None, order=None,
                         method="opposite"):
    """pd as the least ``i`` with ``Im(f_i)`` projective.

    Projectivity of each image is decided by running the folding cascade on
    the tail ``[F_i, ..., F_m]`` of one finite free resolution.
    """
    ring = (relations.ring if relations is not None
            else next(e.ring for g in generators for e in g))
    if gld_bound is None:
        gld_bound = ring.n
    res = _resolve(generators, relations, gld_bound, order)
    trace = []
    for i in range(0, res.length + 1):
        if i == 0:
            tail = res
        else:
            tail = FreeResolution(res.maps[i:], True, False)
        pd, _, steps, certs = _cascade(tail, None, method)
        # steps of the image cascade are numbered in the full resolution
        trace.extend((j + i, ok) for j, ok in steps)
        if pd == 0:
            return PdReport(i, res, trace, certs, "resolution")
    raise AssertionError("the last image of a finite free resolution is always free")


def is_stably_free(F1, injectivity=None, order=None, method="opposite"):
    """Stably-freeness of ``coker(F1)`` for an injective ``F1``: ``F1^T`` right invertible."""
    ring = F1.ring
    if F1.cols == 0:
        empty = SyzygyBasis(ring, "left", [], 0)
        return StablyFreeVerdict(True, right_inverse(F1.T), empty)
    recomputed = syzygies(F1.column_list(), order, "left", ring, F1.rows)
    if injectivity is not None and injectivity.is_zero() != recomputed.is_zero():
        raise NotExact("injectivity certificate does not match the syzygies of F1")
    if not recomputed.is_zero():
        raise NotExact("the columns of F1 have nonzero syzygies; fold to a minimal presentation first")
    cert = right_inverse(F1.T, order, method)
    return StablyFreeVerdict(cert is not None, cert, recomputed)


def stably_free(generators=None, relations=None, max_length=None, order=None,
                method="opposite"):
    """Stably-freeness of any finitely presented module via resolution folding."""
    res = _resolve(generators, relations, max_length, order)
    pd, folded, trace, certs = _cascade(res, None, method)
    if pd != 0:
        return StablyFreeVerdict(False, None), res, trace
    if folded.length == 0:
        return StablyFreeVerdict(True, None, SyzygyBasis(folded.ring, "left", [], 0)), res, trace
    injectivity = syzygies(folded.maps[1].column_list(), None, "left", folded.ring,
                           folded.maps[1].rows)
    return StablyFreeVerdict(True, certs[-1], injectivity), res, trace


def minimal_presentation(resolution, order=None, method="opposite"):
    """Fold a stably free module's resolution down to ``0 -> A^s -> A^r -> M -> 0``."""
    if not resolution.finite:
        raise NotFinite("minimal presentation needs a finite free resolution")
    res = resolution
    ring = res.ring
    trace = []
    if res.length == 0:
        F0 = res.maps[0]
        H1 = PolyMatrix.zero(ring, F0.cols, 0)
        empty = SyzygyBasis(ring, "left", [], 0)
        return MinimalPresentation(H1, F0, empty, right_inverse(H1.T), res, trace)
    j = res.length
    while j >= 2:
        cert = right_inverse(res.maps[j].T, order, method)
        trace.append((j, cert is not None))
        if cert is None:
            raise FoldFailed(j)
        res = fold_resolution_step(res, j, cert.inverse)
        j -= 1
    H1, H0 = res.maps[1], res.maps[0]
    injectivity = syzygies(H1.column_list(), order, "left", ring, H1.rows)
    if not injectivity.is_zero():
        raise NotExact("folded relation matrix is not injective")
    splitting = right_inverse(H1.T, order, method)
    trace.append((1, splitting is not None))
    if splitting is None:
        raise FoldFailed(1)
    return MinimalPresentation(H1, H0, injectivity, splitting, res, trace)
