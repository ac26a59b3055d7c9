"""One-sided and two-sided inverses of matrices over a solvable ring."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UnverifiedInvolution
from .groebner import buchberger, member, unit_vector
from .module import ModuleOrder, PolyMatrix
from .ring import apply_involution
from .syzygy import syzygies


@dataclass
class InverseCertificate:
    inverse: PolyMatrix
    side: str
    verification: PolyMatrix
    other_verification: PolyMatrix | None = None

    def verify(self, F):
        """Recompute the defining products from scratch."""
        if self.side == "left":
            return (self.inverse @ F).is_identity()
        if self.side == "right":
            return (F @ self.inverse).is_identity()
        return (self.inverse @ F).is_identity() and (F @ self.inverse).is_identity()


def _default_order(ring, order):
    return order if order is not None else ModuleOrder(ring.order, "TOP")


def _coefficient_matrix(gb, rank):
    """``K`` with ``e_i = sum_k K[k, i] g_k`` (left) or ``g_k K[k, i]`` (right)."""
    cols = []
    for i in range(rank):
        k = member(unit_vector(gb.ring, rank, i), gb)
        if k is None:
            return None
        cols.append(k)
    return PolyMatrix.from_columns(gb.ring, cols, rows=len(gb.generators))


def left_inverse(F, order=None):
    """``L`` with ``L F = I_s`` from a left Gröbner basis of the rows of ``F``."""
    ring = F.ring
    r, s = F.shape
    if r < s:
        return None
    if s == 0:
        L = PolyMatrix.zero(ring, 0, r)
        return InverseCertificate(L, "left", L @ F)
    gb = buchberger(F.row_list(), _default_order(ring, order), "left", ring, s)
    K = _coefficient_matrix(gb, s)
    if K is None:
        return None
    L = K.T @ gb.transition.T
    check = L @ F
    if not check.is_identity():
        raise AssertionError("left inverse failed verification")
    return InverseCertificate(L, "left", check)


def square_inverse(F, order=None, fast=False):
    """Two-sided inverse; ``fast`` skips the syzygy test (valid for Noetherian rings)."""
    if F.rows != F.cols:
        raise ValueError("square_inverse needs a square matrix")
    cert = left_inverse(F, order)
    if cert is None:
        return None
    if not fast:
        syz = syzygies(F.row_list(), _default_order(F.ring, order), "left", F.ring, F.cols)
        if not syz.is_zero():
            return None
    L = cert.inverse
    right = F @ L
    if not right.is_identity():
        raise AssertionError("left inverse of a square matrix is not a right inverse")
    return InverseCertificate(L, "two-sided", cert.verification, right)


def right_inverse(F, order=None, method="opposite"):
    """``L`` with ``F L = I_r`` from a right Gröbner basis of the columns of ``F``."""
    ring = F.ring
    r, s = F.shape
    if s < r:
        return None
    if r == 0:
        L = PolyMatrix.zero(ring, s, 0)
        return InverseCertificate(L, "right", F @ L)
    gb = buchberger(F.column_list(), _default_order(ring, order), "right", ring, r, method)
    K = _coefficient_matrix(gb, r)
    if K is None:
        return None
    L = gb.transition @ K
    check = F @ L
    if not check.is_identity():
        raise AssertionError("right inverse failed verification")
    return InverseCertificate(L, "right", check)


def right_inverse_involution(F, theta, order=None):
    """Right inverse through a left Gröbner basis of the columns of ``theta(F)``."""
    if not theta.verified:
        raise UnverifiedInvolution("involution has not passed verify_involution")
    ring = F.ring
    r, s = F.shape
    if s < r:
        return None
    if r == 0:
        L = PolyMatrix.zero(ring, s, 0)
        return InverseCertificate(L, "right", F @ L)
    th = lambda f: apply_involution(theta, f)
    tF = F.map(th)
    gb = buchberger(tF.column_list(), _default_order(ring, order), "left", ring, r)
    K = _coefficient_matrix(gb, r)
    if K is None:
        return None
    J = gb.transition
    H = J.map(th) @ K.map(th)
    check = F @ H
    if not check.is_identity():
        raise AssertionError("involution right inverse failed verification")
    return InverseCertificate(H, "right", check)
