"""Free bases of stably free modules of large enough rank.

A left module ``M = A^{1 x r} / rows(F1^T)`` with ``F1^T G1^T = I_s`` is
stably free.  If ``r - s`` is at least the stable rank, an invertible
``U`` with ``U G1^T = [I_s; 0]`` is built from elementary matrices, one
unimodular column of ``V G1^T`` at a time; rows ``s..r-1`` of ``U`` then
project onto a basis of ``M``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InvalidStabilization, NotStablyFree, StabilizationFailed
from .inverses import left_inverse
from .module import PolyMatrix, block_diag

DEFAULT_MAX_TRIES = 20000


@dataclass
class UnimodularWitness:
    """Column ``v`` and row ``u`` with ``sum_i u_i v_i = 1``."""

    v: tuple
    u: tuple

    def verify(self):
        ring = self.v[0].ring
        acc = ring.zero()
        for a, b in zip(self.u, self.v):
            acc = acc + a * b
        return len(self.u) == len(self.v) and acc == ring.one()


@dataclass
class StabilizationHint:
    a: list
    b: list | None = None


@dataclass
class StabilizationData:
    """``v'_i = v_i + a_i v_r`` with ``v' = (v'_1 .. v'_{r-1})`` unimodular."""

    a: tuple
    witness: UnimodularWitness

    @property
    def v_prime(self):
        return self.witness.v


@dataclass
class ElementaryFactorization:
    factors: list
    U: PolyMatrix
    intermediates: list = field(default_factory=list)

    def inverse(self):
        return _inverse_of_factors(self.factors)


@dataclass
class BasisCertificate:
    U: PolyMatrix
    U_inverse: PolyMatrix
    check: PolyMatrix
    basis: list
    stable_rank_bound: int
    F1: PolyMatrix
    G1T: PolyMatrix
    factors: list = field(default_factory=list)
    steps: list = field(default_factory=list)

    def verify(self):
        """Recompute every identity the basis claim depends on."""
        r, s = self.F1.shape
        ring = self.F1.ring
        I = PolyMatrix.identity(ring, r)
        target = PolyMatrix.identity(ring, r).submatrix(range(r), range(s))
        return (
            (self.F1.T @ self.G1T).is_identity()
            and self.U @ self.U_inverse == I
            and self.U_inverse @ self.U == I
            and self.U @ self.G1T == target
            and self.U.submatrix(range(s), range(r)) == self.F1.T
            and self.basis == [self.U.row(i) for i in range(s, r)]
        )


def _elementary(ring, r, entries):
    """Identity plus the ``{(i, j): value}`` off-diagonal entries."""
    rows = [[ring.one() if i == j else ring.zero() for j in range(r)] for i in range(r)]
    for (i, j), val in entries.items():
        rows[i][j] = ring.coerce(val)
    return PolyMatrix(ring, r, r, rows)


def _inverse_of_factors(factors):
    """Each factor is ``I + N`` with ``N^2 = 0``, so its inverse is ``I - N``."""
    ring = factors[0].ring if factors else None
    if ring is None:
        raise ValueError("empty factor list")
    n = factors[0].rows
    I = PolyMatrix.identity(ring, n)
    out = I
    for E in factors:
        N = E - I
        if not (N @ N).is_zero():
            raise AssertionError("factor is not unipotent of order two")
        out = out @ (I - N)
    return out


def _column(ring, v):
    return PolyMatrix(ring, len(v), 1, [[e] for e in v])


def unimodular_witness(v, order=None):
    """Row ``u`` with ``u v = 1`` when the entries of ``v`` generate the unit left ideal."""
    v = tuple(v)
    ring = v[0].ring
    if all(not e for e in v):
        return None
    cert = left_inverse(_column(ring, v), order)
    if cert is None:
        return None
    w = UnimodularWitness(v, cert.inverse.row(0))
    if not w.verify():
        raise AssertionError("unimodular witness failed verification")
    return w


def _shorten(v, a):
    last = v[-1]
    return tuple(v[i] + a[i] * last for i in range(len(v) - 1))


def _candidates(ring, degree_bound):
    """``1, -1`` then signed monomials of degree 1..bound, larger monomials first."""
    out = [ring.one(), -ring.one()]
    for d in range(1, degree_bound + 1):
        monos = [m for m in itertools.product(range(d + 1), repeat=ring.n) if sum(m) == d]
        monos.sort(key=ring.order.key, reverse=True)
        for m in monos:
            p = ring.monomial(m)
            out.extend([p, -p])
    return out


def _coerce_hint(ring, hint):
    if hint is None:
        return None
    if isinstance(hint, StabilizationHint):
        a, b = hint.a, hint.b
    elif isinstance(hint, dict):
        a, b = hint["a"], hint.get("b")
    else:
        a, b = hint, None
    a = tuple(ring.coerce(x) for x in a)
    b = tuple(ring.coerce(x) for x in b) if b is not None else None
    return a, b


def stabilize(v, hints=None, degree_bound=1, order=None, max_tries=DEFAULT_MAX_TRIES):
    """Find ``a`` making the shortened column ``v'`` unimodular, or ``None``.

    ``hints`` is a list of candidates, each an ``a`` list, a dict
    ``{"a": ..., "b": ...}`` or a :class:`StabilizationHint`; hints are tried first.  The
    search then enumerates ``a`` by support size over the candidate
    coefficients, deterministically.
    """
    v = tuple(v)
    ring = v[0].ring
    r = len(v)
    if r < 2:
        return None
    for hint in hints or []:
        a, b = _coerce_hint(ring, hint)
        if len(a) != r - 1:
            raise InvalidStabilization(f"hint has {len(a)} coefficients, expected {r - 1}")
        vp = _shorten(v, a)
        if b is not None:
            w = UnimodularWitness(vp, b)
            if w.verify():
                return StabilizationData(a, w)
        w = unimodular_witness(vp, order)
        if w is not None:
            return StabilizationData(a, w)
    cands = _candidates(ring, degree_bound)
    zero = ring.zero()
    tries = 0
    for support in range(0, r):
        for pos in itertools.combinations(range(r - 1), support):
            for vals in itertools.product(cands, repeat=support):
                tries += 1
                if tries > max_tries:
                    return None
                a = [zero] * (r - 1)
                for p, val in zip(pos, vals):
                    a[p] = val
                w = unimodular_witness(_shorten(v, a), order)
                if w is not None:
                    return StabilizationData(tuple(a), w)
    return None


def elementary_reduce(v, stab):
    """``U = E4 E3 E2 E1`` with ``U v = e_1``."""
    v = tuple(v)
    ring = v[0].ring
    r = len(v)
    a = stab.a
    vp = _shorten(v, a)
    if vp != tuple(stab.v_prime) or not stab.witness.verify():
        raise InvalidStabilization("stabilization data does not match the column")
    b = stab.witness.u
    c = vp[0] - 1 - v[-1]
    E1 = _elementary(ring, r, {(i, r - 1): a[i] for i in range(r - 1)})
    E2 = _elementary(ring, r, {(r - 1, i): c * b[i] for i in range(r - 1)})
    E3 = _elementary(ring, r, {(0, r - 1): -1})
    E4 = _elementary(ring, r, {**{(i, 0): -vp[i] for i in range(1, r - 1)}, (r - 1, 0): 1 - vp[0]})
    factors = [E1, E2, E3, E4]
    col = _column(ring, v)
    inter = []
    for E in factors:
        col = E @ col
        inter.append(col.column(0))
    U = E4 @ E3 @ E2 @ E1
    e1 = tuple(ring.one() if i == 0 else ring.zero() for i in range(r))
    if (U @ _column(ring, v)).column(0) != e1:
        raise InvalidStabilization("elementary reduction did not reach e_1")
    return ElementaryFactorization(factors, U, inter)


def _embed(E, offset, r):
    ring = E.ring
    if offset == 0:
        return E
    return block_diag(ring, PolyMatrix.identity(ring, offset), E)


def compute_free_basis(F1, G1T=None, stable_rank_bound=1, degree_bound=1, hints=None,
                       order=None, max_tries=DEFAULT_MAX_TRIES):
    """Free basis of ``coker(F1)`` for a stably free module of rank ``>= stable_rank_bound``."""
    ring = F1.ring
    r, s = F1.shape
    if r - s < stable_rank_bound:
        raise ValueError(
            f"rank {r - s} is below the declared stable rank bound {stable_rank_bound}"
        )
    if G1T is None:
        from .inverses import right_inverse

        cert = right_inverse(F1.T, order)
        if cert is None:
            raise NotStablyFree("F1^T has no right inverse")
        G1T = cert.inverse
    if G1T.shape != (r, s) or not (F1.T @ G1T).is_identity():
        raise NotStablyFree("G1^T is not a right inverse of F1^T")
    I = PolyMatrix.identity(ring, r)
    V = I
    factors, steps = [], []
    for i in range(s):
        W = V @ G1T
        v = W.column(i)[i:]
        hint = hints[i] if hints is not None and i < len(hints) else None
        stab = stabilize(v, [hint] if hint is not None else None, degree_bound, order, max_tries)
        if stab is None:
            raise StabilizationFailed(i + 1)
        fac = elementary_reduce(v, stab)
        steps.append((stab, fac))
        factors.extend(_embed(E, i, r) for E in fac.factors)
        V = _embed(fac.U, i, r) @ V
    # V G1^T is now unitriangular on top with zeros below; clear the top block
    W = V @ G1T
    for j in range(s):
        for i in range(j):
            c = W[i, j]
            if c:
                P = _elementary(ring, r, {(i, j): -c})
                factors.append(P)
                V = P @ V
                W = P @ W
    # align the first s rows with F1^T; the lower rows are left alone
    if factors:
        Vinv = _inverse_of_factors(factors)
        X = (F1.T @ Vinv).submatrix(range(s), range(s, r))
        if not X.is_zero():
            Q = _elementary(ring, r, {(i, s + j): X[i, j] for i in range(s) for j in range(r - s)})
            factors.append(Q)
            V = Q @ V
    U = V
    U_inverse = _inverse_of_factors(factors) if factors else I
    check = U @ G1T
    cert = BasisCertificate(
        U, U_inverse, check, [U.row(i) for i in range(s, r)], stable_rank_bound,
        F1, G1T, factors, steps,
    )
    if not cert.verify():
        raise AssertionError("free basis certificate failed verification")
    return cert
