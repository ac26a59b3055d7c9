"""Left and right Gröbner bases of submodules of ``A^s``.

The engine works on module elements stored as ``{(position, monomial): coeff}``
and carries, for every element, its cofactors with respect to the input
generators.  Right-module computations run the left engine over the opposite
ring by default; ``method="direct"`` multiplies on the right in ``A`` itself
and exists as an independent cross-check.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, ValidationFailure
from .module import ModuleOrder, PolyMatrix
from .ring import Poly, opposite

ONE = Fraction(1)


def opposite_of(ring):
    op = getattr(ring, "_opposite_ring", None)
    if op is None:
        op = opposite(ring)
        op._opposite_ring = ring
        ring._opposite_ring = op
    return op


def _divides(b, a):
    return all(x <= y for x, y in zip(b, a))


def _addmul_into(target, src, scale, prods):
    """``target += scale * (product table applied to src)`` in place."""
    for (p, t), c in src.items():
        s = scale * c
        for t2, c2 in prods(t).items():
            k = (p, t2)
            v = target.get(k, 0) + s * c2
            if v:
                target[k] = v
            else:
                target.pop(k, None)


class _Elem:
    __slots__ = ("vec", "cof", "lead", "lc")

    def __init__(self, vec, cof, lead, lc):
        self.vec = vec
        self.cof = cof
        self.lead = lead
        self.lc = lc


class _Engine:
    def __init__(self, ring, order, rank, right=False):
        ring._ensure_valid()
        if not ring.compatible_with(order.base):
            raise ValidationFailure(
                ["monomial order of the module order is not compatible with the ring relations"]
            )
        self.ring = ring
        mm = ring._mul_mono
        # mul(m, t): monomial m acting on term t from the engine's side
        self.mul = (lambda m, t: mm(t, m)) if right else mm
        self.key = order.term_key(rank)
        self.rank = rank

    def lead(self, vec):
        return max(vec, key=self.key)

    def addmul(self, target, src, scale, mono):
        mul = self.mul
        _addmul_into(target, src, scale, lambda t: mul(mono, t))

    def make(self, vec, cof):
        lt = self.lead(vec)
        c = vec[lt]
        if c != 1:
            inv = ONE / c
            vec = {k: v * inv for k, v in vec.items()}
            if cof is not None:
                cof = {k: v * inv for k, v in cof.items()}
        return _Elem(vec, cof, lt, ONE)

    def reduce(self, f, fcof, basis, quotients=None, full=True):
        """Reduce ``f`` by ``basis``; returns ``(remainder, cofactors)``."""
        f = dict(f)
        fcof = dict(fcof) if fcof is not None else None
        rem = {}
        key = self.key
        while f:
            lt = max(f, key=key)
            c = f[lt]
            p, alpha = lt
            for idx, g in enumerate(basis):
                gp, beta = g.lead
                if gp == p and _divides(beta, alpha):
                    gamma = tuple(a - b for a, b in zip(alpha, beta))
                    d = g.lc * self.mul(gamma, beta)[alpha]
                    q = -c / d
                    self.addmul(f, g.vec, q, gamma)
                    if fcof is not None and g.cof is not None:
                        self.addmul(fcof, g.cof, q, gamma)
                    if quotients is not None:
                        qd = quotients[idx]
                        v = qd.get(gamma, 0) - q
                        if v:
                            qd[gamma] = v
                        else:
                            qd.pop(gamma, None)
                    break
            else:
                if not full:
                    rem.update(f)
                    break
                rem[lt] = c
                del f[lt]
        return rem, fcof

    def spoly(self, gi, gj):
        (_, bi), (_, bj) = gi.lead, gj.lead
        lcm = tuple(max(a, b) for a, b in zip(bi, bj))
        ci = tuple(a - b for a, b in zip(lcm, bi))
        cj = tuple(a - b for a, b in zip(lcm, bj))
        di = gi.lc * self.mul(ci, bi)[lcm]
        dj = gj.lc * self.mul(cj, bj)[lcm]
        vec, cof = {}, {}
        self.addmul(vec, gi.vec, ONE / di, ci)
        self.addmul(vec, gj.vec, -ONE / dj, cj)
        self.addmul(cof, gi.cof, ONE / di, ci)
        self.addmul(cof, gj.cof, -ONE / dj, cj)
        return vec, cof

    def complete(self, inputs):
        """Buchberger completion of ``inputs`` (list of (vec, cof)); reduced and monic."""
        G = []
        heap = []
        counter = 0

        def add(elem):
            nonlocal counter
            p, b = elem.lead
            for i, g in enumerate(G):
                if g.lead[0] == p:
                    lcm = tuple(max(x, y) for x, y in zip(g.lead[1], b))
                    heapq.heappush(heap, (self.key((p, lcm)), counter, i, len(G)))
                    counter += 1
            G.append(elem)

        for vec, cof in inputs:
            if not vec:
                continue
            rem, rcof = self.reduce(vec, cof, G)
            if rem:
                add(self.make(rem, rcof))
        while heap:
            _, _, i, j = heapq.heappop(heap)
            vec, cof = self.spoly(G[i], G[j])
            if not vec:
                continue
            rem, rcof = self.reduce(vec, cof, G)
            if rem:
                add(self.make(rem, rcof))
        return self.interreduce(G)

    def interreduce(self, G):
        keep = []
        for i, g in enumerate(G):
            redundant = False
            for j, h in enumerate(G):
                if j == i or h.lead[0] != g.lead[0]:
                    continue
                if _divides(h.lead[1], g.lead[1]) and (h.lead != g.lead or j < i):
                    redundant = True
                    break
            if not redundant:
                keep.append(g)
        out = list(keep)
        for idx in range(len(out)):
            others = out[:idx] + out[idx + 1:]
            rem, rcof = self.reduce(out[idx].vec, out[idx].cof, others)
            out[idx] = self.make(rem, rcof)
        out.sort(key=lambda e: self.key(e.lead), reverse=True)
        return out


# conversions between tuples of Poly and internal dicts ---------------------

def _vec_to_dict(vec, flip=False):
    d = {}
    for p, f in enumerate(vec):
        for m, c in f._t.items():
            d[(p, m[::-1] if flip else m)] = c
    return d


def _dict_to_vec(d, ring, rank, flip=False):
    parts = [dict() for _ in range(rank)]
    for (p, m), c in d.items():
        parts[p][m[::-1] if flip else m] = c
    return tuple(Poly(ring, t) for t in parts)


def _check_vectors(vectors, rank):
    for v in vectors:
        if len(v) != rank:
            raise DimensionMismatch(f"vector of length {len(v)} in a rank-{rank} module")


def _infer_ring(vectors, ring):
    if ring is not None:
        return ring
    for v in vectors:
        for e in v:
            return e.ring
    raise ValueError("cannot infer the ring from an empty input; pass ring=")


def _setup(ring, order, rank, side, method):
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if order is None:
        order = ModuleOrder(ring.order, "TOP")
    if side == "right" and method == "opposite":
        op = opposite_of(ring)
        rev = {i: ring.n - 1 - i for i in range(ring.n)}
        return _Engine(op, order.with_base(order.base.renamed(rev)), rank), op, True, order
    return _Engine(ring, order, rank, right=(side == "right")), ring, False, order


@dataclass
class DivisionResult:
    quotients: list
    remainder: tuple

    def is_zero(self):
        return all(not e for e in self.remainder)


@dataclass
class GroebnerBasis:
    """Reduced monic Gröbner basis together with its transition matrix.

    Left side: ``generators[k] = sum_i H[i, k] * inputs[i]`` (``G^T = H^T F``).
    Right side: ``generators[k] = sum_i inputs[i] * H[i, k]`` (``G = F H``).
    """

    ring: object
    side: str
    order: ModuleOrder
    rank: int
    generators: list
    transition: PolyMatrix
    inputs: list = field(default_factory=list)
    method: str = "opposite"

    def __len__(self):
        return len(self.generators)

    def leading_terms(self):
        eng, _, flip, _ = _setup(self.ring, self.order, self.rank, self.side, self.method)
        return [eng.lead(_vec_to_dict(g, flip)) for g in self.generators]


def buchberger(rows, order=None, side="left", ring=None, rank=None, method="opposite"):
    """Gröbner basis of the ``side`` submodule generated by ``rows``."""
    rows = [tuple(v) for v in rows]
    ring = _infer_ring(rows, ring)
    if rank is None:
        if not rows:
            raise ValueError("rank required for an empty generator list")
        rank = len(rows[0])
    _check_vectors(rows, rank)
    eng, ering, flip, order = _setup(ring, order, rank, side, method)
    r = len(rows)
    inputs = [
        (_vec_to_dict(v, flip), {(k, ering.unit_monomial()): ONE}) for k, v in enumerate(rows)
    ]
    G = eng.complete(inputs)
    gens = [_dict_to_vec(g.vec, ring, rank, flip) for g in G]
    cols = [_dict_to_vec(g.cof, ring, r, flip) for g in G]
    H = PolyMatrix.from_columns(ring, cols, rows=r) if cols else PolyMatrix.zero(ring, r, 0)
    return GroebnerBasis(ring, side, order, rank, gens, H, rows, method)


def divide(v, G, order=None, side="left", ring=None, method="opposite"):
    """Division of ``v`` by the list ``G``; first eligible divisor wins.

    Left: ``v = sum q_i * G[i] + remainder``; right: ``v = sum G[i] * q_i + remainder``.
    """
    v = tuple(v)
    G = [tuple(g) for g in G]
    ring = _infer_ring([v] + G, ring)
    rank = len(v)
    _check_vectors(G, rank)
    eng, ering, flip, order = _setup(ring, order, rank, side, method)
    basis = []
    for g in G:
        d = _vec_to_dict(g, flip)
        if not d:
            raise ValueError("divisors must be nonzero")
        lt = eng.lead(d)
        basis.append(_Elem(d, None, lt, d[lt]))
    quotients = [dict() for _ in G]
    rem, _ = eng.reduce(_vec_to_dict(v, flip), None, basis, quotients)
    qs = [Poly(ring, {m[::-1] if flip else m: c for m, c in q.items()}) for q in quotients]
    return DivisionResult(qs, _dict_to_vec(rem, ring, rank, flip))


def reduce_vector(v, gb):
    """Normal form of ``v`` modulo a Gröbner basis."""
    return divide(v, gb.generators, gb.order, gb.side, gb.ring, gb.method).remainder


def member(v, gb):
    """Coefficients expressing ``v`` in ``gb.generators``, or ``None``."""
    if not gb.generators:
        return [] if all(not e for e in v) else None
    res = divide(v, gb.generators, gb.order, gb.side, gb.ring, gb.method)
    return res.quotients if res.is_zero() else None


def unit_vector(ring, rank, i):
    return tuple(ring.one() if k == i else ring.zero() for k in range(rank))


def is_full_module(gb, rank=None):
    rank = gb.rank if rank is None else rank
    return all(member(unit_vector(gb.ring, rank, i), gb) is not None for i in range(rank))


def combine(coeffs, vectors, side="left"):
    """``sum c_k * v_k`` (left) or ``sum v_k * c_k`` (right)."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("nothing to combine")
    rank = len(vectors[0])
    ring = vectors[0][0].ring if rank else coeffs[0].ring
    out = [ring.zero()] * rank
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for p in range(rank):
            if v[p]:
                out[p] = out[p] + (c * v[p] if side == "left" else v[p] * c)
    return tuple(out)


def same_module(vs, ws, order=None, side="left", ring=None, rank=None):
    """Mutual reduction check: each family lies in the module generated by the other."""
    vs = [tuple(v) for v in vs]
    ws = [tuple(w) for w in ws]
    ring = _infer_ring(vs + ws, ring)
    if rank is None:
        rank = len((vs + ws)[0])
    gv = buchberger(vs, order, side, ring, rank)
    gw = buchberger(ws, order, side, ring, rank)
    return all(member(w, gv) is not None for w in ws) and all(
        member(v, gw) is not None for v in vs
    )
