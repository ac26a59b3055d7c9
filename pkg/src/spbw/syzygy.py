"""Syzygy modules, finite presentations and free resolutions.

Syzygies of ``f_1 .. f_r`` in ``A^s`` are read off a Gröbner basis of the
module generated by ``(f_k, e_k)`` in ``A^{s+r}`` under an order that
eliminates the first ``s`` positions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundExceeded
from .groebner import _infer_ring, buchberger, combine, member
from .module import ModuleOrder, PolyMatrix, matrix_compose


@dataclass
class SyzygyBasis:
    """Generators ``z`` of ``Syz(F)``: ``sum_i z_i * F_i = 0`` (right: ``F_i * z_i``)."""

    ring: object
    side: str
    generators: list
    n_inputs: int

    def is_zero(self):
        return not self.generators

    @property
    def matrix(self):
        """Syzygies as the rows of a ``count x n_inputs`` matrix."""
        return PolyMatrix(self.ring, len(self.generators), self.n_inputs, self.generators)

    def __len__(self):
        return len(self.generators)


def _augmented_order(order, s, r):
    prec = order.position_precedence
    if prec is None:
        prec = tuple(range(s - 1, -1, -1)) if order.scheme == "TOP" else tuple(range(s))
    tail = tuple(range(s + r - 1, s - 1, -1)) if order.scheme == "TOP" else tuple(range(s, s + r))
    return ModuleOrder(order.base, order.scheme, tuple(prec) + tail, eliminate=s)


def prune(vectors, order=None, side="left", ring=None):
    """Drop generators that lie in the module generated by the remaining ones."""
    vs = [tuple(v) for v in vectors if any(e for e in v)]
    k = len(vs) - 1
    while k >= 0 and len(vs) > 1:
        others = vs[:k] + vs[k + 1:]
        gb = buchberger(others, order, side, ring, len(vs[k]))
        if member(vs[k], gb) is not None:
            vs = others
        k -= 1
    return vs


def syzygies(rows, order=None, side="left", ring=None, rank=None, reduce_generators=True):
    """Generating set of the syzygy module of ``rows`` (vectors in ``A^rank``)."""
    rows = [tuple(v) for v in rows]
    ring = _infer_ring(rows, ring)
    if rank is None:
        rank = len(rows[0]) if rows else 0
    r = len(rows)
    if r == 0:
        return SyzygyBasis(ring, side, [], 0)
    if order is None:
        order = ModuleOrder(ring.order, "TOP")
    z, o = ring.zero(), ring.one()
    aug = [v + tuple(o if i == k else z for i in range(r)) for k, v in enumerate(rows)]
    gb = buchberger(aug, _augmented_order(order, rank, r), side, ring, rank + r)
    syz = [g[rank:] for g in gb.generators if all(not e for e in g[:rank])]
    if reduce_generators and len(syz) > 1:
        syz = prune(syz, ModuleOrder(order.base, order.scheme), side, ring)
    for s in syz:
        if any(e for e in combine(list(s), rows, side)):
            raise AssertionError("computed syzygy does not annihilate the input")
    return SyzygyBasis(ring, side, syz, r)


def presentation(generators, order=None, ring=None):
    """``(F1, F0)``: columns of ``F0`` are the generators, columns of ``F1`` their syzygies."""
    gens = [tuple(g) for g in generators]
    ring = _infer_ring(gens, ring)
    m = len(gens[0])
    F0 = PolyMatrix.from_columns(ring, gens, rows=m)
    syz = syzygies(gens, order, "left", ring, m)
    F1 = PolyMatrix.from_columns(ring, syz.generators, rows=len(gens))
    return F1, F0


@dataclass
class FreeResolution:
    """Maps ``[F0, F1, ..., Fm]`` with ``F_i`` of shape ``s_{i-1} x s_i``.

    ``quotient=True`` means the module is ``coker(F1)`` and ``F0`` is the
    identity matrix standing for the canonical projection.
    """

    maps: list
    finite: bool = True
    quotient: bool = False
    exactness: list = field(default_factory=list)

    @property
    def length(self):
        return len(self.maps) - 1

    @property
    def ring(self):
        return self.maps[0].ring

    def ranks(self):
        return [self.maps[0].cols] + [F.cols for F in self.maps[1:]]

    def check_compositions(self):
        """Zero-composition flag for every junction ``F_{i-1} . F_i``."""
        flags = []
        for i in range(1, len(self.maps)):
            if i == 1 and self.quotient:
                flags.append(True)
                continue
            flags.append(matrix_compose(self.maps[i - 1], self.maps[i]).is_zero())
        self.exactness = flags
        return all(flags)


def default_max_length(ring):
    return ring.n + 2


def _extend(maps, current, order, ring, max_length, quotient):
    base = ModuleOrder(order.base, order.scheme) if order is not None else None
    step_order = order
    while True:
        syz = syzygies(current, step_order, "left", ring, len(current[0]) if current else 0)
        step_order = base
        if syz.is_zero():
            res = FreeResolution(maps, True, quotient)
            res.check_compositions()
            return res
        if len(maps) - 1 >= max_length:
            res = FreeResolution(maps, False, quotient)
            res.check_compositions()
            raise BoundExceeded(
                f"no finite free resolution of length <= {max_length}", res
            )
        maps.append(PolyMatrix.from_columns(ring, syz.generators, rows=len(current)))
        current = syz.generators


def free_resolution(generators, max_length=None, order=None, ring=None):
    """Resolve the submodule generated by ``generators`` until a syzygy module vanishes."""
    gens = [tuple(g) for g in generators]
    ring = _infer_ring(gens, ring)
    if max_length is None:
        max_length = default_max_length(ring)
    F0 = PolyMatrix.from_columns(ring, gens, rows=len(gens[0]))
    return _extend([F0], gens, order, ring, max_length, False)


def cokernel_resolution(F1, max_length=None, order=None):
    """Resolve ``A^r / Im(F1)`` where the columns of ``F1`` are the relations."""
    ring = F1.ring
    if max_length is None:
        max_length = default_max_length(ring)
    maps = [PolyMatrix.identity(ring, F1.rows), F1]
    if F1.cols == 0:
        return FreeResolution([maps[0]], True, True)
    return _extend(maps, F1.column_list(), order, ring, max_length, True)
