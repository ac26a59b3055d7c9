"""Free modules ``A^s``: term orders and matrices of homomorphisms.

Matrices are "disposed by columns": a homomorphism ``A^s -> A^r`` of left
modules has an ``r x s`` matrix ``F`` and acts by ``f(a) = (a^T F^T)^T``.
For right modules the action is the plain product ``F a``.  The two
conventions get separate functions on purpose.

Positions are 0-based throughout the Python API.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

from .errors import DimensionMismatch
from .ring import MonomialOrder, Poly


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class ModuleTerm:
    monomial: tuple
    position: int


@dataclass(frozen=True)
class ModuleOrder:
    """Term-over-position order on ``Mon(A^s)``.

    Monomials are compared first; ties go to the position ranked higher in
    ``position_precedence`` (largest first).  When no precedence is given,
    ``TOP`` ranks ``e_{s-1} > ... > e_0`` and ``TOPREV`` ranks
    ``e_0 > ... > e_{s-1}``.

    ``eliminate`` > 0 makes every term in positions ``< eliminate`` larger than
    every term in the remaining positions (used for syzygies).
    """

    base: MonomialOrder
    scheme: str = "TOP"
    position_precedence: tuple | None = None
    eliminate: int = 0

    def __post_init__(self):
        if self.scheme not in ("TOP", "TOPREV"):
            raise ValueError(f"unknown module order scheme {self.scheme!r}")
        if self.position_precedence is not None:
            object.__setattr__(self, "position_precedence", tuple(self.position_precedence))

    def ranks(self, s):
        prec = self.position_precedence
        if prec is None:
            prec = tuple(range(s - 1, -1, -1)) if self.scheme == "TOP" else tuple(range(s))
        if sorted(prec) != list(range(len(prec))) or len(prec) < s:
            raise ValueError(f"position precedence {prec} does not cover rank {s}")
        return {p: len(prec) - k for k, p in enumerate(prec)}

    def term_key(self, s):
        """Key on internal ``(position, monomial)`` pairs."""
        ranks = self.ranks(s)
        mkey = self.base.key
        e = self.eliminate
        if e:
            return lambda t: (t[0] < e, mkey(t[1]), ranks[t[0]])
        return lambda t: (mkey(t[1]), ranks[t[0]])

    def with_base(self, base):
        return ModuleOrder(base, self.scheme, self.position_precedence, self.eliminate)


def compare_module_terms(order, t1, t2, rank=None):
    s = rank if rank is not None else max(t1.position, t2.position) + 1
    if order.position_precedence is not None:
        s = max(s, len(order.position_precedence))
    key = order.term_key(s)
    k1 = key((t1.position, tuple(t1.monomial)))
    k2 = key((t2.position, tuple(t2.monomial)))
    return Cmp((k1 > k2) - (k1 < k2))


class PolyMatrix:
    """Immutable ``rows x cols`` matrix over a ring; dimensions may be zero."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries=None):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [[ring.zero()] * cols for _ in range(rows)]
        ents = tuple(tuple(ring.coerce(e) for e in row) for row in entries)
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise DimensionMismatch(f"entries do not form a {rows}x{cols} array")
        self.entries = ents

    @classmethod
    def from_rows(cls, ring, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows[0])
        return cls(ring, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, ring, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("row count required for an empty matrix")
            rows = len(columns[0])
        return cls(ring, rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring, rows, cols):
        return cls(ring, rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def column_list(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self):
        return PolyMatrix(
            self.ring, self.cols, self.rows, [self.column(j) for j in range(self.cols)]
        )

    def map(self, fn):
        return PolyMatrix(self.ring, self.rows, self.cols, [[fn(e) for e in r] for r in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero()
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            new = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = row[k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                new.append(acc)
            out.append(new)
        return PolyMatrix(self.ring, self.rows, other.cols, out)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(
            self.ring, self.rows, self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return PolyMatrix(
            self.ring, self.rows, self.cols,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return self.map(lambda e: -e)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self):
        return all(not e for r in self.entries for e in r)

    def is_identity(self):
        return self.rows == self.cols and self == PolyMatrix.identity(self.ring, self.rows)

    def submatrix(self, rows, cols):
        return PolyMatrix(
            self.ring, len(rows), len(cols), [[self.entries[i][j] for j in cols] for i in rows]
        )

    def __str__(self):
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols} empty]"
        cells = [[str(e) for e in r] for r in self.entries]
        w = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w[j]) for j, c in enumerate(r)) + " ]" for r in cells
        )

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def hstack(ring, blocks, rows=None):
    blocks = list(blocks)
    if rows is None:
        rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("hstack blocks must share a row count")
    cols = sum(b.cols for b in blocks)
    ents = [sum((list(b.row(i)) for b in blocks), []) for i in range(rows)]
    return PolyMatrix(ring, rows, cols, ents)


def vstack(ring, blocks, cols=None):
    blocks = list(blocks)
    if cols is None:
        cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("vstack blocks must share a column count")
    ents = [list(b.row(i)) for b in blocks for i in range(b.rows)]
    return PolyMatrix(ring, len(ents), cols, ents)


def block_diag(ring, a, b):
    top = hstack(ring, [a, PolyMatrix.zero(ring, a.rows, b.cols)])
    bottom = hstack(ring, [PolyMatrix.zero(ring, b.rows, a.cols), b])
    return vstack(ring, [top, bottom], a.cols + b.cols)


def matrix_apply(F, a):
    """Left-module action ``f(a) = (a^T F^T)^T``: ``out_j = sum_i a_i F[j, i]``."""
    a = tuple(a)
    if len(a) != F.cols:
        raise DimensionMismatch(f"vector of length {len(a)} for a {F.shape} matrix")
    z = F.ring.zero()
    out = []
    for j in range(F.rows):
        acc = z
        for i in range(F.cols):
            if a[i] and F.entries[j][i]:
                acc = acc + a[i] * F.entries[j][i]
        out.append(acc)
    return tuple(out)


def matrix_compose(G, F):
    """Matrix of ``g . f`` for left homomorphisms: ``(F^T G^T)^T``."""
    if G.cols != F.rows:
        raise DimensionMismatch(f"cannot compose {G.shape} after {F.shape}")
    return (F.T @ G.T).T


def right_apply(F, a):
    """Right-module action ``f(a) = F a``."""
    a = tuple(a)
    if len(a) != F.cols:
        raise DimensionMismatch(f"vector of length {len(a)} for a {F.shape} matrix")
    col = PolyMatrix(F.ring, F.cols, 1, [[x] for x in a])
    return (F @ col).column(0)


def right_compose(G, F):
    """Matrix of ``g . f`` for right homomorphisms: ``G F``."""
    return G @ F


def vector_is_zero(v: Sequence[Poly]):
    return all(not e for e in v)
