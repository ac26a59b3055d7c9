"""Solvable polynomial rings over QQ with a PBW basis.

A ring is given by ordered generators ``x_0 .. x_{n-1}`` and, for every pair
``i < j``, a rewriting rule

    x_j * x_i  ->  c_ij * x_i x_j + p_ij

where ``c_ij`` is a nonzero rational and every monomial of ``p_ij`` is strictly
smaller than ``x_i x_j`` in the ring's monomial order.  Elements are stored in
the PBW basis of ordered monomials ``x_0^a0 ... x_{n-1}^a{n-1}``, encoded as
exponent tuples.  Pairs missing from the relation table commute.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from operator import itemgetter
from typing import Mapping

from .errors import DegreeBoundExceeded, UnverifiedInvolution, ValidationFailure

Monomial = tuple  # tuple[int, ...]

ONE = Fraction(1)

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class MonomialOrder:
    """Admissible order on exponent vectors.

    ``precedence`` lists generator indices from largest to smallest, so
    ``MonomialOrder("deglex", (0, 1))`` is deglex with ``x_0 > x_1``.
    """

    kind: str
    precedence: tuple

    def __post_init__(self):
        if self.kind not in ("deglex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "precedence", tuple(self.precedence))
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of generator indices")

    @classmethod
    def deglex(cls, n):
        return cls("deglex", tuple(range(n)))

    @classmethod
    def lex(cls, n):
        return cls("lex", tuple(range(n)))

    @cached_property
    def key(self):
        """Sort key on monomials; larger key means larger monomial."""
        prec = self.precedence
        if len(prec) == 0:
            perm = lambda m: ()
        elif len(prec) == 1:
            i = prec[0]
            perm = lambda m: (m[i],)
        else:
            perm = itemgetter(*prec)
        if self.kind == "deglex":
            return lambda m: (sum(m),) + perm(m)
        return perm

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def renamed(self, mapping):
        """Order on a ring whose generator ``i`` became ``mapping[i]``."""
        return MonomialOrder(self.kind, tuple(mapping[i] for i in self.precedence))


@dataclass
class ValidationReport:
    valid: bool
    violations: list

    def raise_if_invalid(self):
        if not self.valid:
            raise ValidationFailure(self.violations)


def _unit(n, i, e=1):
    m = [0] * n
    m[i] = e
    return tuple(m)


def _add_into(acc, terms, scale):
    for m, c in terms.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


class RingPresentation:
    """Generators, commutation rules and a monomial order.

    ``relations`` maps ``(i, j)`` with ``i < j`` to ``(c_ij, p_ij)`` where
    ``p_ij`` is a dict ``{exponent tuple: Fraction}``.
    """

    def __init__(self, variables, relations=None, order=None, max_degree=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("generator names must be distinct")
        n = self.n = len(self.variables)
        self.order = order if order is not None else MonomialOrder.deglex(n)
        if len(self.order.precedence) != n:
            raise ValueError("order arity does not match number of generators")
        rel = {}
        for i in range(n):
            for j in range(i + 1, n):
                rel[(i, j)] = (ONE, {})
        for (i, j), (c, low) in (relations or {}).items():
            if not 0 <= i < j < n:
                raise ValueError(f"relation index pair {(i, j)} must satisfy i < j")
            low = {tuple(m): Fraction(v) for m, v in dict(low).items() if v}
            rel[(i, j)] = (Fraction(c), low)
        self.relations = rel
        self.max_degree = max_degree
        self._checked = False
        self._mm = {}
        self._sw = {}

    # construction helpers -------------------------------------------------
    def __repr__(self):
        return f"RingPresentation({list(self.variables)}, order={self.order.kind})"

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(name) from None

    def unit_monomial(self):
        return (0,) * self.n

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {self.unit_monomial(): ONE})

    def scalar(self, c):
        c = Fraction(c)
        return Poly(self, {self.unit_monomial(): c} if c else {})

    def gen(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Poly(self, {_unit(self.n, i): ONE})

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, exps, coeff=1):
        return Poly(self, {tuple(exps): Fraction(coeff)})

    def __call__(self, text):
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def coerce(self, value):
        if isinstance(value, Poly):
            if value.ring is not self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, str):
            return self(value)
        return self.scalar(value)

    def relation(self, i, j):
        c, low = self.relations[(i, j)]
        return c, Poly(self, dict(low))

    def is_commutative(self):
        return all(c == 1 and not low for c, low in self.relations.values())

    def compatible_with(self, order):
        """True when every lower part is below its leading monomial in ``order``."""
        return not _violations(self, order)

    # multiplication -------------------------------------------------------
    def _ensure_valid(self):
        if not self._checked:
            check_presentation(self).raise_if_invalid()
            self._checked = True

    def _mul_mono(self, a, b):
        key = (a, b)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        n = self.n
        m = n - 1
        while m >= 0 and a[m] == 0:
            m -= 1
        k = 0
        while k < n and b[k] == 0:
            k += 1
        if m < 0 or k >= n or m <= k:
            res = {tuple(x + y for x, y in zip(a, b)): ONE}
        else:
            a_rest = a[:m] + (0,) + a[m + 1:]
            b_rest = b[:k] + (0,) + b[k + 1:]
            res = {}
            for mono, c in self._swap(m, a[m], k, b[k]).items():
                for mono2, c2 in self._mul_mono(a_rest, mono).items():
                    _add_into(res, self._mul_mono(mono2, b_rest), c * c2)
        if self.max_degree is not None:
            for mono in res:
                if sum(mono) > self.max_degree:
                    raise DegreeBoundExceeded(
                        f"intermediate degree {sum(mono)} exceeds bound {self.max_degree}"
                    )
        self._mm[key] = res
        return res

    def _swap(self, m, p, k, q):
        """Normal form of ``x_m^p * x_k^q`` for ``m > k``."""
        key = (m, p, k, q)
        hit = self._sw.get(key)
        if hit is not None:
            return hit
        n = self.n
        res = {}
        if p == 1 and q == 1:
            c, low = self.relations[(k, m)]
            mono = list(self.unit_monomial())
            mono[k] = mono[m] = 1
            res[tuple(mono)] = c
            _add_into(res, low, ONE)
        elif q > 1:
            ek = _unit(n, k)
            for mono, c in self._swap(m, p, k, q - 1).items():
                _add_into(res, self._mul_mono(mono, ek), c)
        else:
            em = _unit(n, m)
            for mono, c in self._swap(m, p - 1, k, 1).items():
                _add_into(res, self._mul_mono(em, mono), c)
        self._sw[key] = res
        return res

    def mul_terms(self, f, g):
        """Product of two raw term dicts."""
        self._ensure_valid()
        acc = {}
        for a, ca in f.items():
            for b, cb in g.items():
                _add_into(acc, self._mul_mono(a, b), ca * cb)
        return acc


def _violations(pres, order):
    out = []
    key = order.key
    for (i, j), (c, low) in sorted(pres.relations.items()):
        name = f"{pres.variables[j]}*{pres.variables[i]}"
        if c == 0:
            out.append(f"{name}: commutation constant is zero")
        lead = _unit(pres.n, i)
        lead = tuple(x + (1 if t == j else 0) for t, x in enumerate(lead))
        for mono in low:
            if len(mono) != pres.n or any(e < 0 for e in mono):
                out.append(f"{name}: malformed monomial {mono}")
            elif key(mono) >= key(lead):
                out.append(
                    f"{name}: lower term {_mono_str(pres, mono)} is not below "
                    f"{_mono_str(pres, lead)}"
                )
    return out


def _mono_str(pres, mono):
    parts = []
    for name, e in zip(pres.variables, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def check_presentation(pres):
    """Validate commutation constants and order compatibility of ``pres``."""
    v = _violations(pres, pres.order)
    return ValidationReport(not v, v)


class Poly:
    """Immutable element of a solvable ring, kept in the PBW basis."""

    __slots__ = ("ring", "_t", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self._t = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring, terms):
        """Build from an iterable of ``(coeff, exponents)`` pairs, merging duplicates."""
        acc = {}
        for c, m in terms:
            m = tuple(m)
            if len(m) != ring.n:
                raise ValueError("monomial arity does not match ring")
            v = acc.get(m, 0) + Fraction(c)
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return cls(ring, acc)

    # inspection -----------------------------------------------------------
    @property
    def term_dict(self):
        return dict(self._t)

    def terms(self, order=None):
        """``(coeff, monomial)`` pairs in strictly decreasing order."""
        key = (order or self.ring.order).key
        return [(self._t[m], m) for m in sorted(self._t, key=key, reverse=True)]

    def lm(self, order=None):
        if not self._t:
            raise ValueError("zero has no leading monomial")
        return max(self._t, key=(order or self.ring.order).key)

    def lc(self, order=None):
        return self._t[self.lm(order)]

    def degree(self):
        return max((sum(m) for m in self._t), default=-1)

    def is_zero(self):
        return not self._t

    def is_scalar(self):
        return not self._t or set(self._t) == {self.ring.unit_monomial()}

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("not a scalar")
        return self._t.get(self.ring.unit_monomial(), Fraction(0))

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    # arithmetic -----------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError("cannot combine elements of different rings")
            return other._t
        if isinstance(other, (int, Fraction)):
            return {self.ring.unit_monomial(): Fraction(other)} if other else {}
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        acc = dict(self._t)
        _add_into(acc, o, ONE)
        return Poly(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        acc = dict(self._t)
        _add_into(acc, o, -ONE)
        return Poly(self.ring, acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly(self.ring, {m: c * v for m, v in self._t.items()} if c else {})
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Poly(self.ring, self.ring.mul_terms(self._t, o))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (ONE / Fraction(other))
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({self.ring.unit_monomial(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __str__(self):
        from .parsing import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def normalize_product(m1, m2, pres):
    """PBW normal form of the monomial product ``x^m1 * x^m2``."""
    pres._ensure_valid()
    return Poly(pres, dict(pres._mul_mono(tuple(m1), tuple(m2))))


def multiply(f, g, pres=None):
    pres = pres or f.ring
    return pres.coerce(f) * pres.coerce(g)


class Involution:
    """Anti-automorphism of order two given by generator images.

    Must pass :func:`verify_involution` before :func:`apply_involution`
    accepts it.
    """

    def __init__(self, ring, images):
        self.ring = ring
        if isinstance(images, Mapping):
            images = [images[name] for name in ring.variables]
        self.images = tuple(ring.coerce(f) for f in images)
        if len(self.images) != ring.n:
            raise ValueError("need one image per generator")
        self.verified = False
        self.diagnostic = None
        self._cache = {}

    def _apply_unchecked(self, f):
        ring = self.ring
        out = {}
        for mono, c in f._t.items():
            img = self._cache.get(mono)
            if img is None:
                img = ring.one()
                # reversed product: theta(x_0^a0 ... x_k^ak) = theta(x_k)^ak ... theta(x_0)^a0
                for i in reversed(range(ring.n)):
                    for _ in range(mono[i]):
                        img = img * self.images[i]
                self._cache[mono] = img
            _add_into(out, img._t, c)
        return Poly(ring, out)


def verify_involution(theta, pres=None):
    """Check relation consistency and ``theta(theta(x)) == x`` on generators.

    Sets ``theta.verified`` and stores a message for the first failure in
    ``theta.diagnostic``.
    """
    ring = pres or theta.ring
    if ring is not theta.ring:
        raise ValueError("involution belongs to a different ring")
    img = theta.images
    for (i, j), (c, low) in sorted(ring.relations.items()):
        lhs = img[i] * img[j]
        rhs = c * (img[j] * img[i]) + theta._apply_unchecked(Poly(ring, low))
        if lhs != rhs:
            theta.verified = False
            theta.diagnostic = (
                f"relation {ring.variables[j]}*{ring.variables[i]}: "
                f"theta(lhs) = {lhs} but theta(rhs) = {rhs}"
            )
            return False
    for k, g in enumerate(ring.gens()):
        if theta._apply_unchecked(img[k]) != g:
            theta.verified = False
            theta.diagnostic = f"theta(theta({ring.variables[k]})) != {ring.variables[k]}"
            return False
    theta.verified = True
    theta.diagnostic = None
    return True


def apply_involution(theta, f):
    if not theta.verified:
        raise UnverifiedInvolution("involution has not passed verify_involution")
    return theta._apply_unchecked(theta.ring.coerce(f))


def _reverse_index(n):
    return {i: n - 1 - i for i in range(n)}


def opposite(pres):
    """Presentation of the opposite ring, with generators listed in reverse.

    An element with exponents ``a`` in ``pres`` corresponds to the element
    with exponents ``reversed(a)`` in the result; see :func:`to_opposite`.
    """
    n = pres.n
    rev = _reverse_index(n)
    rels = {}
    for (i, j), (c, low) in pres.relations.items():
        # x_j x_i = c x_i x_j + p  becomes  x_i *op x_j = c (x_j *op x_i) + p
        rels[(rev[j], rev[i])] = (c, {m[::-1]: v for m, v in low.items()})
    op = RingPresentation(
        pres.variables[::-1], rels, pres.order.renamed(rev), max_degree=pres.max_degree
    )
    report = check_presentation(op)
    if not report.valid:
        raise ValidationFailure(
            report.violations + ["supply a monomial order compatible with the reversed relations"]
        )
    return op


def to_opposite(f, op):
    """Image of ``f`` in the opposite ring ``op`` (built by :func:`opposite`)."""
    return Poly(op, {m[::-1]: c for m, c in f._t.items()})


def from_opposite(f, ring):
    return Poly(ring, {m[::-1]: c for m, c in f._t.items()})
