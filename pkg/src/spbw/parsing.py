"""Polynomial expression syntax and the JSON ring file format.

Grammar (juxtaposition is multiplication)::

    sum     := ['+'|'-'] product (('+'|'-') product)*
    product := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := ('-'|'+') unary | power
    power   := atom ('^' INT)?
    atom    := INT | VARIABLE | '(' sum ')'

Division is only allowed by a nonzero rational constant.  Variable names are
matched greedily against the ring's generator names, so ``xy`` reads as
``x*y`` when the ring has generators ``x`` and ``y``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import PolySyntaxError, UnknownVariable, ValidationFailure
from .ring import MonomialOrder, Poly, RingPresentation, check_presentation


class _Parser:
    def __init__(self, text, names, mul, scalar, var):
        self.text = text
        self.pos = 0
        # longest names first for greedy matching
        self.names = sorted(names, key=len, reverse=True)
        self.mul = mul
        self.scalar = scalar
        self.var = var

    def error(self, msg):
        raise PolySyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        if not self.text.strip():
            self.error("empty expression")
        value = self.sum()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def starts_atom(self):
        ch = self.peek()
        return ch.isdigit() or ch == "(" or ch.isalpha() or ch == "_" or ord(ch[:1] or "a") > 127

    def sum(self):
        value = None
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        value = self.product()
        if sign < 0:
            value = -value
        while self.peek() and self.peek() in "+-":
            op = self.peek()
            self.pos += 1
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self):
        value = self.unary()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = self.mul(value, self.unary())
            elif ch == "/":
                self.pos += 1
                start = self.pos
                d = self.power()
                c = self.constant_of(d)
                if c is None or c == 0:
                    self.pos = start
                    self.error("division only by a nonzero constant")
                value = value * (1 / c)
            elif ch and self.starts_atom():
                value = self.mul(value, self.power())
            else:
                return value

    def unary(self):
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.unary()
        if ch == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("exponent must be a non-negative integer")
            e = int(self.text[start:self.pos])
            out = self.scalar(1)
            for _ in range(e):
                out = self.mul(out, base)
            return out
        return base

    def atom(self):
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            value = self.sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return self.scalar(int(self.text[start:self.pos]))
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return self.var(name)
        start = self.pos
        end = start
        while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            end += 1
        raise UnknownVariable(f"unknown variable {self.text[start:max(end, start + 1)]!r}", start)

    def constant_of(self, value):
        if isinstance(value, Poly):
            return value.scalar_value() if value.is_scalar() else None
        if isinstance(value, _Words):
            return value.constant()
        return value


def parse_polynomial(text, pres):
    """Parse ``text`` into the PBW normal form of ``pres``."""
    return _Parser(
        text, pres.variables, lambda a, b: a * b, pres.scalar, pres.gen
    ).parse()


class _Words:
    """Free-algebra expression: linear combination of generator words."""

    def __init__(self, terms):
        self.terms = {w: c for w, c in terms.items() if c}

    @staticmethod
    def const(c):
        return _Words({(): Fraction(c)})

    def __add__(self, o):
        t = dict(self.terms)
        for w, c in o.terms.items():
            t[w] = t.get(w, 0) + c
        return _Words(t)

    def __neg__(self):
        return _Words({w: -c for w, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return _Words({w: c * o for w, c in self.terms.items()})
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                t[w1 + w2] = t.get(w1 + w2, 0) + c1 * c2
        return _Words(t)

    def constant(self):
        if set(self.terms) <= {()}:
            return self.terms.get((), Fraction(0))
        return None


def parse_words(text, names):
    """Parse into a free-algebra word combination (no rewriting)."""
    idx = {name: i for i, name in enumerate(names)}
    return _Parser(
        text, names, lambda a, b: a * b, _Words.const, lambda v: _Words({(idx[v],): Fraction(1)})
    ).parse()


def _word_to_monomial(word, n):
    if list(word) != sorted(word):
        return None
    m = [0] * n
    for i in word:
        m[i] += 1
    return tuple(m)


def ring_from_spec(spec, max_degree=None):
    """Build and validate a ring from the JSON-compatible ring file structure."""
    field = spec.get("field", "QQ")
    if field != "QQ":
        raise ValidationFailure([f"unsupported field {field!r}; only QQ is available"])
    names = list(spec["variables"])
    n = len(names)
    order_spec = spec.get("order", {}) or {}
    kind = order_spec.get("type", "deglex")
    prec_names = order_spec.get("precedence", names)
    try:
        prec = tuple(names.index(v) for v in prec_names)
    except ValueError as exc:
        raise ValidationFailure([f"order precedence names an unknown variable: {exc}"]) from None
    order = MonomialOrder(kind, prec)
    relations = {}
    problems = []
    for rel in spec.get("relations", []):
        left = parse_words(rel["left"], names)
        if len(left.terms) != 1 or next(iter(left.terms.values())) != 1:
            problems.append(f"left side {rel['left']!r} must be a product of two generators")
            continue
        (word,) = left.terms
        if len(word) != 2 or word[0] <= word[1]:
            problems.append(
                f"left side {rel['left']!r} must be x_j*x_i with x_j listed after x_i"
            )
            continue
        j, i = word
        right = parse_words(rel["right"], names)
        c = 0
        low = {}
        lead = _word_to_monomial((i, j), n)
        for w, coeff in right.terms.items():
            mono = _word_to_monomial(w, n)
            if mono is None:
                problems.append(
                    f"right side {rel['right']!r}: word "
                    f"{'*'.join(names[t] for t in w)} is not in PBW order"
                )
                continue
            if mono == lead:
                c += coeff
            else:
                low[mono] = low.get(mono, 0) + coeff
        if (i, j) in relations:
            problems.append(f"duplicate relation for {rel['left']!r}")
        relations[(i, j)] = (c, low)
    if problems:
        raise ValidationFailure(problems)
    ring = RingPresentation(names, relations, order, max_degree=max_degree)
    check_presentation(ring).raise_if_invalid()
    return ring


def make_ring(variables, relations=None, order="deglex", precedence=None, max_degree=None):
    """Shorthand used by tests and scripts: ``make_ring("x y", {"y*x": "-x*y+1"})``."""
    if isinstance(variables, str):
        variables = variables.split()
    spec = {
        "field": "QQ",
        "variables": list(variables),
        "relations": [{"left": k, "right": v} for k, v in (relations or {}).items()],
        "order": {"type": order, "precedence": list(precedence or variables)},
    }
    return ring_from_spec(spec, max_degree=max_degree)


def load_ring(path, max_degree=None):
    with open(path) as fh:
        return ring_from_spec(json.load(fh), max_degree=max_degree)


def format_scalar(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(names, mono):
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f, order=None):
    """Descending terms, explicit ``*``; reparses to the same element."""
    if f.is_zero():
        return "0"
    out = []
    for c, mono in f.terms(order):
        mstr = format_monomial(f.ring.variables, mono)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mstr:
            body = format_scalar(a)
        elif a == 1:
            body = mstr
        else:
            body = f"{format_scalar(a)}*{mstr}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
