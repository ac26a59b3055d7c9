"""Independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: the word rewriter works on
raw relation data and the commutative Buchberger on plain dicts.
"""
from fractions import Fraction
from itertools import combinations


# -- noncommutative multiplication by word rewriting -------------------------

def mono_to_word(mono):
    return tuple(i for i, e in enumerate(mono) for _ in range(e))


def word_to_mono(word, n):
    out = [0] * n
    for i in word:
        out[i] += 1
    return tuple(out)


class WordRewriter:
    """Normal forms in the free algebra modulo ``x_j x_i -> c x_i x_j + low``.

    ``relations`` maps ``(i, j)`` with ``i < j`` to ``(c, {exponent tuple: coeff})``.
    """

    def __init__(self, n, relations):
        self.n = n
        self.rules = {}
        for (i, j), (c, low) in relations.items():
            rhs = {(i, j): Fraction(c)}
            for mono, coeff in low.items():
                w = mono_to_word(mono)
                rhs[w] = rhs.get(w, 0) + Fraction(coeff)
            self.rules[(j, i)] = rhs

    def normal_form(self, elem):
        todo = dict(elem)
        done = {}
        while todo:
            word, coeff = todo.popitem()
            if not coeff:
                continue
            k = next((k for k in range(len(word) - 1) if word[k] > word[k + 1]), None)
            if k is None:
                done[word] = done.get(word, 0) + coeff
                continue
            rhs = self.rules.get((word[k], word[k + 1]), {(word[k + 1], word[k]): Fraction(1)})
            for w, c in rhs.items():
                new = word[:k] + w + word[k + 2:]
                todo[new] = todo.get(new, 0) + coeff * c
        return {word_to_mono(w, self.n): c for w, c in done.items() if c}

    def multiply(self, f, g):
        """``f`` and ``g`` are ``{exponent tuple: coeff}`` dicts in PBW form."""
        prod = {}
        for a, ca in f.items():
            for b, cb in g.items():
                w = mono_to_word(a) + mono_to_word(b)
                prod[w] = prod.get(w, 0) + Fraction(ca) * Fraction(cb)
        return self.normal_form(prod)


# -- naive commutative Buchberger for submodules of Q[x]^s -------------------

def _key(term):
    pos, mono = term
    return (sum(mono), mono, pos)


def _lead(v):
    return max(v, key=_key)


def _sub_scaled(v, w, c, shift):
    out = dict(v)
    for (pos, mono), d in w.items():
        t = (pos, tuple(a + b for a, b in zip(mono, shift)))
        out[t] = out.get(t, 0) - c * d
        if not out[t]:
            del out[t]
    return out


def _divides(m, n):
    return all(a <= b for a, b in zip(m, n))


def _reduce(v, basis):
    v = dict(v)
    rem = {}
    while v:
        t = _lead(v)
        c = v[t]
        for g in basis:
            lt = _lead(g)
            if lt[0] == t[0] and _divides(lt[1], t[1]):
                shift = tuple(b - a for a, b in zip(lt[1], t[1]))
                v = _sub_scaled(v, g, c / g[lt], shift)
                break
        else:
            rem[t] = c
            del v[t]
    return rem


def _monic(v):
    c = v[_lead(v)]
    return {t: d / c for t, d in v.items()}


def commutative_reduced_gb(vectors):
    """Reduced Gröbner basis under deglex (first variable largest), TOP with e_{s-1} highest.

    Vectors are ``{(position, exponent tuple): coeff}`` dicts.
    """
    G = [_monic(v) for v in vectors if v]
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        (pi, mi), (pj, mj) = _lead(G[i]), _lead(G[j])
        if pi != pj:
            continue
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        s = _sub_scaled({}, G[i], Fraction(-1), tuple(a - b for a, b in zip(lcm, mi)))
        s = _sub_scaled(s, G[j], Fraction(1), tuple(a - b for a, b in zip(lcm, mj)))
        r = _reduce(s, G)
        if r:
            G.append(_monic(r))
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimal, then reduced
    minimal = []
    for g in sorted(G, key=lambda g: _key(_lead(g))):
        lt = _lead(g)
        if not any(_lead(h)[0] == lt[0] and _divides(_lead(h)[1], lt[1]) for h in minimal):
            minimal.append(g)
    return [_monic(_reduce(g, [h for h in minimal if h is not g])) for g in minimal]
