"""Shared loaders for the example rings and matrices under ``data/``."""
from fractions import Fraction
from pathlib import Path

from spbw import Poly, PolyMatrix, load_ring
from spbw.cli import load_matrix, load_vector

DATA = Path(__file__).resolve().parents[1] / "data"

EXAMPLE_RINGS = ["weyl", "weyl_yx", "additive_weyl", "shift", "anticommuting", "quantum_weyl"]


def ring(name):
    return load_ring(DATA / f"{name}.ring.json")


def matrix(R, name):
    return load_matrix(R, DATA / f"{name}.json")


def vector(R, name):
    return load_vector(R, DATA / f"{name}.json")


def mat(R, rows):
    return PolyMatrix.from_rows(R, [[R(e) if isinstance(e, str) else R.coerce(e) for e in r] for r in rows])


def vec(R, *entries):
    return tuple(R(e) if isinstance(e, str) else R.coerce(e) for e in entries)


def data_path(name):
    return str(DATA / name)


def random_poly(R, rnd, max_degree=4, max_terms=5):
    """Deterministic random element for seeded property checks."""
    terms = {}
    for _ in range(rnd.randint(1, max_terms)):
        d = rnd.randint(0, max_degree)
        mono = [0] * R.n
        for _ in range(d):
            mono[rnd.randrange(R.n)] += 1
        terms[tuple(mono)] = Fraction(rnd.choice([-5, -3, -2, -1, 1, 2, 4]), rnd.randint(1, 3))
    return Poly(R, terms)
