"""Time the heavier computations on the example data.

Usage: python3 scripts/benchmark.py [repeats]
"""
import sys
import time
from pathlib import Path

from spbw import (
    compute_free_basis,
    free_resolution,
    load_ring,
    projective_dimension,
)
from spbw.cli import load_hints, load_matrix

DATA = Path(__file__).resolve().parents[1] / "data"


def timed(label, fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    print(f"{label:<40} {best:8.3f}s")


def main(argv):
    repeats = int(argv[0]) if argv else 3

    # each job reloads its ring so multiplication caches start cold
    def qw():
        R = load_ring(DATA / "quantum_weyl.ring.json")
        return R, load_matrix(R, DATA / "basis_F1.json")

    def basis_hints():
        R, F1 = qw()
        G1T = load_matrix(R, DATA / "basis_G1T_reference.json")
        compute_free_basis(F1, G1T, 4, hints=load_hints(R, DATA / "basis_hints.json"))

    def basis_search():
        R, F1 = qw()
        compute_free_basis(F1, load_matrix(R, DATA / "basis_G1T_reference.json"), 4, degree_bound=2)

    def basis_computed_inverse():
        R, F1 = qw()
        compute_free_basis(F1, None, 4)

    def pd():
        R = load_ring(DATA / "shift.ring.json")
        projective_dimension(load_matrix(R, DATA / "projdim_gens.json").row_list())

    def resolution():
        R = load_ring(DATA / "anticommuting.ring.json")
        free_resolution(load_matrix(R, DATA / "anticomm_gens.json").row_list())

    timed("free basis, hinted", basis_hints, repeats)
    timed("free basis, degree-2 search", basis_search, repeats)
    timed("free basis, computed right inverse", basis_computed_inverse, repeats)
    timed("projective dimension", pd, repeats)
    timed("free resolution", resolution, repeats)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
