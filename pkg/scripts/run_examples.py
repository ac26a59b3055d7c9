"""Run every worked example under data/ through the spbw command line.

Usage: python3 scripts/run_examples.py [--json]
"""
import sys
from pathlib import Path

from spbw.cli import run

DATA = Path(__file__).resolve().parents[1] / "data"


def d(name):
    return str(DATA / name)


def r(name):
    return ["--ring", d(f"{name}.ring.json")]


JOBS = [
    ("left inverse (TOPREV)", ["leftinv", *r("weyl"), d("leftinv_F.json"), "--scheme", "TOPREV"]),
    ("additive Weyl inverse", ["inv", *r("additive_weyl"), d("additive_FT.json")]),
    ("right inverse via involution",
     ["rightinv", *r("weyl"), d("involution_F.json"), "--method", "involution",
      "--involution", d("involution_theta.json")]),
    ("right inverse via Groebner basis", ["rightinv", *r("weyl"), d("rightinv_F.json")]),
    ("projective dimension", ["pd", *r("shift"), "--gens", d("projdim_gens.json")]),
    ("projective dimension (ffr)", ["pd", *r("shift"), "--gens", d("projdim_gens.json"), "--method", "ffr"]),
    ("stably free, anticommuting", ["stablyfree", *r("anticommuting"), "--gens", d("anticomm_gens.json")]),
    ("minimal presentation", ["minpres", *r("weyl_yx"), "--relations", d("minpres_F1.json")]),
    ("stably free, Weyl", ["stablyfree", *r("weyl_yx"), "--relations", d("minpres_F1.json")]),
    ("unimodular column", ["unimodular", *r("quantum_weyl"), d("stable_v.json")]),
    ("free basis with hints",
     ["freebasis", *r("quantum_weyl"), d("basis_F1.json"), "--g1t", d("basis_G1T_reference.json"),
      "--hints", d("basis_hints.json"), "--stable-rank-bound", "4", "--degree-bound", "1"]),
    ("free basis by search",
     ["freebasis", *r("quantum_weyl"), d("basis_F1.json"), "--stable-rank-bound", "4", "--degree-bound", "2"]),
]


def main(argv):
    extra = ["--json"] if "--json" in argv else []
    codes = []
    for title, job in JOBS:
        print(f"== {title}")
        codes.append(run(job + extra))
        print()
    print("exit codes:", " ".join(map(str, codes)))
    return 2 if 2 in codes else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
