"""``spbw`` command-line front end.

Every command reads one ring file plus matrix/vector files and prints a
report.  ``--json`` switches to a machine-readable report with the fixed
top-level keys of :data:`REPORT_KEYS`.

Exit status: 0 success, 1 the computed answer is negative (no inverse, not
stably free, ...), 2 the computation could not be carried out.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bases, groebner, homalg, inverses, syzygy
from .errors import (
    BoundExceeded,
    FoldFailed,
    NotStablyFree,
    SPBWError,
    ValidationFailure,
)
from .module import ModuleOrder, PolyMatrix
from .parsing import format_polynomial, parse_polynomial, ring_from_spec
from .ring import Involution, verify_involution

SCHEMA = "spbw-report/1"
REPORT_KEYS = ("schema", "command", "verdict", "exit_code", "result", "certificates", "timing")
DEFAULT_MAX_DEGREE = 64


class CliError(Exception):
    """Bad input to the command line (exit 2)."""


# file formats -------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None


def max_degree_from_env(environ=None):
    environ = os.environ if environ is None else environ
    raw = environ.get("SPBW_MAX_DEGREE")
    if raw is None or raw == "":
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"SPBW_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise CliError("SPBW_MAX_DEGREE must be positive")
    return value


def load_ring_file(path, max_degree):
    return ring_from_spec(_read_json(path), max_degree=max_degree)


def _poly(ring, value):
    if isinstance(value, (int, float)):
        if isinstance(value, float) and not value.is_integer():
            raise CliError(f"non-integer number {value} in input; write it as p/q")
        return ring.scalar(int(value))
    if not isinstance(value, str):
        raise CliError(f"matrix entry {value!r} is neither a string nor an integer")
    return parse_polynomial(value, ring)


def matrix_from_data(ring, data):
    """``{"rows": r, "cols": c, "entries": nested rows or flat row-major list}``."""
    if isinstance(data, list):
        data = {"entries": data}
    entries = data.get("entries")
    if entries is None:
        raise CliError("matrix file needs an 'entries' field")
    rows, cols = data.get("rows"), data.get("cols")
    if entries and isinstance(entries[0], list):
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        flat = [e for r in entries for e in r]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise CliError(f"entries do not form a {rows}x{cols} array")
    else:
        if rows is None or cols is None:
            raise CliError("a flat entry list needs 'rows' and 'cols'")
        flat = list(entries)
        if len(flat) != rows * cols:
            raise CliError(f"expected {rows * cols} entries, found {len(flat)}")
    polys = [_poly(ring, e) for e in flat]
    return PolyMatrix(ring, rows, cols, [polys[i * cols:(i + 1) * cols] for i in range(rows)])


def load_matrix(ring, path):
    return matrix_from_data(ring, _read_json(path))


def load_vector(ring, path):
    """A ``{"vector": [...]}`` file, or a matrix with a single row or column."""
    data = _read_json(path)
    if isinstance(data, dict) and "vector" in data:
        return tuple(_poly(ring, e) for e in data["vector"])
    M = matrix_from_data(ring, data)
    if M.rows == 1:
        return M.row(0)
    if M.cols == 1:
        return M.column(0)
    raise CliError(f"{path} holds a {M.rows}x{M.cols} matrix, not a vector")


def load_involution(ring, path):
    data = _read_json(path)
    images = data.get("images") if isinstance(data, dict) else None
    if not isinstance(images, dict):
        raise CliError("involution file needs an 'images' object")
    missing = [v for v in ring.variables if v not in images]
    if missing:
        raise CliError(f"involution file has no image for {', '.join(missing)}")
    return Involution(ring, {k: _poly(ring, images[k]) for k in ring.variables})


def load_hints(ring, path):
    """``{"a": [[...], ...], "b": [[...] or null, ...]}``; one entry per step."""
    data = _read_json(path)
    if not isinstance(data, dict) or "a" not in data:
        raise CliError("hints file needs an 'a' field")
    bs = data.get("b") or [None] * len(data["a"])
    if len(bs) != len(data["a"]):
        raise CliError("hints 'a' and 'b' lists differ in length")
    hints = []
    for a, b in zip(data["a"], bs):
        hints.append(bases.StabilizationHint(
            [_poly(ring, x) for x in a], None if b is None else [_poly(ring, x) for x in b]
        ))
    return hints


# serialization ------------------------------------------------------------

def poly_str(f):
    return format_polynomial(f)


def vec_json(v):
    return [poly_str(e) for e in v]


def matrix_json(M):
    return {"rows": M.rows, "cols": M.cols, "entries": [vec_json(r) for r in M.entries]}


def resolution_json(res):
    return {
        "length": res.length,
        "ranks": res.ranks(),
        "finite": res.finite,
        "quotient": res.quotient,
        "maps": [matrix_json(F) for F in res.maps],
        "compositions_zero": list(res.exactness),
    }


# commands -----------------------------------------------------------------

def _order(ring, args):
    prec = None
    if getattr(args, "position_precedence", None):
        try:
            prec = tuple(int(p) for p in args.position_precedence.split(","))
        except ValueError:
            raise CliError("--position-precedence takes comma-separated integers") from None
    return ModuleOrder(ring.order, args.scheme, prec)


def _generators(ring, args):
    """Generator rows from ``--gens`` or the relation matrix from ``--relations``."""
    gens = getattr(args, "gens", None)
    rels = getattr(args, "relations", None)
    if (gens is None) == (rels is None):
        raise CliError("give exactly one of --gens or --relations")
    if gens is not None:
        return load_matrix(ring, gens).row_list(), None
    return None, load_matrix(ring, rels)


def cmd_mul(args, ring):
    f, g = parse_polynomial(args.f, ring), parse_polynomial(args.g, ring)
    h = f * g
    return 0, "ok", {"product": poly_str(h)}, {}


def cmd_gb(args, ring):
    rows = load_matrix(ring, args.matrix).row_list()
    gb = groebner.buchberger(rows, _order(ring, args), args.side, ring, len(rows[0]) if rows else 0,
                             args.method)
    return 0, "ok", {"side": args.side, "generators": [vec_json(g) for g in gb.generators]}, {
        "transition": matrix_json(gb.transition)
    }


def cmd_reduce(args, ring):
    rows = load_matrix(ring, args.gens).row_list()
    v = load_vector(ring, args.vector)
    order = _order(ring, args)
    gb = groebner.buchberger(rows, order, args.side, ring, len(v), args.method)
    div = groebner.divide(v, gb.generators, order, args.side, ring, args.method)
    back = groebner.combine(div.quotients, gb.generators, args.side)
    back = tuple(a + b for a, b in zip(back, div.remainder))
    if back != v:
        raise AssertionError("division does not reconstruct its input")
    return 0, "member" if div.is_zero() else "nonmember", {
        "remainder": vec_json(div.remainder),
        "quotients": [poly_str(q) for q in div.quotients],
        "basis": [vec_json(g) for g in gb.generators],
    }, {"reconstructs_input": True}


def cmd_syz(args, ring):
    rows = load_matrix(ring, args.matrix).row_list()
    syz = syzygy.syzygies(rows, _order(ring, args), args.side, ring, len(rows[0]) if rows else 0)
    return 0, "zero" if syz.is_zero() else "nonzero", {
        "syzygies": [vec_json(z) for z in syz.generators]
    }, {"annihilates_input": True}


def cmd_resolve(args, ring):
    gens, rels = _generators(ring, args)
    order = _order(ring, args)
    if gens is not None:
        res = syzygy.free_resolution(gens, args.max_length, order, ring)
    else:
        res = syzygy.cokernel_resolution(rels, args.max_length, order)
    return 0, "finite", resolution_json(res), {"compositions_zero": all(res.exactness)}


def _inverse_result(cert, F, side):
    if cert is None:
        return 1, f"no {side} inverse", {"inverse": None}, {}
    if not cert.verify(F):
        raise AssertionError("inverse failed re-verification")
    certs = {"product": matrix_json(cert.verification)}
    if cert.other_verification is not None:
        certs["other_product"] = matrix_json(cert.other_verification)
    return 0, f"{side} inverse found", {"inverse": matrix_json(cert.inverse)}, certs


def cmd_leftinv(args, ring):
    F = load_matrix(ring, args.matrix)
    return _inverse_result(inverses.left_inverse(F, _order(ring, args)), F, "left")


def cmd_rightinv(args, ring):
    F = load_matrix(ring, args.matrix)
    if args.method == "involution":
        if not args.involution:
            raise CliError("--method involution needs --involution FILE")
        theta = load_involution(ring, args.involution)
        if not verify_involution(theta):
            raise CliError(f"involution rejected: {theta.diagnostic}")
        cert = inverses.right_inverse_involution(F, theta, _order(ring, args))
    else:
        cert = inverses.right_inverse(F, _order(ring, args))
    return _inverse_result(cert, F, "right")


def cmd_inv(args, ring):
    F = load_matrix(ring, args.matrix)
    if F.rows != F.cols:
        raise CliError("inv needs a square matrix")
    cert = inverses.square_inverse(F, _order(ring, args), fast=args.fast)
    code, verdict, result, certs = _inverse_result(cert, F, "two-sided")
    return code, "invertible" if code == 0 else "not invertible", result, certs


def _trace_json(trace):
    return [{"step": j, "right_inverse": ok} for j, ok in trace]


def cmd_pd(args, ring):
    gens, rels = _generators(ring, args)
    order = _order(ring, args)
    if args.method == "ffr":
        if gens is not None:
            res = syzygy.free_resolution(gens, args.gld_bound, order, ring)
        else:
            res = syzygy.cokernel_resolution(rels, args.gld_bound, order)
        report = homalg.projective_dimension_ffr(res)
    else:
        report = homalg.projective_dimension(gens, args.gld_bound, rels, order)
    for c in report.certificates:
        if not c.verification.is_identity():
            raise AssertionError("fold certificate failed re-verification")
    return 0, f"pd={report.pd}", {
        "pd": report.pd,
        "method": report.method,
        "fold_trace": _trace_json(report.fold_trace),
        "resolution_ranks": report.resolution_used.ranks(),
    }, {"right_inverses": [matrix_json(c.inverse) for c in report.certificates]}


def cmd_stablyfree(args, ring):
    gens, rels = _generators(ring, args)
    order = _order(ring, args)
    if rels is not None:
        syz = syzygy.syzygies(rels.column_list(), order, "left", ring, rels.rows)
        if syz.is_zero():
            verdict = homalg.is_stably_free(rels, syz, order)
            trace = [(1, verdict.stably_free)]
        else:
            verdict, _, trace = homalg.stably_free(None, rels, args.max_length, order)
    else:
        verdict, _, trace = homalg.stably_free(gens, None, args.max_length, order)
    certs = {}
    if verdict.certificate is not None:
        certs["right_inverse"] = matrix_json(verdict.certificate.inverse)
    return (0 if verdict.stably_free else 1,
            "stably free" if verdict.stably_free else "not stably free",
            {"stably_free": verdict.stably_free, "fold_trace": _trace_json(trace)}, certs)


def cmd_minpres(args, ring):
    gens, rels = _generators(ring, args)
    order = _order(ring, args)
    if gens is not None:
        res = syzygy.free_resolution(gens, args.max_length, order, ring)
    else:
        res = syzygy.cokernel_resolution(rels, args.max_length, order)
    try:
        mp = homalg.minimal_presentation(res, order)
    except FoldFailed as exc:
        return 1, "not stably free", {"failed_step": exc.step}, {}
    s, r = mp.H1.cols, mp.H1.rows
    return 0, f"0 -> A^{s} -> A^{r} -> M -> 0", {
        "H1": matrix_json(mp.H1),
        "H0": matrix_json(mp.H0),
        "fold_trace": _trace_json(mp.fold_trace),
    }, {
        "injective": mp.injectivity.is_zero(),
        "H1T_right_inverse": matrix_json(mp.splitting.inverse) if mp.splitting else None,
    }


def cmd_freebasis(args, ring):
    F1 = load_matrix(ring, args.relations)
    G1T = load_matrix(ring, args.g1t) if args.g1t else None
    hints = load_hints(ring, args.hints) if args.hints else None
    try:
        cert = bases.compute_free_basis(
            F1, G1T, args.stable_rank_bound, args.degree_bound, hints, _order(ring, args),
        )
    except NotStablyFree as exc:
        return 1, "not stably free", {"reason": str(exc)}, {}
    return 0, f"free of rank {len(cert.basis)}", {
        "U": matrix_json(cert.U),
        "basis": [vec_json(b) for b in cert.basis],
        "stable_rank_bound": cert.stable_rank_bound,
    }, {
        "U_times_G1T": matrix_json(cert.check),
        "U_inverse": matrix_json(cert.U_inverse),
        "verified": cert.verify(),
    }


def cmd_unimodular(args, ring):
    v = load_vector(ring, args.vector)
    w = bases.unimodular_witness(v, _order(ring, args))
    if w is None:
        return 1, "not unimodular", {"witness": None}, {}
    return 0, "unimodular", {"witness": vec_json(w.u)}, {"product_is_one": w.verify()}


COMMANDS = {
    "mul": cmd_mul,
    "gb": cmd_gb,
    "reduce": cmd_reduce,
    "syz": cmd_syz,
    "resolve": cmd_resolve,
    "leftinv": cmd_leftinv,
    "rightinv": cmd_rightinv,
    "inv": cmd_inv,
    "pd": cmd_pd,
    "stablyfree": cmd_stablyfree,
    "minpres": cmd_minpres,
    "freebasis": cmd_freebasis,
    "unimodular": cmd_unimodular,
}


def build_parser():
    p = argparse.ArgumentParser(prog="spbw", description="Constructive module theory over solvable rings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, help="ring presentation JSON file")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--scheme", choices=["TOP", "TOPREV"], default="TOP",
                        help="module order scheme")
    common.add_argument("--position-precedence",
                        help="comma-separated 0-based positions, highest first")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("check-ring", parents=[common])  # handled directly in run()
    s = sub.add_parser("mul", parents=[common])
    s.add_argument("f")
    s.add_argument("g")
    for name in ("gb", "syz"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("matrix", help="vectors as matrix rows")
        s.add_argument("--side", choices=["left", "right"], default="left")
        if name == "gb":
            s.add_argument("--method", choices=["opposite", "direct"], default="opposite")
    s = sub.add_parser("reduce", parents=[common])
    s.add_argument("gens", help="generator vectors as matrix rows")
    s.add_argument("vector")
    s.add_argument("--side", choices=["left", "right"], default="left")
    s.add_argument("--method", choices=["opposite", "direct"], default="opposite")

    def module_input(s, length=True):
        s.add_argument("--gens", help="module generators as matrix rows")
        s.add_argument("--relations", help="relation matrix F1 (module is its cokernel)")
        if length:
            s.add_argument("--max-length", type=int, default=None)

    module_input(sub.add_parser("resolve", parents=[common]))
    for name in ("leftinv", "rightinv", "inv"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("matrix")
        if name == "rightinv":
            s.add_argument("--method", choices=["gb", "involution"], default="gb")
            s.add_argument("--involution")
        if name == "inv":
            s.add_argument("--fast", action="store_true",
                           help="skip the syzygy test (valid for Noetherian rings)")
    s = sub.add_parser("pd", parents=[common])
    module_input(s, length=False)
    s.add_argument("--gld-bound", type=int, default=None)
    s.add_argument("--method", choices=["resolution", "ffr"], default="resolution")
    module_input(sub.add_parser("stablyfree", parents=[common]))
    module_input(sub.add_parser("minpres", parents=[common]))
    s = sub.add_parser("freebasis", parents=[common])
    s.add_argument("relations", help="relation matrix F1 (r x s)")
    s.add_argument("--g1t", help="right inverse of F1^T; computed when omitted")
    s.add_argument("--stable-rank-bound", type=int, required=True)
    s.add_argument("--degree-bound", type=int, required=True)
    s.add_argument("--hints")
    s = sub.add_parser("unimodular", parents=[common])
    s.add_argument("vector")
    return p


def _emit(report, as_json, out):
    if as_json:
        out.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
        return
    out.write(f"{report['command']}: {report['verdict']}\n")
    if report.get("error"):
        out.write(f"error: {report['error']['message']}\n")
    for key, val in (report.get("result") or {}).items():
        out.write(f"{key}: {_human(val)}\n")


def _human(val):
    if isinstance(val, dict) and "entries" in val:
        if not val["rows"] or not val["cols"]:
            return f"[{val['rows']}x{val['cols']} empty]"
        w = [max(len(r[j]) for r in val["entries"]) for j in range(val["cols"])]
        return "\n" + "\n".join(
            "  [ " + "  ".join(c.rjust(w[j]) for j, c in enumerate(r)) + " ]" for r in val["entries"]
        )
    return json.dumps(val) if isinstance(val, (list, dict)) else str(val)


def run(argv=None, out=None, environ=None):
    """Run one job; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    start = time.perf_counter()
    report = {k: None for k in REPORT_KEYS}
    report.update(schema=SCHEMA, command=args.command, certificates={})
    try:
        max_degree = max_degree_from_env(environ)
        if args.command == "check-ring":
            try:
                ring = load_ring_file(args.ring, max_degree)
                code, verdict = 0, "valid"
                result = {"variables": list(ring.variables), "violations": []}
            except ValidationFailure as exc:
                code, verdict = 1, "invalid"
                result = {"violations": exc.violations}
            certs = {}
        else:
            ring = load_ring_file(args.ring, max_degree)
            code, verdict, result, certs = COMMANDS[args.command](args, ring)
    except (CliError, SPBWError, ValueError) as exc:
        code, verdict = 2, "error"
        result, certs = None, {}
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, BoundExceeded) and exc.resolution is not None:
            report["error"]["truncated_ranks"] = exc.resolution.ranks()
    report.update(verdict=verdict, exit_code=code, result=result, certificates=certs,
                  timing={"seconds": round(time.perf_counter() - start, 6)})
    _emit(report, args.json, out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
