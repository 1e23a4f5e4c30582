"""Command-line front end: ``selfdual <verb> [options]``.

Results go to stdout as ``key value`` lines (``--format tsv`` separates with
tabs); progress goes to stderr.  Exit status: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib.metadata import PackageNotFoundError, version

from . import buildup as bu
from .codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    inner_product_report,
    min_weight,
    residue_code,
    torsion_code,
    weight_enumerator,
)
from .io import FormatError, format_code, format_vector, read_code, read_vector, write_code
from .lattice import NotPositiveDefinite, NotSelfDualCode, lattice_report
from .ring import NoSolution, NotAUnit, RingError, get_ring, parse_ring, solve_alpha_beta

DOMAIN_ERRORS = (
    BudgetExceeded, FormatError, RingError, NoSolution, NotAUnit, NotPositiveDefinite,
    NotSelfDualCode, bu.WitnessInvalid, bu.NotSelfDual, bu.LengthTooSmall,
    bu.FreeRankTooSmall, bu.Exhausted, ValueError, ArithmeticError, OSError,
)


class Out:
    def __init__(self, fmt: str, stream=None):
        self.sep = "\t" if fmt == "tsv" else " "
        self.stream = stream or sys.stdout

    def __call__(self, key, *values):
        self.stream.write(self.sep.join([str(key), *map(str, values)]) + "\n")

    def raw(self, text: str):
        self.stream.write(text)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _pkg_version() -> str:
    try:
        return version("selfdual")
    except PackageNotFoundError:
        return "0+unknown"


def _elem(spec, a) -> str:
    return format_vector([a], spec)


def _emit_code(args, out: Out, code) -> None:
    if args.out:
        write_code(args.out, code)
        out("written", args.out)
    else:
        out.raw(format_code(code))


def _alpha_beta(args, spec):
    if args.alpha is None and args.beta is None:
        return None, None
    if args.alpha is None or args.beta is None:
        raise ValueError("give both --alpha and --beta")
    R = get_ring(spec)
    return R.element(args.alpha), R.element(args.beta)


# --------------------------------------------------------------------------
# verbs


def cmd_verify(args, out: Out) -> int:
    code = read_code(args.code)
    rep = inner_product_report(code)
    out("ring", code.spec)
    out("length", code.n)
    out("rows", code.k)
    out("type", *code.blocks)
    out("cardinality", rep.cardinality)
    out("self-orthogonal", str(rep.self_orthogonal).lower())
    out("self-dual", str(rep.self_dual).lower())
    for i, j, v in rep.failures()[:10]:
        out("nonzero-inner-product", i, j, _elem(code.spec, v))
    return 0 if rep.self_dual else 1


def cmd_wenum(args, out: Out) -> int:
    code = read_code(args.code)
    we = weight_enumerator(code, args.kind, budget=args.budget, jobs=args.jobs)
    out("kind", we.kind)
    out("counts", *we.counts)
    out("total", we.total)
    out("min", we.min_weight if we.min_weight is not None else "none")
    return 0


def cmd_minweight(args, out: Out) -> int:
    code = read_code(args.code)
    mw = min_weight(code, args.kind, budget=args.budget, jobs=args.jobs,
                    use_residue=not args.no_residue)
    out("kind", args.kind)
    out("d", mw.weight if mw.weight is not None else "none")
    out("method", mw.method)
    if mw.witness is not None:
        out("witness", format_vector(mw.witness, code.spec))
    return 0


def cmd_residue(args, out: Out) -> int:
    code = read_code(args.code)
    _emit_code(args, out, torsion_code(code) if args.torsion else residue_code(code))
    return 0


def cmd_buildup(args, out: Out) -> int:
    code = read_code(args.code)
    a, b = _alpha_beta(args, code.spec)
    x1 = read_vector(args.x1, code.spec)
    x2 = read_vector(args.x2, code.spec)
    if a is None:
        a, b = solve_alpha_beta(code.spec)
    w = bu.BuildUpWitness(code.spec, a, b, x1, x2)
    _emit_code(args, out, bu.buildup(code, w))
    return 0


def cmd_reduce(args, out: Out) -> int:
    code = read_code(args.code)
    a, b = _alpha_beta(args, code.spec)
    cert = bu.reduce(code, a, b)
    out("permutation", ",".join(map(str, cert.perm.tolist())))
    out("alpha", _elem(code.spec, cert.witness.alpha))
    out("beta", _elem(code.spec, cert.witness.beta))
    out("x1", format_vector(cert.witness.x1, code.spec))
    out("x2", format_vector(cert.witness.x2, code.spec))
    out("unit-components", *cert.unit_counts)
    out("round-trip", str(cert.check()).lower())
    _emit_code(args, out, cert.c0)
    return 0


def cmd_search_witness(args, out: Out) -> int:
    code = read_code(args.code)
    a, b = _alpha_beta(args, code.spec)
    for w in bu.find_witness_vectors(code, args.strategy, seed=args.seed, count=args.count,
                                     alpha=a, beta=b):
        out("witness", format_vector(w.x1, code.spec), format_vector(w.x2, code.spec))
    return 0


def cmd_lattice(args, out: Out) -> int:
    code = read_code(args.code)
    rep = lattice_report(code, theta_depth=args.theta_depth)
    for k, v in rep.lines():
        out(k.replace(" ", "-"), v)
    return 0


def _row_range(text: str | None):
    if not text:
        return None
    if ".." in text:
        a, b = text.split("..", 1)
        return range(int(a), int(b) + 1)
    return [int(x) for x in text.split(",")]


def cmd_reproduce(args, out: Out) -> int:
    from .search import reproduce_table

    reports = reproduce_table(args.table, _row_range(args.rows), budget=args.budget,
                              jobs=args.jobs, method=args.method,
                              progress=lambda r: _progress(f"row {r.row}: {r.seconds:.1f}s"))
    for r in reports:
        out.raw(r.line().replace("\t", out.sep) + "\n")
    passed = sum(r.passed for r in reports)
    out("passed", f"{passed}/{len(reports)}")
    return 0 if passed == len(reports) else 1


def cmd_discover(args, out: Out) -> int:
    from .search import discover

    seed = read_code(args.seed_code)
    found = discover(seed, args.rng, args.count, args.min_d, out_dir=args.out,
                     budget=args.budget, jobs=args.jobs,
                     progress=lambda t, item: _progress(f"trial {t}: {item.name} d={item.d}"))
    for item in found:
        out.raw(item.manifest_line().replace("\t", out.sep) + "\n")
    out("found", len(found))
    return 0


def cmd_solve_ab(args, out: Out) -> int:
    spec = parse_ring(args.ring)
    a, b = solve_alpha_beta(spec)
    out("alpha", _elem(spec, a), "beta", _elem(spec, b))
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .search import catalog_hash

    p = argparse.ArgumentParser(
        prog="selfdual",
        description="Build and check self-dual codes over GF(q), Z/p^m and GR(p^m, r).")
    p.add_argument("--version", action="version",
                   version=f"selfdual {_pkg_version()} fixtures {catalog_hash()}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    heavy = argparse.ArgumentParser(add_help=False)
    heavy.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum number of codewords to enumerate (default 2^33)")
    heavy.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                       help="worker threads for enumeration")
    ab = argparse.ArgumentParser(add_help=False)
    ab.add_argument("--alpha", type=int, help="unit alpha (default: solved for the ring)")
    ab.add_argument("--beta", type=int, help="unit beta with alpha^2 + beta^2 + 1 = 0")

    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, func, help, parents=()):
        sp = sub.add_parser(name, help=help, description=help, parents=[common, *parents])
        sp.set_defaults(func=func)
        return sp

    s = verb("verify", cmd_verify, "self-duality check: G G^T = 0 and |C|^2 = |R|^n")
    s.add_argument("--code", required=True)

    s = verb("wenum", cmd_wenum, "weight enumerator by Gray-code enumeration", [heavy])
    s.add_argument("--code", required=True)
    s.add_argument("--kind", choices=("hamming", "euclidean"), default="hamming")

    s = verb("minweight", cmd_minweight,
             "minimum weight with a witness; free codes over non-field chain rings use "
             "the residue code", [heavy])
    s.add_argument("--code", required=True)
    s.add_argument("--kind", choices=("hamming", "euclidean"), default="hamming")
    s.add_argument("--no-residue", action="store_true", help="always enumerate the full code")

    s = verb("residue", cmd_residue, "residue code (or torsion code) over the residue field")
    s.add_argument("--code", required=True)
    s.add_argument("--torsion", action="store_true")
    s.add_argument("--out")

    s = verb("buildup", cmd_buildup,
             "building-up construction: length 2n self-dual code plus x1, x2 -> length 2n+4",
             [ab])
    s.add_argument("--code", required=True)
    s.add_argument("--x1", required=True, help="comma-separated vector or a file")
    s.add_argument("--x2", required=True)
    s.add_argument("--out")

    s = verb("reduce", cmd_reduce,
             "converse of the building-up construction: recover C0, x1, x2 and the permutation",
             [ab])
    s.add_argument("--code", required=True)
    s.add_argument("--out", help="file for C0 (default: stdout)")

    s = verb("search-witness", cmd_search_witness,
             "stream witness pairs (x1, x2) for the building-up construction", [ab])
    s.add_argument("--code", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--strategy", choices=("random", "exhaustive"), default="random")

    s = verb("lattice", cmd_lattice, "Construction A lattice: det, minimum norm, kissing number")
    s.add_argument("--code", required=True)
    s.add_argument("--theta-depth", type=int, default=1, help="number of shells to count")

    s = verb("reproduce", cmd_reproduce,
             "rebuild a published witness table (1-8) and compare invariants", [heavy])
    s.add_argument("--table", type=int, required=True, choices=range(1, 9))
    s.add_argument("--rows", help="a..b or a,b,c (1-based)")
    s.add_argument("--method", choices=("auto", "full"), default="auto",
                   help="full: enumerate every codeword even where the residue shortcut applies")

    s = verb("discover", cmd_discover,
             "random building-up search keeping codes with distinct weight enumerators", [heavy])
    s.add_argument("--seed-code", required=True)
    s.add_argument("--rng", type=int, required=True)
    s.add_argument("--count", type=int, required=True, help="number of trials")
    s.add_argument("--min-d", type=int, required=True)
    s.add_argument("--out")

    s = verb("solve-ab", cmd_solve_ab, "units alpha, beta with alpha^2 + beta^2 + 1 = 0")
    s.add_argument("--ring", required=True, help='e.g. "gf 7", "z 3 2", "gr 3 2 2"')
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.format)
    try:
        return args.func(args, out)
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
