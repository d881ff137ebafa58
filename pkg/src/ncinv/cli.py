"""Command line front end.

Subcommands: dim, basis, hilbert, rewrite, verify, moments.  Exit codes:
0 success, 1 verification failure, 2 usage or data error.  Rational values
print as "p/q" strings; only quadrature columns print decimals, at the
precision set by --precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brackets import BracketExpression, to_noncrossing
from .cache import ResultCache
from .freeprob import CumulantSequence, moments_from_cumulants
from .group_action import GroupElement, default_witnesses, is_invariant
from .hilbert import (
    QUADRATURE_TOL,
    dims_by_chebyshev,
    dims_by_enumeration,
    dims_by_quadrature,
)
from .partitions import count_m_partite_nc_pairings
from .symbolic import noncrossing_basis


def _add_cache_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--no-cache", action="store_true",
                        help="bypass the result cache entirely")
    parser.add_argument("--cache-dir", default=None,
                        help="cache directory (default: $NCINV_CACHE_DIR or ~/.cache/ncinv)")


def _cache_from(args) -> ResultCache:
    return ResultCache(args.cache_dir, enabled=not args.no_cache)


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncinv",
        description="Noncrossing bases of noncommutative SL(2) invariants of "
                    "binary forms, and their dimension series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="dimension of the degree-m invariant space")
    p_dim.add_argument("--d", type=_nonneg, required=True, help="form degree")
    p_dim.add_argument("--m", type=_nonneg, required=True, help="word length")
    _add_cache_flags(p_dim)

    p_basis = sub.add_parser("basis", help="print the noncrossing basis")
    p_basis.add_argument("--d", type=_nonneg, required=True)
    p_basis.add_argument("--m", type=_nonneg, required=True)
    p_basis.add_argument("--format", choices=("text", "json"), default="text")

    p_hil = sub.add_parser("hilbert", help="dimension series by one or all methods")
    p_hil.add_argument("--d", type=_nonneg, required=True)
    p_hil.add_argument("--max-m", type=_nonneg, required=True)
    p_hil.add_argument("--method", default="all",
                       choices=("enumeration", "chebyshev", "quadrature", "all"))
    p_hil.add_argument("--nodes", type=int, default=256,
                       help="quadrature panels (default 256)")
    p_hil.add_argument("--format", choices=("text", "csv", "json"), default=None,
                       help="default: text for single methods, csv for all")
    p_hil.add_argument("--precision", type=int, default=12,
                       help="significant digits for quadrature output")
    _add_cache_flags(p_hil)

    p_rw = sub.add_parser("rewrite", help="rewrite a bracket expression file "
                                          "into its noncrossing normal form")
    p_rw.add_argument("expression_file", help="JSON bracket expression")

    p_ver = sub.add_parser("verify", help="check invariance of every basis element")
    p_ver.add_argument("--d", type=_nonneg, required=True)
    p_ver.add_argument("--m", type=_nonneg, required=True)
    p_ver.add_argument("--witnesses", type=_nonneg, default=5,
                       help="number of seeded random witnesses (default 5)")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--witness-matrix", nargs=4, action="append", default=[],
                       metavar=("A", "B", "C", "E"),
                       help="extra witness as four rationals, det must be 1")

    p_mom = sub.add_parser("moments", help="moments of a cumulant rule")
    p_mom.add_argument("--rule", required=True,
                       help='semicircle | free-poisson | table:[c1,c2,...]')
    p_mom.add_argument("--n", type=_nonneg, required=True, help="highest order")

    return parser


def _cmd_dim(args) -> int:
    cache = _cache_from(args)
    count = cache.fetch(
        "dim", {"d": args.d, "m": args.m},
        lambda: count_m_partite_nc_pairings(args.m, args.d),
    )
    print(count)
    return 0


def _cmd_basis(args) -> int:
    basis = noncrossing_basis(args.m, args.d)
    if args.format == "json":
        print(json.dumps([poly.to_json_dict() for poly in basis]))
    else:
        for poly in basis:
            print(poly.pretty())
    return 0


def _cmd_hilbert(args) -> int:
    fmt = args.format or ("csv" if args.method == "all" else "text")
    cache = _cache_from(args)

    def enum_dims() -> list[int]:
        return cache.fetch(
            "hilbert-enum", {"d": args.d, "M": args.max_m},
            lambda: list(dims_by_enumeration(args.d, args.max_m).dims),
        )

    if args.method == "all":
        enum = enum_dims()
        cheb = dims_by_chebyshev(args.d, args.max_m).dims
        quad = dims_by_quadrature(args.d, args.max_m, args.nodes).dims
        rows = [
            (m, enum[m], cheb[m], quad[m], abs(quad[m] - enum[m]))
            for m in range(args.max_m + 1)
        ]
        mismatch = any(r[1] != r[2] for r in rows)
        quad_bad = any(r[4] > QUADRATURE_TOL for r in rows)
        if fmt == "json":
            print(json.dumps({
                "d": args.d,
                "rows": [
                    {"m": m, "enum": en, "cheb": ch, "quad": qu, "abs_err": err}
                    for m, en, ch, qu, err in rows
                ],
                "exact_mismatch": mismatch,
                "quad_above_tol": quad_bad,
            }))
        else:
            print("m,enum,cheb,quad,abs_err")
            for m, en, ch, qu, err in rows:
                print(f"{m},{en},{ch},{qu:.{args.precision}g},{err:.3e}")
        if mismatch or quad_bad:
            print("method comparison failed", file=sys.stderr)
            return 1
        return 0

    if args.method == "enumeration":
        dims = enum_dims()
    elif args.method == "chebyshev":
        dims = list(dims_by_chebyshev(args.d, args.max_m).dims)
    else:
        dims = list(dims_by_quadrature(args.d, args.max_m, args.nodes).dims)

    def fmt_value(v):
        return f"{v:.{args.precision}g}" if isinstance(v, float) else str(v)

    if fmt == "json":
        print(json.dumps({"d": args.d, "method": args.method, "dims": list(dims)}))
    elif fmt == "csv":
        print("m," + args.method)
        for m, v in enumerate(dims):
            print(f"{m},{fmt_value(v)}")
    else:
        print(",".join(fmt_value(v) for v in dims))
    return 0


def _cmd_rewrite(args) -> int:
    with open(args.expression_file, encoding="utf-8") as handle:
        data = json.load(handle)
    expr = BracketExpression.from_json_dict(data)
    print(json.dumps(to_noncrossing(expr).to_json_dict()))
    return 0


def _cmd_verify(args) -> int:
    witnesses = list(default_witnesses(args.seed, args.witnesses))
    for quad in args.witness_matrix:
        witnesses.append(GroupElement(*(Fraction(v) for v in quad)))
    basis = noncrossing_basis(args.m, args.d)
    failures = 0
    for i, poly in enumerate(basis):
        ok = is_invariant(poly, witnesses)
        print(f"{'PASS' if ok else 'FAIL'} element {i}: {poly.pretty()}")
        if not ok:
            failures += 1
    return 1 if failures else 0


def _cmd_moments(args) -> int:
    rule = CumulantSequence.parse(args.rule)
    moments = moments_from_cumulants(rule, args.n)
    print(",".join(str(moments[k]) for k in range(args.n + 1)))
    return 0


_HANDLERS = {
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "hilbert": _cmd_hilbert,
    "rewrite": _cmd_rewrite,
    "verify": _cmd_verify,
    "moments": _cmd_moments,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
