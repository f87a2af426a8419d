"""Batch command-line front end with machine-readable reports.

Every subcommand echoes its effective configuration, emits JSON by
default (CSV for tables, plain text on request) and uses exit codes
0 success, 1 identity mismatch or failed verification, 2 usage error,
3 resource bound exceeded.  Output is byte-identical across runs of the
same configuration once --no-timestamp is passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from .dimension import growth_dimension, scaling_report
from .errors import BoundExceeded, VerificationError
from .golden import GoldenInt
from .quads import (
    classify,
    elements_up_to_bidegree,
    elements_up_to_degree,
    quads_for_value,
    quads_with_bidegree,
    brute_force_sizes,
    brute_force_sizes_bi,
    size_class_profile,
    size_class_profile_bi,
    sizes_to_profile,
)
from .ringalg import (
    check_basis_rank,
    hilbert_bi,
    hilbert_bi_closed,
    hilbert_total,
    hilbert_total_closed,
)
from .sequences import (
    DEFAULT_WINDOW,
    TransitionMatrix,
    TripleSystem,
    find_seeds,
    generate_system,
    verify_system,
)

__all__ = ["main"]

# a small transition matrix known to admit growing seeds
DEFAULT_MATRIX = "3,1,-1,0"


def _parse_matrix(text: str) -> TransitionMatrix:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("matrix must be four comma-separated integers")
    return TransitionMatrix(*(int(p) for p in parts))


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _emit_json(args, command: str, config: dict, result: dict) -> None:
    envelope = {"command": command, "config": config}
    if not args.no_timestamp:
        envelope["timestamp"] = _timestamp()
    envelope["result"] = result
    print(json.dumps(envelope, indent=2))


def _emit_csv(args, config: dict, header: list, rows: list) -> None:
    cfg = " ".join(f"{k}={v}" for k, v in config.items())
    print(f"# {cfg}")
    print(",".join(header))
    for row in rows:
        print(",".join(str(v) for v in row))


def _emit_text(config: dict, lines: list) -> None:
    print("config: " + " ".join(f"{k}={v}" for k, v in config.items()))
    for line in lines:
        print(line)


def _no_csv(args) -> int | None:
    if args.format == "csv":
        print("error: csv output is only available for table commands", file=sys.stderr)
        return 2
    return None


# ---------------------------------------------------------------------------
# subcommands


def cmd_chi(args) -> int:
    bi = args.d1 is not None
    if bi:
        config = {"d1": args.d1, "d2": args.d2, "oracle": args.oracle}
        closed = size_class_profile_bi(args.d1, args.d2)
        oracle = (
            sizes_to_profile(brute_force_sizes_bi(args.d1, args.d2))
            if args.oracle
            else None
        )
    else:
        config = {"d": args.d, "oracle": args.oracle}
        closed = size_class_profile(args.d)
        oracle = sizes_to_profile(brute_force_sizes(args.d)) if args.oracle else None
    match = oracle is None or closed == oracle
    result = {"closed": closed, "oracle": oracle, "match": match}
    if args.format == "csv":
        header = ["s", "closed"] + (["oracle"] if oracle is not None else [])
        rows = [
            [s, closed[s]] + ([oracle[s]] if oracle is not None else [])
            for s in range(len(closed))
        ]
        _emit_csv(args, config, header, rows)
    elif args.format == "text":
        lines = [f"profile: {closed}"]
        if oracle is not None:
            lines += [f"oracle:  {oracle}", f"match: {match}"]
        _emit_text(config, lines)
    else:
        _emit_json(args, "chi", config, result)
    return 0 if match else 1


def cmd_enum(args) -> int:
    bi = args.d1 is not None
    if bi:
        config = {"d1": args.d1, "d2": args.d2}
        elements = elements_up_to_bidegree(args.d1, args.d2)
        expected = 2 * args.d1 * args.d2 + args.d1 + args.d2 + 1
    else:
        config = {"d": args.d}
        elements = elements_up_to_degree(args.d)
        expected = args.d * args.d + args.d + 1
    match = len(elements) == expected
    result = {
        "count": len(elements),
        "expected": expected,
        "match": match,
        "elements": [a.to_json() for a in elements],
    }
    if args.format == "csv":
        _emit_csv(args, config, ["m", "n"], [[a.m, a.n] for a in elements])
    elif args.format == "text":
        _emit_text(
            config,
            [f"count: {len(elements)} expected: {expected} match: {match}"]
            + [str(a) for a in elements],
        )
    else:
        _emit_json(args, "enum", config, result)
    return 0 if match else 1


def _quad_json(q) -> dict:
    return {
        "i": q.i,
        "a": q.a,
        "b": q.b,
        "c": q.c,
        "size": q.size,
        "degree": q.degree,
        "bidegree": list(q.bidegree.as_tuple()),
    }


def cmd_quads(args) -> int:
    if args.alpha is not None:
        m, n = args.alpha
        config = {"alpha": f"{m},{n}", "count": args.count}
        alpha = GoldenInt(m, n)
        kind = classify(alpha).kind
        quads = quads_for_value(alpha, args.count) if kind != "zero" else []
        ok = all(alpha == q.value() for q in quads)
        result = {
            "alpha": alpha.to_json(),
            "class": kind,
            "quads": [_quad_json(q) for q in quads],
            "match": ok,
        }
    else:
        d1, d2 = args.bidegree
        config = {"bidegree": f"{d1},{d2}"}
        quads = quads_with_bidegree(d1, d2)
        first, last = quads[0].value(), quads[-1].value()
        ok = (
            first == GoldenInt(d1, d2)
            and last == abs(GoldenInt(d1, -d2))
            and all(
                quads[t].size - 1 == quads[t + 1].size for t in range(len(quads) - 1)
            )
        )
        result = {
            "quads": [_quad_json(q) for q in quads],
            "first_value": first.to_json(),
            "last_value": last.to_json(),
            "match": ok,
        }
    if args.format == "csv":
        _emit_csv(
            args,
            config,
            ["i", "a", "b", "c", "size"],
            [[q.i, q.a, q.b, q.c, q.size] for q in quads],
        )
    elif args.format == "text":
        _emit_text(config, [f"({q.i}; {q.a},{q.b},{q.c}) size {q.size}" for q in quads])
    else:
        _emit_json(args, "quads", config, result)
    return 0 if result["match"] else 1


def cmd_seq(args) -> int:
    blocked = _no_csv(args)
    if blocked is not None:
        return blocked
    config = {
        "bound": args.bound,
        "seed_index": args.seed_index,
        "window": args.window,
        "verify": args.verify,
        "load": args.load,
    }
    if args.load is not None:
        with open(args.load, "r", encoding="utf-8") as fh:
            system = TripleSystem.from_json(json.load(fh))
    else:
        seeds = find_seeds(args.bound, args.seed_index + 1)
        if len(seeds) <= args.seed_index:
            print(
                f"error: only {len(seeds)} seeds exist at bound {args.bound}",
                file=sys.stderr,
            )
            return 2
        system = generate_system(seeds[args.seed_index], K=args.window)
    result = {"K": system.K, "system": system.to_json()}
    ok = True
    if args.verify:
        report = verify_system(system)
        result["verification"] = report.summary()
        ok = report.e4_abs_constant and report.theta_excludes_zero
    if args.format == "text":
        lines = [f"K={system.K} seed={system.seed.to_json()}"]
        if args.verify:
            lines.append(f"verification: {result['verification']}")
        _emit_text(config, lines)
    else:
        _emit_json(args, "seq", config, result)
    return 0 if ok else 1


def cmd_hilbert(args) -> int:
    blocked = _no_csv(args)
    if blocked is not None:
        return blocked
    matrix = _parse_matrix(args.matrix)
    if args.d1 is not None:
        config = {"d1": args.d1, "d2": args.d2, "matrix": args.matrix}
        computed = hilbert_bi(args.d1, args.d2, matrix)
        expected = hilbert_bi_closed(args.d1, args.d2)
        degree: object = [args.d1, args.d2]
        kind = "bi"
    else:
        config = {"d": args.d, "matrix": args.matrix}
        computed = hilbert_total(args.d, matrix)
        expected = hilbert_total_closed(args.d)
        degree = args.d
        kind = "total"
    match = computed == expected
    result = {
        "kind": kind,
        "degree": degree,
        "computed": computed,
        "expected": expected,
        "match": match,
    }
    if args.format == "text":
        _emit_text(config, [f"computed {computed} expected {expected} match {match}"])
    else:
        _emit_json(args, "hilbert", config, result)
    return 0 if match else 1


def cmd_basis(args) -> int:
    blocked = _no_csv(args)
    if blocked is not None:
        return blocked
    matrix = _parse_matrix(args.matrix)
    if args.d1 is not None:
        config = {"d1": args.d1, "d2": args.d2, "matrix": args.matrix}
        report = check_basis_rank((args.d1, args.d2), matrix)
    else:
        config = {"d": args.d, "matrix": args.matrix}
        report = check_basis_rank(args.d, matrix)
    result = report.summary()
    if report.dependency is not None:
        result["dependency"] = [
            {"alpha_m": key[0], "alpha_n": key[1], "j": key[2], "coeff": str(c)}
            for key, c in report.dependency
        ]
    if args.format == "text":
        _emit_text(config, [f"{k}: {v}" for k, v in result.items()])
    else:
        _emit_json(args, "basis", config, result)
    return 0 if report.spans else 1


def _interval_json(iv) -> dict:
    return iv.to_json()


def cmd_dim(args) -> int:
    if args.grid:
        config = {"grid": True}
        report = scaling_report()
        rows = [
            {
                "d": r.d,
                "fraction": str(r.fraction),
                "delta": str(r.delta),
                "dim": r.dim,
                "ratio": _interval_json(r.ratio),
                "ratio_upper": _interval_json(r.ratio_upper),
            }
            for r in report.rows
        ]
        result = {
            "rows": rows,
            "ratio_band": [str(report.ratio_low), str(report.ratio_high)],
            "upper_band": [str(report.upper_low), str(report.upper_high)],
        }
        if args.format == "csv":
            _emit_csv(
                args,
                config,
                ["d", "fraction", "dim", "ratio_lo", "ratio_hi"],
                [
                    [r.d, r.fraction, r.dim, float(r.ratio.lo), float(r.ratio.hi)]
                    for r in report.rows
                ],
            )
        elif args.format == "text":
            _emit_text(
                config,
                [
                    f"d={r.d} delta={r.delta} dim={r.dim} "
                    f"ratio=[{float(r.ratio.lo):.6f},{float(r.ratio.hi):.6f}]"
                    for r in report.rows
                ]
                + [
                    f"ratio band: [{float(report.ratio_low):.6f},"
                    f" {float(report.ratio_high):.6f}]"
                ],
            )
        else:
            _emit_json(args, "dim", config, result)
        return 0
    blocked = _no_csv(args)
    if blocked is not None:
        return blocked
    if args.d is None or args.delta is None:
        print("error: dim needs either --grid or both --d and --delta", file=sys.stderr)
        return 2
    config = {"d": args.d, "delta": args.delta}
    rep = growth_dimension(args.d, Fraction(args.delta))
    result = {
        "d": rep.d,
        "delta": str(rep.delta),
        "dim": rep.dim,
        "contributing": [
            {"quad": _quad_json(q), "weight": w} for q, w in rep.contributing
        ],
        "scale": _interval_json(rep.scale),
        "ratio": _interval_json(rep.ratio),
        "ratio_upper": _interval_json(rep.ratio_upper),
    }
    if args.format == "text":
        _emit_text(
            config,
            [
                f"dim: {rep.dim}",
                f"ratio: [{float(rep.ratio.lo):.6f}, {float(rep.ratio.hi):.6f}]",
            ],
        )
    else:
        _emit_json(args, "dim", config, result)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _add_degree_group(sub):
    sub.add_argument("--d", type=int, default=None)
    sub.add_argument("--d1", type=int, default=None)
    sub.add_argument("--d2", type=int, default=None)


def _check_degree_args(args) -> str | None:
    has_total = args.d is not None
    has_bi = args.d1 is not None or args.d2 is not None
    if has_total == has_bi:
        return "exactly one of --d or --d1/--d2 is required"
    if has_bi and (args.d1 is None or args.d2 is None):
        return "--d1 and --d2 must be given together"
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["json", "csv", "text"], default="json"
    )
    common.add_argument("--no-timestamp", action="store_true")

    parser = argparse.ArgumentParser(
        prog="goldenring",
        description="Exact golden-ratio ring combinatorics and sequence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="size-class profiles")
    _add_degree_group(p)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_chi, needs_degree=True)

    p = sub.add_parser("enum", parents=[common], help="enumerate ring elements")
    _add_degree_group(p)
    p.set_defaults(func=cmd_enum, needs_degree=True)

    p = sub.add_parser("quads", parents=[common], help="quad representations")
    p.add_argument("--alpha", type=int, nargs=2, metavar=("M", "N"), default=None)
    p.add_argument("--bidegree", type=int, nargs=2, metavar=("D1", "D2"), default=None)
    p.add_argument("--count", type=int, default=6)
    p.set_defaults(func=cmd_quads, needs_degree=False)

    p = sub.add_parser("seq", parents=[common], help="triple sequence windows")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--seed-index", type=int, default=0)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--load", type=str, default=None, metavar="FILE")
    p.set_defaults(func=cmd_seq, needs_degree=False)

    p = sub.add_parser("hilbert", parents=[common], help="graded quotient dimensions")
    _add_degree_group(p)
    p.add_argument("--matrix", type=str, default=DEFAULT_MATRIX)
    p.set_defaults(func=cmd_hilbert, needs_degree=True)

    p = sub.add_parser("basis", parents=[common], help="monomial family rank check")
    _add_degree_group(p)
    p.add_argument("--matrix", type=str, default=DEFAULT_MATRIX)
    p.set_defaults(func=cmd_basis, needs_degree=True)

    p = sub.add_parser("dim", parents=[common], help="value-bounded dimensions")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--delta", type=str, default=None, metavar="P/Q")
    p.add_argument("--grid", action="store_true")
    p.set_defaults(func=cmd_dim, needs_degree=False)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "needs_degree", False):
        problem = _check_degree_args(args)
        if problem is not None:
            print(f"error: {problem}", file=sys.stderr)
            return 2
    if args.command == "quads" and (args.alpha is None) == (args.bidegree is None):
        print("error: exactly one of --alpha or --bidegree is required", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
