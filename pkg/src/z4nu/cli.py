"""Command line entry point (``z4nu``).

Exit codes: 0 ok, 2 chain-ring theta, 3 oracle size limit, 4 parse or
validation error, 5 a closed-form result disagrees with the code (the
report is still printed first).
"""

import argparse
import json
import sys

from .analysis import (SpecError, analyze, dump_json, format_census, format_text,
                       load_spec_file, read_theta, run_census)
from .oracle import DEFAULT_LIMIT, OracleLimitExceeded
from .parser import ParseError, format_poly, parse_poly, parse_relem
from .poly import LengthMismatch
from .ring import ALL_THETAS, ChainRingError, classify, format_relem, k_of, Theta

EXIT_OK, EXIT_CHAIN, EXIT_LIMIT, EXIT_INPUT, EXIT_VIOLATION = 0, 2, 3, 4, 5


def _n_range(text):
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return range(a, b + 1)


def _thetas(text):
    if text.strip() == "all":
        return list(ALL_THETAS)
    return [read_theta(part.strip()) for part in text.split(",") if part.strip()]


def _build_parser():
    p = argparse.ArgumentParser(prog="z4nu", description="Cyclic codes over Z4 + vZ4 with v^2 = theta.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="canonical generators, rank, size and relation checks")
    a.add_argument("file")
    a.add_argument("--oracle", action="store_true", help="also enumerate the code and cross-check")
    a.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest code the oracle will enumerate")
    a.add_argument("--format", choices=("text", "machine"), default="text")

    c = sub.add_parser("census", help="randomized formula-vs-oracle survey")
    c.add_argument("--n", type=_n_range, default=range(1, 5))
    c.add_argument("--theta", default="all", help="'all' or a comma-separated list such as '0,2v,3+2v'")
    c.add_argument("--samples", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    c.add_argument("--format", choices=("text", "machine"), default="text")

    k = sub.add_parser("classify-theta", help="is Z4 + vZ4 with v^2 = <expr> a chain ring?")
    k.add_argument("expr")

    q = sub.add_parser("parse", help="show the coefficients of a polynomial expression")
    q.add_argument("expr")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--theta", required=True)
    return p


def _analyze(args, out):
    spec = load_spec_file(args.file)
    report = analyze(spec, oracle=args.oracle, limit=args.limit)
    out.write(dump_json(report) if args.format == "machine" else format_text(report))
    return EXIT_VIOLATION if report["violations"] else EXIT_OK


def _census(args, out):
    thetas = _thetas(args.theta)
    result = run_census(args.n, thetas, args.samples, args.seed, args.limit)
    out.write(dump_json(result) if args.format == "machine" else format_census(result))
    return EXIT_VIOLATION if result["findings"] else EXIT_OK


def _classify(args, out):
    x = parse_relem(args.expr)
    kind = classify(x)
    line = f"{format_relem(x)}: {kind}"
    if kind == "non-chain":
        line += f" (k = {format_relem(k_of(Theta(x)))})"
    out.write(line + "\n")
    return EXIT_OK


def _parse(args, out):
    theta = read_theta(args.theta)
    f = parse_poly(args.expr, args.n, theta)
    out.write(dump_json({"coefficients": [[c.a, c.b] for c in f.coeffs], "text": format_poly(f)}))
    return EXIT_OK


_COMMANDS = {"analyze": _analyze, "census": _census, "classify-theta": _classify, "parse": _parse}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except ChainRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHAIN
    except OracleLimitExceeded as exc:
        print(f"error: {exc}; raise --limit to enumerate it", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, SpecError, LengthMismatch, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
