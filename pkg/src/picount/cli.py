"""Command-line front end: compute, trace, tabulate, verify, benchmark.

Exit status: 0 on success, 2 for invalid arguments, 3 when ``verify``
finds a disagreement with the sieve oracle.  Results go to stdout (or to
``--out`` when given); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .counting import breakdown, prime_pi
from .oracle import sieve_primes
from .overlap import overlap_terms
from .restricted import sieve_restricted

__all__ = ["build_parser", "main"]

TRACE_FIELDS = (
    "n",
    "pi",
    "even_composites",
    "odd_composite_raw_sum",
    "lambda_c",
    "odd_composites",
    "restricted_indices",
)


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picount",
        description="Exact prime counting via odd-composite progressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    out_opts = argparse.ArgumentParser(add_help=False)
    out_opts.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    fmt_opts = argparse.ArgumentParser(add_help=False)
    fmt_opts.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )

    p = sub.add_parser("pi", parents=[fmt_opts, out_opts], help="print pi(N)")
    p.add_argument("n", type=_int_at_least(0))
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("trace", parents=[fmt_opts, out_opts], help="print the full breakdown of pi(N)")
    p.add_argument("n", type=_int_at_least(2))
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("table", parents=[fmt_opts, out_opts], help="print N,pi rows for each N")
    p.add_argument("ns", metavar="N", nargs="+", type=_int_at_least(0))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[out_opts], help="check pi against the sieve on [2, N]")
    p.add_argument("n", type=_int_at_least(2))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[out_opts], help="time pi and report correction-term counts")
    p.add_argument("--max", dest="max_n", type=_int_at_least(2), required=True)
    p.add_argument("--step", type=_int_at_least(1), default=None, help="defaults to --max")
    p.set_defaults(func=cmd_bench)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_pi(args: argparse.Namespace) -> int:
    value = prime_pi(args.n)
    if args.format == "json":
        text = json.dumps({"n": args.n, "pi": value})
    elif args.format == "csv":
        text = f"{args.n},{value}"
    else:
        text = str(value)
    _emit(text, args.out)
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    trace = breakdown(args.n)
    payload = {
        "n": trace.n,
        "pi": trace.pi,
        "even_composites": trace.even_composites,
        "odd_composite_raw_sum": trace.raw_odd_sum,
        "lambda_c": trace.lambda_c,
        "odd_composites": trace.odd_composites,
        "restricted_indices": list(trace.restricted_indices),
    }
    if args.format == "json":
        text = json.dumps(payload)
    elif args.format == "csv":
        row = [str(payload[key]) for key in TRACE_FIELDS[:-1]]
        row.append(";".join(str(n) for n in payload["restricted_indices"]))
        text = ",".join(TRACE_FIELDS) + "\n" + ",".join(row)
    else:
        lines = [f"{key}: {payload[key]}" for key in TRACE_FIELDS[:-1]]
        lines.append(
            "restricted_indices: " + " ".join(str(n) for n in payload["restricted_indices"])
        )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    rows = [(n, prime_pi(n)) for n in args.ns]
    if args.format == "json":
        text = json.dumps([{"n": n, "pi": v} for n, v in rows])
    elif args.format == "csv":
        text = "\n".join(f"{n},{v}" for n, v in rows)
    else:
        text = "\n".join(f"{n} {v}" for n, v in rows)
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    tables = sieve_primes(args.n)
    for k in range(2, args.n + 1):
        got = prime_pi(k)
        want = tables.pi(k)
        if got != want:
            _emit(f"MISMATCH at N={k}: pi={got} sieve={want}", args.out)
            return 3
    _emit(f"OK {args.n - 1}", args.out)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    step = args.step if args.step is not None else args.max_n
    lines = ["n,seconds,lambda_terms"]
    for n in range(step, args.max_n + 1, step):
        started = time.perf_counter()
        prime_pi(n)
        elapsed = time.perf_counter() - started
        terms = sum(1 for _ in overlap_terms(sieve_restricted(n)))
        lines.append(f"{n},{elapsed:.6f},{terms}")
    _emit("\n".join(lines), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"picount: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
