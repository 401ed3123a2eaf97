"""Command-line front end: compute decompositions, tables, and verifications.

Subcommands::

    compute  --m M --n N --p P          one decomposition via the recursion
    oracle   --m M --n N --p P          the same by brute-force linear algebra
    table    --m-max A --n-max B --p P  every pair m <= n in range
    verify   --suite NAME ...           run a verification sweep

Output formats: ``text`` (default), ``json`` (one document per invocation),
``csv`` (with a header row).  Compositions render as ``1+1+1`` and partitions
as space-separated sizes in text and csv.  Exit codes: 0 success / all checks
passed, 1 verification failures found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .oracle import (
    DEFAULT_MAX_DIM,
    oracle_rank_sequence,
    partition_from_ranks,
)
from .partitions import as_prime, composition, is_standard, jordan_partition
from .verify import DEFAULT_COUNTEREXAMPLE_CAP, SUITE_NAMES, SweepSpec

FORMATS = ("text", "json", "csv")

TABLE_HEADER = "m,n,p,composition,partition,standard"


def _fmt_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _fmt_composition(parts) -> str:
    return "+".join(str(x) for x in parts)


def _fmt_partition(sizes) -> str:
    return " ".join(str(x) for x in sizes)


def _fmt_multiplicity(pairs) -> str:
    return " ".join(f"{mult}*{size}" for mult, size in pairs)


def _compute_doc(m: int, n: int, p: int) -> dict:
    if m > n:
        m, n = n, m
    dec = jordan_partition(m, n, p)
    comp = composition(m, n, p)
    return {
        "m": m,
        "n": n,
        "p": p,
        "composition": list(comp.parts),
        "partition": list(dec.expanded()),
        "multiplicity_form": [list(pair) for pair in dec.pairs],
        "standard": is_standard(dec, m, n),
    }


def _csv_row(doc: dict) -> str:
    return (
        f'{doc["m"]},{doc["n"]},{doc["p"]},'
        f'"{_fmt_composition(doc["composition"])}",'
        f'"{_fmt_partition(doc["partition"])}",'
        f'{_fmt_bool(doc["standard"])}'
    )


def cmd_compute(args) -> int:
    doc = _compute_doc(args.m, args.n, args.p)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print(TABLE_HEADER)
        print(_csv_row(doc))
    else:
        print(f'm={doc["m"]} n={doc["n"]} p={doc["p"]}')
        print(f'composition: {_fmt_composition(doc["composition"])}')
        print(f'partition: {_fmt_partition(doc["partition"])}')
        print(f'multiplicity form: {_fmt_multiplicity(doc["multiplicity_form"])}')
        print(f'standard: {_fmt_bool(doc["standard"])}')
    return 0


def cmd_table(args) -> int:
    if args.m_max < 1 or args.n_max < 1:
        raise ValueError(f"bounds must be >= 1, got m_max={args.m_max}, n_max={args.n_max}")
    docs = [
        _compute_doc(m, n, args.p)
        for m in range(1, args.m_max + 1)
        for n in range(m, args.n_max + 1)
    ]
    if args.format == "json":
        print(json.dumps({"rows": docs}, indent=2))
    elif args.format == "csv":
        print(TABLE_HEADER)
        for doc in docs:
            print(_csv_row(doc))
    else:
        for doc in docs:
            print(
                f'm={doc["m"]} n={doc["n"]} p={doc["p"]} '
                f'composition={_fmt_composition(doc["composition"])} '
                f'partition={_fmt_partition(doc["partition"])} '
                f'standard={_fmt_bool(doc["standard"])}'
            )
    return 0


def cmd_oracle(args) -> int:
    ranks = oracle_rank_sequence(args.m, args.n, args.p, max_dim=args.max_entries)
    sizes = partition_from_ranks(ranks)
    doc = {
        "m": args.m,
        "n": args.n,
        "p": args.p,
        "partition": list(sizes),
        "ranks": list(ranks.ranks),
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("m,n,p,partition,ranks")
        print(
            f'{doc["m"]},{doc["n"]},{doc["p"]},'
            f'"{_fmt_partition(doc["partition"])}","{_fmt_partition(doc["ranks"])}"'
        )
    else:
        print(f'm={doc["m"]} n={doc["n"]} p={doc["p"]}')
        print(f'partition: {_fmt_partition(doc["partition"])}')
        print(f'ranks: {_fmt_partition(doc["ranks"])}')
    return 0


def _run_suite(args) -> verify_mod.VerifyReport:
    cap = args.counterexample_cap
    primes = tuple(args.p) if args.p else (2,)
    if args.suite in ("oracle", "corollary1"):
        spec = SweepSpec(
            m_max=args.m_max, n_max=args.n_max, primes=primes, suites=(args.suite,)
        )
        if args.suite == "oracle":
            return verify_mod.check_oracle_agreement(spec, cap=cap, max_dim=args.max_entries)
        return verify_mod.check_corollary1(spec, cap=cap)
    if args.suite == "theorem1":
        return verify_mod.check_theorem1(args.m_max, args.n_max, cap=cap)
    if args.suite in ("periodicity", "reflection"):
        if args.m is None or args.t is None:
            raise ValueError(f"suite {args.suite!r} requires --m and --t")
        if len(primes) != 1:
            raise ValueError(f"suite {args.suite!r} takes exactly one --p")
        if args.suite == "periodicity":
            return verify_mod.check_periodicity(args.m, args.t, primes[0], args.n_max, cap=cap)
        return verify_mod.check_reflection(args.m, args.t, primes[0], cap=cap)
    # invariants
    return verify_mod.check_invariants(n_max=args.n_max, primes=primes, cap=cap)


def cmd_verify(args) -> int:
    report = _run_suite(args)
    doc = report.to_dict()
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("suite,cases_checked,failures,elapsed_ms,passed")
        print(
            f'{report.suite},{report.cases_checked},{report.failure_count},'
            f'{doc["elapsed_ms"]},{_fmt_bool(report.passed)}'
        )
    else:
        verdict = "PASS" if report.passed else "FAIL"
        print(
            f"suite={report.suite} cases_checked={report.cases_checked} "
            f"failures={report.failure_count} elapsed_ms={doc['elapsed_ms']} {verdict}"
        )
        for f in report.failures:
            print(
                f"  FAIL m={f.m} n={f.n} p={f.p} expected={f.expected} actual={f.actual}",
                file=sys.stderr,
            )
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanblocks",
        description="Jordan block decompositions of tensor products over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")

    sp = sub.add_parser("compute", help="decomposition of one (m, n, p) via the recursion")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    add_format(sp)
    sp.set_defaults(handler=cmd_compute)

    sp = sub.add_parser("table", help="decompositions for every m <= n in range")
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--p", type=int, default=2)
    add_format(sp)
    sp.set_defaults(handler=cmd_table)

    sp = sub.add_parser("oracle", help="decomposition by brute-force GF(p) linear algebra")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-entries", type=int, default=DEFAULT_MAX_DIM,
                    help="largest allowed tensor dimension m*n")
    add_format(sp)
    sp.set_defaults(handler=cmd_oracle)

    sp = sub.add_parser("verify", help="run a verification sweep")
    sp.add_argument("--suite", choices=SUITE_NAMES, required=True)
    sp.add_argument("--m-max", type=int, default=16)
    sp.add_argument("--n-max", type=int, default=64)
    sp.add_argument("--m", type=int, default=None,
                    help="fixed m for the periodicity/reflection suites")
    sp.add_argument("--t", type=int, default=None,
                    help="period exponent: the period is p^t")
    sp.add_argument("--p", type=int, action="append", default=None,
                    help="prime to sweep; repeatable")
    sp.add_argument("--max-entries", type=int, default=DEFAULT_MAX_DIM)
    sp.add_argument("--counterexample-cap", type=int, default=DEFAULT_COUNTEREXAMPLE_CAP)
    add_format(sp)
    sp.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse already printed the diagnostic
        return int(exit_.code or 0)
    try:
        if hasattr(args, "p") and args.p is not None:
            primes = args.p if isinstance(args.p, list) else [args.p]
            for p in primes:
                as_prime(p)
        return args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
