#!/usr/bin/env python3
"""Full verification campaign: every suite at its campaign-default ranges.

Default ranges: recursion vs oracle exhaustively to n = 48 at p = 2 and to
n = 24 at p = 3 and 5 (``--full`` raises these to 64 and 40); the p = 2
standardness predicate to n = 256 (recursion only); periodicity and
reflection for p in {2, 3} over every (t, m) with m <= p^t <= 32; the
all-ones-composition equivalence to n = 64; and 10^4 seeded random structural
invariant checks up to n = 1024.

Prints one line per report and exits 1 if anything failed.
"""

import argparse
import sys

from jordanblocks.verify import (
    SweepSpec,
    check_corollary1,
    check_invariants,
    check_oracle_agreement,
    check_periodicity,
    check_reflection,
    check_theorem1,
)


def show(report, context=""):
    verdict = "PASS" if report.passed else "FAIL"
    suffix = f" [{context}]" if context else ""
    print(
        f"suite={report.suite}{suffix} cases_checked={report.cases_checked} "
        f"failures={report.failure_count} elapsed_ms={report.elapsed * 1000:.1f} {verdict}"
    )
    for f in report.failures[:10]:
        print(f"  FAIL m={f.m} n={f.n} p={f.p} expected={f.expected} actual={f.actual}")
    return report.passed


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true",
                        help="oracle sweeps to n=64 (p=2) and n=40 (p=3, 5)")
    parser.add_argument("--skip-oracle", action="store_true",
                        help="recursion-only suites (no linear algebra)")
    args = parser.parse_args()

    all_passed = True

    if not args.skip_oracle:
        n2 = 64 if args.full else 48
        nodd = 40 if args.full else 24
        for p, n_max in ((2, n2), (3, nodd), (5, nodd)):
            spec = SweepSpec(m_max=n_max, n_max=n_max, primes=(p,), suites=("oracle",))
            all_passed &= show(check_oracle_agreement(spec), f"p={p}, n<={n_max}")

    all_passed &= show(check_theorem1(256, 256), "n<=256")

    for p in (2, 3):
        t = 1
        while p**t <= 32:
            for m in range(1, p**t + 1):
                rep = check_periodicity(m, t, p, n_max=4 * p**t)
                if not rep.passed:
                    all_passed &= show(rep, f"m={m} t={t} p={p}")
                rep = check_reflection(m, t, p)
                if not rep.passed:
                    all_passed &= show(rep, f"m={m} t={t} p={p}")
            t += 1
    print("suite=periodicity+reflection grids p in {2,3}, p^t <= 32: "
          + ("PASS" if all_passed else "see failures above"))

    spec = SweepSpec(m_max=64, n_max=64, primes=(2, 3, 5), suites=("corollary1",))
    all_passed &= show(check_corollary1(spec), "n<=64")

    all_passed &= show(check_invariants(n_max=1024, samples=10_000, seed=0))

    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
