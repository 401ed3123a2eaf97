#!/usr/bin/env python3
"""Census of standard Jordan partitions at p = 2.

Sweeps every 1 <= m <= n <= N, lists which pairs are standard (their block
sizes step down by 2 from m+n-1), and confirms the closed-form pattern:
all of m = 1; m = 2 exactly at odd n; m = 3 exactly at n = 6, 10, 14, ...;
nothing at m >= 4.
"""

import argparse
from collections import defaultdict

from jordanblocks.partitions import (
    composition,
    is_standard,
    jordan_partition,
    standard_predicate_p2,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=512)
    parser.add_argument("--show", type=int, default=12,
                        help="how many n values to list per m")
    args = parser.parse_args()

    found = defaultdict(list)
    mismatches = []
    for n in range(1, args.n_max + 1):
        for m in range(1, n + 1):
            flag = is_standard(jordan_partition(m, n, 2), m, n)
            if flag != standard_predicate_p2(m, n):
                mismatches.append((m, n))
            if flag:
                found[m].append(n)

    total = sum(len(v) for v in found.values())
    print(f"standard pairs with m <= n <= {args.n_max}: {total}")
    for m in sorted(found):
        ns = found[m]
        head = ", ".join(str(n) for n in ns[: args.show])
        more = f", ... ({len(ns)} total)" if len(ns) > args.show else ""
        print(f"  m={m}: n = {head}{more}")
    largest_m = max(found) if found else 0
    print(f"largest m with any standard pair: {largest_m}")

    # spot-check the all-ones-composition characterization on the census
    for m in sorted(found):
        for n in found[m][:5]:
            assert composition(m, n, 2).is_all_ones(), (m, n)

    if mismatches:
        print(f"closed-form predicate DISAGREES at: {mismatches[:20]}")
        raise SystemExit(1)
    print("closed-form predicate matched on every pair")


if __name__ == "__main__":
    main()
