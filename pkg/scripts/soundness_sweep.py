#!/usr/bin/env python3
"""Sweep random strong digraphs and compare every bound against the oracle.

Prints one row per method with how often it was applicable, its average gap
to the exact dichromatic number, and how often it was tight. Any bound below
the oracle would be a soundness bug and aborts the run.
"""

import argparse
from collections import defaultdict

from dichroma import EngineOptions, Lcg, best_bound, random_strong


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=300)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--max-m", type=int, default=30)
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()

    rng = Lcg(args.seed)
    applicable = defaultdict(int)
    gap_sum = defaultdict(int)
    tight = defaultdict(int)
    for _ in range(args.instances):
        n = 2 + rng.next_below(args.max_n - 1)
        top = min(args.max_m, n * (n - 1))
        m = n + rng.next_below(top - n + 1)
        d = random_strong(n, m, rng.next_below(1 << 32))
        report = best_bound(d, EngineOptions())
        assert report.oracle is not None
        for entry in report.bounds:
            if entry.value is None:
                continue
            if entry.value < report.oracle:
                raise SystemExit(
                    f"soundness violation: {entry.name} = {entry.value} "
                    f"below oracle {report.oracle} on {d.arcs}"
                )
            applicable[entry.name] += 1
            gap_sum[entry.name] += entry.value - report.oracle
            if entry.value == report.oracle:
                tight[entry.name] += 1

    print(f"{args.instances} instances, n <= {args.max_n}, m <= {args.max_m}")
    print(f"{'method':<16} {'applicable':>10} {'avg gap':>8} {'tight':>6}")
    for name in sorted(applicable):
        count = applicable[name]
        print(
            f"{name:<16} {count:>10} {gap_sum[name] / count:>8.2f} "
            f"{tight[name]:>6}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
