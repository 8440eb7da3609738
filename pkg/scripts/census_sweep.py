#!/usr/bin/env python3
"""Sweep the brute-force censuses over a range of orders and print a table.

Usage:
    python scripts/census_sweep.py --pattern P4 --quantity prsat --max-n 8

Handy for eyeballing how the exact values track the closed forms, e.g.

    python scripts/census_sweep.py --pattern P4 --quantity prsat --max-n 8
    python scripts/census_sweep.py --pattern T5star --quantity sat --max-n 9
"""

import argparse
import sys
import time

from rslab.oracle import (
    PRSAT_ORDER_CUTOFF,
    SAT_SSAT_ORDER_CUTOFF,
    prsat_number,
    sat_number,
    ssat_number,
)
from rslab.patterns import parse_pattern, realize_pattern


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pattern", required=True)
    parser.add_argument("--quantity", choices=["sat", "ssat", "prsat"], default="prsat")
    parser.add_argument("--min-n", type=int, default=None)
    parser.add_argument("--max-n", type=int, default=None)
    parser.add_argument("--budget", type=int, default=10_000_000)
    parser.add_argument("--cache-dir", default=None)
    args = parser.parse_args()

    spec = parse_pattern(args.pattern)
    lo = args.min_n if args.min_n else realize_pattern(spec).n
    cutoff = PRSAT_ORDER_CUTOFF if args.quantity == "prsat" else SAT_SSAT_ORDER_CUTOFF
    hi = min(args.max_n if args.max_n else cutoff, cutoff)

    print(f"{'n':>3} {'value':>6} {'witnesses':>10} {'examined':>9} {'exact':>6} {'secs':>7}")
    for n in range(lo, hi + 1):
        t0 = time.time()
        if args.quantity == "sat":
            rec = sat_number(n, spec, cache_dir=args.cache_dir)
        elif args.quantity == "ssat":
            rec = ssat_number(n, spec, cache_dir=args.cache_dir)
        else:
            rec = prsat_number(n, spec, budget=args.budget, cache_dir=args.cache_dir)
        print(f"{n:>3} {str(rec.value):>6} {len(rec.witnesses):>10} "
              f"{rec.total_graphs_examined:>9} {str(rec.exact):>6} {time.time() - t0:>7.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
