#!/usr/bin/env python3
"""Run every reproduction suite and print the combined pass/fail table.

Usage:
    python scripts/reproduce_all.py [--budget N] [--cache-dir DIR] [--allow-unknown]

Unknown rows (searches that hit their node budget) fail the run unless
--allow-unknown is given; the caterpillar spot checks are the usual source.
"""

import argparse
import sys
import time

from rslab.reproduce import ReproConfig, all_pass, format_rows, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=10_000_000)
    parser.add_argument("--spot-budget", type=int, default=1_000_000)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--allow-unknown", action="store_true")
    args = parser.parse_args()

    ok = True
    for suite in ("census", "formulas", "constructions"):
        config = ReproConfig(
            budget=args.budget, spot_budget=args.spot_budget, cache_dir=args.cache_dir
        )
        t0 = time.time()
        rows = run_suite(suite, config)
        print(f"== {suite} ({time.time() - t0:.1f}s) ==")
        print(format_rows(rows))
        print()
        ok = ok and all_pass(rows, args.allow_unknown)
    for ell in (4, 5):
        config = ReproConfig(budget=args.budget, ell=ell)
        rows = run_suite("lemma4", config)
        print(f"== lemma4 ell={ell} ==")
        print(format_rows(rows))
        print()
        ok = ok and all_pass(rows, args.allow_unknown)
    print("ALL PASS" if ok else "FAILURES (or Unknown without --allow-unknown)")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
