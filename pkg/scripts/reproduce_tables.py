"""Rebuild every witness table and compare invariants row by row.

    python3 scripts/reproduce_tables.py                 # tables 1-3, 5-8
    python3 scripts/reproduce_tables.py --tables 4 --budget 34359738368

Writes one tab-separated line per row to stdout and a summary to stderr.
"""

import argparse
import os
import sys
import time

from selfdual.search import reproduce_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tables", type=int, nargs="+", default=[1, 2, 3, 5, 6, 7, 8])
    ap.add_argument("--budget", type=int, default=2**33)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--method", choices=("auto", "full"), default="auto")
    args = ap.parse_args()
    failed = []
    for tid in args.tables:
        t0 = time.perf_counter()
        reps = reproduce_table(tid, budget=args.budget, jobs=args.jobs, method=args.method)
        for r in reps:
            print(r.line(), flush=True)
        bad = [r.row for r in reps if not r.passed]
        failed += [(tid, r) for r in bad]
        print(f"table {tid}: {len(reps) - len(bad)}/{len(reps)} rows pass "
              f"({time.perf_counter() - t0:.1f}s)", file=sys.stderr)
    if failed:
        print("failing rows: " + ", ".join(f"{t}.{r}" for t, r in failed), file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
