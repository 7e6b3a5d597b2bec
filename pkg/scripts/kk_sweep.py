#!/usr/bin/env python3
"""Sweep every candidate f-vector in an ambient box through all four
realizability deciders and report agreement.

The box for ambient n is every tuple (1, f_0, ..., f_d) with d < n and
1 <= f_t <= C(n, t+1).  The deciders are the witness construction, the
arithmetic bound test, validity of the complement vector, and the
complement-form inequality test.  They are provably equivalent; this
script exists to exercise that equivalence end to end and to time it.

    python scripts/kk_sweep.py --max-n 6
    python scripts/kk_sweep.py --max-n 6 --csv sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from itertools import product
from math import comb

from fideals import (
    complement_fvector,
    exists_complex,
    kk_valid,
    kk_valid_dual,
)


def box(n: int):
    for d in range(n):
        ranges = [range(1, comb(n, t + 1) + 1) for t in range(d + 1)]
        for tail in product(*ranges):
            yield (1, *tail)


def sweep(n: int, use_oracle: bool):
    total = realizable = disagreements = 0
    for f in box(n):
        votes = [kk_valid(f), kk_valid(complement_fvector(f, n)), kk_valid_dual(f, n)]
        if use_oracle:
            votes.append(exists_complex(f))
        total += 1
        if votes[0]:
            realizable += 1
        if len(set(votes)) != 1:
            disagreements += 1
            print(f"  DISAGREEMENT at n={n}, f={f}: {votes}", file=sys.stderr)
    return total, realizable, disagreements


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--csv", default=None, help="write per-n totals to this file")
    args = ap.parse_args(argv)

    rows = []
    print(f"{'n':>2} {'vectors':>9} {'realizable':>11} {'disagree':>9} {'elapsed':>8}")
    for n in range(1, args.max_n + 1):
        oracle = n <= 7  # witness construction is table-driven and capped
        start = time.perf_counter()
        total, realizable, disagreements = sweep(n, oracle)
        elapsed = time.perf_counter() - start
        rows.append((n, total, realizable, disagreements, round(elapsed, 3)))
        print(f"{n:>2} {total:>9} {realizable:>11} {disagreements:>9} {elapsed:>7.2f}s")

    if args.csv:
        with open(args.csv, "w", newline="") as fp:
            writer = csv.writer(fp)
            writer.writerow(["n", "vectors", "realizable", "disagreements", "elapsed_s"])
            writer.writerows(rows)
        print(f"wrote {args.csv}")

    return 1 if any(r[3] for r in rows) else 0


if __name__ == "__main__":
    sys.exit(main())
