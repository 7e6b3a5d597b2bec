#!/usr/bin/env python3
"""Sweep the f-ideal censuses and print (or save) the counts.

Covers the equigenerated counts for every degree in range, the mixed-degree
totals where exhaustive enumeration is affordable, and the dual pairing
check for each (n, d) against (n, n-d).

Examples:
    python scripts/run_census.py --max-n 6
    python scripts/run_census.py --max-n 7 --budget 200000 --workers 4 --out-dir census/
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from fideals import enumerate_all_fideals, enumerate_equigenerated, verify_duality_pairing
from fideals.census import EXHAUSTIVE_LIMIT
from fideals.cli import write_census_file


@dataclass(frozen=True)
class SweepConfig:
    max_n: int
    budget: int | None
    witness_cap: int
    workers: int
    seed: int
    out_dir: Path | None
    pairing: bool


def parse_args(argv) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6, help="largest ambient size (2..8)")
    ap.add_argument("--budget", type=int, default=None, help="candidate cap per census")
    ap.add_argument("--witness-cap", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0, help="seed for sampled mixed-degree censuses")
    ap.add_argument("--out-dir", type=Path, default=None, help="write one census file per (n, d)")
    ap.add_argument("--no-pairing", dest="pairing", action="store_false")
    a = ap.parse_args(argv)
    return SweepConfig(a.max_n, a.budget, a.witness_cap, a.workers, a.seed, a.out_dir, a.pairing)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    if cfg.out_dir:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)

    print(f"{'n':>2} {'d':>5} {'count':>8} {'examined':>10} {'full':>5} {'elapsed':>8}")
    for n in range(2, cfg.max_n + 1):
        for d in range(1, n):
            rec = enumerate_equigenerated(
                n, d, cfg.budget, witness_cap=cfg.witness_cap, workers=cfg.workers
            )
            full = "yes" if not rec.budget_exhausted else "no"
            print(f"{n:>2} {d:>5} {rec.count:>8} {rec.examined:>10} {full:>5} {rec.elapsed:>7.2f}s")
            if cfg.out_dir:
                with open(cfg.out_dir / f"census_n{n}_d{d}.txt", "w") as fp:
                    write_census_file(fp, rec)

        # mixed-degree total: exhaustive only while the antichain count is small
        if n <= EXHAUSTIVE_LIMIT or cfg.budget is not None:
            rec = enumerate_all_fideals(n, cfg.budget, witness_cap=cfg.witness_cap, seed=cfg.seed)
            full = "yes" if not rec.budget_exhausted else "no"
            print(f"{n:>2} {'all':>5} {rec.count:>8} {rec.examined:>10} {full:>5} {rec.elapsed:>7.2f}s")
            if cfg.out_dir:
                with open(cfg.out_dir / f"census_n{n}_all.txt", "w") as fp:
                    write_census_file(fp, rec)
        else:
            print(f"{n:>2} {'all':>5} {'-':>8} {'-':>10}    (needs --budget above n={EXHAUSTIVE_LIMIT})")

    if cfg.pairing:
        print("\ndual pairing (count at d vs n-d, bijection on witnesses):")
        for n in range(2, cfg.max_n + 1):
            for d in range(1, n // 2 + 1):
                rep = verify_duality_pairing(
                    n, d, cfg.budget, witness_cap=cfg.witness_cap, workers=cfg.workers
                )
                status = "ok" if rep.bijection_checked else ("open" if not rep.conclusive else "MISMATCH")
                print(
                    f"  n={n} d={d}: {rep.count} vs {rep.dual_count} at d={n - d}"
                    f"  equal={str(rep.equal).lower()}  {status}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
