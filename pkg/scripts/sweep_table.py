#!/usr/bin/env python3
"""Run every identity over all valid (p, r) and print one row per cell.

    python scripts/sweep_table.py [p_max] [n_max]

Defaults: p_max=12, n_max=500. Exits 1 if any cell fails.
"""

import sys
import time

from fineforms.verifier import sweep


def main():
    p_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 500
    start = time.perf_counter()
    reports = sweep(p_max, n_max)
    print(f"{'cell':<22} {'status':<6} {'checked':>8} {'failures':>8}")
    for key in sorted(reports):
        rep = reports[key]
        print(f"{key:<22} {rep.status:<6} {rep.checked_count:>8} {rep.failures:>8}")
    failed = [k for k, r in reports.items() if not r.passed]
    print(f"\n{len(reports)} cells, {len(failed)} failed, {time.perf_counter() - start:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
