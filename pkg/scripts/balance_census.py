#!/usr/bin/env python3
"""Census of the parity classifier: how often the two divisor classes tie.

For each Strong pair (p, r) with p <= p_max, count n <= n_max whose verdict is
balanced, split into "no representation at all" and "even == odd > 0", plus
the positive and negative counts.

    python scripts/balance_census.py [p_max] [n_max]
"""

import sys
from collections import Counter

from fineforms.params import Level, valid_pairs
from fineforms.verifier import Verdict, classify


def main():
    p_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 1000
    print(f"{'p':>3} {'r':>3} {'empty':>7} {'tied':>7} {'pos':>7} {'neg':>7}")
    for params in valid_pairs(p_max, Level.STRONG):
        tally = Counter()
        for n in range(n_max + 1):
            c = classify(params, n)
            if c.verdict is Verdict.BALANCED:
                tally["empty" if c.parity.total == 0 else "tied"] += 1
            else:
                tally[c.verdict.value] += 1
        print(
            f"{params.p:>3} {params.r:>3} {tally['empty']:>7} {tally['tied']:>7}"
            f" {tally['positive']:>7} {tally['negative']:>7}"
        )


if __name__ == "__main__":
    main()
