"""Point-mode sweep of free king boards beyond the 10x10 acceptance block,
checking every cell against (-1)^(ceil(m/2) * ceil(n/2)).

    python scripts/stretch_king_sweep.py --max 14
"""

import argparse
import time

from kingdom.board import BoardSpec
from kingdom.known_values import king_free
from kingdom.transfer import run_transfer


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=14)
    args = ap.parse_args()
    failures = 0
    for n in range(1, args.max + 1):
        t0 = time.perf_counter()
        states = 0
        for m in range(1, args.max + 1):
            res = run_transfer(BoardSpec.king(m, n), -1)
            states = max(states, res.max_states)
            if res.value != king_free(m, n):
                failures += 1
                print(f"  MISMATCH m={m} n={n}: {res.value}")
        print(f"n={n:2d}: row done in {time.perf_counter() - t0:6.2f}s, peak states {states}")
    print(f"{failures} mismatches")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
