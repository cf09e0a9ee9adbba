"""Recompute the P(-1) tables for free/cylinder/torus king boards and free
wazir boards, and diff each cell against the reference values.

    python scripts/reproduce_tables.py [--king-max 10] [--wazir-max 8]
"""

import argparse
import time

from kingdom.board import Family
from kingdom.cli import render_table
from kingdom.known_values import KING_CYLINDER, KING_TORUS, WAZIR_FREE, king_free
from kingdom.transfer import table_scan


def show(title, family, cyclic, ms, ns, expected):
    t0 = time.perf_counter()
    rows = table_scan(family, cyclic, ms, ns, -1)
    elapsed = time.perf_counter() - t0
    marked = []
    misses = 0
    for n, row in zip(ns, rows):
        line = []
        for m, v in zip(ms, row):
            want = expected(m, n)
            if want is not None and v != want:
                misses += 1
                line.append(f"{v}[{want}]")
            else:
                line.append(str(v))
        marked.append(line)
    print(f"== {title}  ({elapsed:.2f}s, {misses} cells differ; differing cells show [reference])")
    print(render_table(ms, ns, marked))
    print()
    return misses


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--king-max", type=int, default=10)
    ap.add_argument("--wazir-max", type=int, default=8)
    args = ap.parse_args()
    k = range(1, args.king_max + 1)
    w = range(1, args.wazir_max + 1)
    c = range(3, 7)
    total = 0
    total += show("king, free", Family.KING, (), k, k, king_free)
    total += show("king, cylinder (x cyclic)", Family.KING, (0,), c, c, lambda m, n: KING_CYLINDER[m, n])
    total += show("king, torus", Family.KING, (0, 1), c, c, lambda m, n: KING_TORUS[m, n])
    total += show("wazir, free", Family.WAZIR, (), w, w, lambda m, n: WAZIR_FREE.get((m, n)))
    print(f"{total} differing cells in total")


if __name__ == "__main__":
    main()
