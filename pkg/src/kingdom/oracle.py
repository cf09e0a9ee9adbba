"""Brute-force enumeration of dominating sets over all ``2**|V|`` subsets.

Subsets are split into a low part (the first ``LOW_BITS`` vertices) and a
high part.  The coverage mask of every low subset is tabulated once with numpy;
each high subset then tests the whole low table in one vectorized pass.  High
subsets are independent, so they are spread over a thread pool and the
per-size counts are summed at the end.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

from kingdom.board import BoardSpec, VertexSet, closed_neighborhood_masks, max_oracle_bits
from kingdom.errors import GuardError
from kingdom.poly import DominationPolynomial

LOW_BITS = 20
MAX_WORD_BITS = 64


def _masks(spec: BoardSpec, force: bool) -> list[int]:
    limit = MAX_WORD_BITS if force else max_oracle_bits()
    if spec.nverts > limit:
        hint = "" if force else " (pass force=True or set KINGDOM_MAX_ORACLE_BITS)"
        raise GuardError(
            "oracle-bits", f"board {spec} has {spec.nverts} vertices, limit is {limit}{hint}"
        )
    return closed_neighborhood_masks(spec, limit=limit)


class _Tables:
    """Coverage, popcount and sign of every subset of the low vertices."""

    def __init__(self, masks: list[int]):
        nv = len(masks)
        self.low = min(nv, LOW_BITS)
        self.dtype = np.uint32 if nv <= 32 else np.uint64
        cover = np.zeros(1, dtype=self.dtype)
        count = np.zeros(1, dtype=np.int64)
        for m in masks[: self.low]:
            cover = np.concatenate([cover, cover | self.dtype(m)])
            count = np.concatenate([count, count + 1])
        self.cover = cover
        self.count = count
        self.sign = 1 - 2 * (count & 1)
        self.high_masks = masks[self.low :]
        self.full = self.dtype((1 << nv) - 1)
        self.nverts = nv

    def high_cover(self, h: int) -> int:
        c, i = 0, 0
        while h:
            if h & 1:
                c |= self.high_masks[i]
            h >>= 1
            i += 1
        return c

    def hit(self, h: int) -> np.ndarray:
        """Boolean array over low subsets: does ``low | h << low`` dominate?"""
        return (self.cover | self.dtype(self.high_cover(h))) == self.full


def _threads(threads: int | None) -> int:
    return max(1, threads or os.cpu_count() or 1)


def _split(nhigh: int, workers: int) -> list[range]:
    step = -(-nhigh // workers)
    return [range(lo, min(lo + step, nhigh)) for lo in range(0, nhigh, step)]


def enumerate_polynomial(
    spec: BoardSpec, force: bool = False, threads: int | None = None
) -> DominationPolynomial:
    if spec.nverts == 0:
        return DominationPolynomial((1,), 0)
    tables = _Tables(_masks(spec, force))
    nv = tables.nverts

    def work(hs: range) -> np.ndarray:
        counts = np.zeros(nv + 1, dtype=np.int64)
        for h in hs:
            sizes = tables.count[tables.hit(h)]
            if sizes.size:
                shift = h.bit_count()
                counts[shift : shift + tables.low + 1] += np.bincount(
                    sizes, minlength=tables.low + 1
                )
        return counts

    total = _run(work, 1 << (nv - tables.low), threads)
    return DominationPolynomial(tuple(int(c) for c in total), nv)


def eval_signed_count(spec: BoardSpec, force: bool = False, threads: int | None = None) -> int:
    """Sum of ``(-1)**|S|`` over dominating ``S``, i.e. the polynomial at ``-1``."""
    if spec.nverts == 0:
        return 1
    tables = _Tables(_masks(spec, force))

    def work(hs: range) -> int:
        acc = 0
        for h in hs:
            s = int(tables.sign[tables.hit(h)].sum())
            acc += -s if h.bit_count() & 1 else s
        return acc

    return int(_run(work, 1 << (tables.nverts - tables.low), threads))


def _run(work, nhigh: int, threads: int | None):
    workers = min(_threads(threads), nhigh)
    if workers == 1:
        return work(range(nhigh))
    with ThreadPoolExecutor(workers) as pool:
        parts = list(pool.map(work, _split(nhigh, workers)))
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def enumerate_dominating_sets(spec: BoardSpec, force: bool = False) -> Iterator[VertexSet]:
    """Every dominating set exactly once, in increasing bitset order."""
    if spec.nverts == 0:
        yield 0
        return
    tables = _Tables(_masks(spec, force))
    for h in range(1 << (tables.nverts - tables.low)):
        base = h << tables.low
        for low in np.flatnonzero(tables.hit(h)).tolist():
            yield base | low
