"""Tiny, deliberately naive reference counts used as test oracles.

Adjacency is written from coordinates directly, independent of ``kingdom.board``.
"""

import itertools
import math


def adjacent(family, dims, cyclic, u, v):
    if u == v:
        return False
    steps = []
    for i, (a, b, n) in enumerate(zip(u, v, dims)):
        d = abs(a - b)
        if i in cyclic:
            d = min(d, n - d)
        steps.append(d)
    if family == "king":
        return max(steps) == 1
    return sorted(steps) == [0] * (len(steps) - 1) + [1]


def polynomial(family, dims, cyclic=()):
    cells = list(itertools.product(*[range(1, n + 1) for n in dims]))
    closed = {
        v: {u for u in cells if u == v or adjacent(family, dims, cyclic, u, v)} for v in cells
    }
    coeffs = [0] * (len(cells) + 1)
    everything = set(cells)
    for k in range(len(cells) + 1):
        for chosen in itertools.combinations(cells, k):
            covered = set()
            for v in chosen:
                covered |= closed[v]
            if covered == everything:
                coeffs[k] += 1
    return coeffs


def signed(coeffs):
    return sum(c * (-1) ** k for k, c in enumerate(coeffs))


def theorem_sign(dims):
    return (-1) ** math.prod((n + 1) // 2 for n in dims)
