"""Column-frontier dynamic program for two-dimensional king and wazir boards.

The board is swept one column at a time, so the frontier is a column of
height ``h``.  The sweep axis is the one with the smaller work estimate: this
is the longer axis unless sweeping it would need the cyclic seed (below) and
the other axis would not.

Placing the kings ``c`` of a new column has two effects, both precomputed as
bitmasks:

* ``cross(c)``: cells it dominates in each adjacent column (king: ``c``
  smeared by one row; wazir: ``c`` itself);
* ``own(c)``: cells it dominates in its own column (``c`` smeared by one row).

After column ``j`` the state is ``(X, U)``: ``X = cross(c_j)`` is what column
``j`` will do for column ``j + 1``, and ``U`` is the set of cells of column
``j`` that are still undominated.  Column ``j`` is finished once ``c_{j+1}``
is chosen, so a transition is legal only if ``cross(c_{j+1})`` covers ``U``.
Moves with equal ``(cross, own)`` are merged and carry the weight
``sum(z**|c|)`` over their members.

A cyclic sweep axis adds the first column as a seed: the state also holds the
seed's move id and ``R``, the cells of the first column that only the last
column can still dominate.  The cycle is closed by treating the seed as the
successor of the last column.

Point evaluation uses Python integers throughout.  The full polynomial is
obtained from one point evaluation at ``z = 2**B`` with ``B`` larger than the
bit length of any coefficient, then read back off in base ``2**B``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from kingdom.board import BoardSpec, Boundary, Family
from kingdom.errors import GuardError, UnsupportedError
from kingdom.poly import DominationPolynomial

MAX_HEIGHT = 16
MAX_LENGTH = 64


@dataclass(frozen=True)
class Sweep:
    """Board geometry in sweep coordinates."""

    family: Family
    length: int
    height: int
    cyclic_sweep: bool
    cyclic_cross: bool


@dataclass
class TransferResult:
    value: int
    max_states: int
    sweep: Sweep


def plan_sweep(spec: BoardSpec) -> Sweep:
    if spec.d == 1:
        dims, boundary = (spec.dims[0], 1), (spec.boundary[0], Boundary.FREE)
    elif spec.d == 2:
        dims, boundary = spec.dims, spec.boundary
    else:
        raise UnsupportedError(f"transfer handles d <= 2 only; {spec} has d = {spec.d}")
    m, n = dims
    options = [
        (m, n, boundary[0], boundary[1]),  # sweep along x
        (n, m, boundary[1], boundary[0]),  # sweep along y
    ]
    fitting = [o for o in options if o[0] <= MAX_LENGTH and o[1] <= MAX_HEIGHT]
    if not fitting:
        if min(m, n) > MAX_HEIGHT:
            raise GuardError("frontier-height", f"{spec} needs frontier {min(m, n)} > {MAX_HEIGHT}")
        raise GuardError("sweep-length", f"{spec} needs sweep length {max(m, n)} > {MAX_LENGTH}")
    # min() keeps the first of equal-cost options, so ties sweep along x
    length, height, sweep_b, cross_b = min(fitting, key=_sweep_cost)
    return Sweep(
        spec.family,
        length,
        height,
        sweep_b is Boundary.CYCLIC,
        cross_b is Boundary.CYCLIC,
    )


def _sweep_cost(option) -> int:
    """Rough work estimate: frontier states, times seeds on a cyclic sweep, times length."""
    length, height, sweep_b, _ = option
    seeds = 2**height if sweep_b is Boundary.CYCLIC else 1
    return 4**height * seeds * length


def _smear(c: int, h: int, wrap: bool) -> int:
    full = (1 << h) - 1
    out = c | (c << 1) | (c >> 1)
    if wrap:
        out |= (c >> (h - 1)) | ((c & 1) << (h - 1))
    return out & full


@lru_cache(maxsize=None)
def column_moves(family: Family, h: int, wrap: bool) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """Distinct ``(cross, own, size_histogram)`` over all column occupancies."""
    groups: dict[tuple[int, int], list[int]] = {}
    for c in range(1 << h):
        own = _smear(c, h, wrap)
        cross = own if family is Family.KING else c
        hist = groups.setdefault((cross, own), [0] * (h + 1))
        hist[c.bit_count()] += 1
    return tuple((cross, own, tuple(hist)) for (cross, own), hist in sorted(groups.items()))


def _weights(moves, z: int) -> list[tuple[int, int, int]]:
    out = []
    for cross, own, hist in moves:
        g, p = 0, 1
        for count in hist:
            g += count * p
            p *= z
        if g:
            out.append((cross, own, g))
    return out


def run_transfer(spec: BoardSpec, z: int, prune: bool = True) -> TransferResult:
    """Evaluate the domination polynomial of ``spec`` at the integer ``z``."""
    if spec.nverts == 0:
        return TransferResult(1, 1, Sweep(spec.family, 0, 0, False, False))
    sw = plan_sweep(spec)
    h = sw.height
    full = (1 << h) - 1
    moves = _weights(column_moves(sw.family, h, sw.cyclic_cross), z)
    if not moves:
        return TransferResult(0, 0, sw)

    # covering[U]: moves whose cross mask contains U (built lazily per U)
    covering: dict[int, list[tuple[int, int, int]]] = {}

    def covering_moves(u: int):
        got = covering.get(u)
        if got is None:
            got = covering[u] = [mv for mv in moves if mv[0] & u == u]
        return got

    # key layout: dead bit | seed id | R | X | U, each mask h bits wide
    hb = h
    x_shift, r_shift, s_shift = hb, 2 * hb, 3 * hb
    seed_bits = max(1, len(moves).bit_length())
    dead_bit = 1 << (s_shift + seed_bits)
    mask = full

    states: dict[int, int] = {}
    if sw.cyclic_sweep:
        for sid, (cross, own, g) in enumerate(moves):
            key = (sid << s_shift) | (cross << x_shift) | (full & ~own)
            states[key] = states.get(key, 0) + g
        start = 1
    else:
        states[0] = 1
        start = 0
    max_states = len(states)

    for col in range(start, sw.length):
        seeding = sw.cyclic_sweep and col == 1
        nxt: dict[int, int] = defaultdict(int)
        for key, w in states.items():
            u = key & mask
            x = (key >> x_shift) & mask
            rest = key >> r_shift << r_shift  # seed id, R and dead bit carried over
            if seeding:
                for cross, own, g in moves:
                    r = u & ~cross
                    nkey = (key >> s_shift << s_shift) | (r << r_shift) | (cross << x_shift) | (
                        full & ~(x | own)
                    )
                    nxt[nkey] += w * g
                continue
            if prune and not key & dead_bit:
                for cross, own, g in covering_moves(u):
                    nxt[rest | (cross << x_shift) | (full & ~(x | own))] += w * g
            else:
                for cross, own, g in moves:
                    nkey = rest | (cross << x_shift) | (full & ~(x | own))
                    if cross & u != u:
                        nkey |= dead_bit
                    nxt[nkey] += w * g
        states = nxt
        max_states = max(max_states, len(states))

    total = 0
    for key, w in states.items():
        if key & dead_bit:
            continue
        u = key & mask
        if sw.cyclic_sweep:
            x = (key >> x_shift) & mask
            r = (key >> r_shift) & mask
            seed_cross = moves[(key >> s_shift) & ((1 << seed_bits) - 1)][0]
            if u & ~seed_cross or r & ~x:
                continue
        elif u:
            continue
        total += w
    return TransferResult(total, max_states, sw)


def transfer_eval(spec: BoardSpec, z: int, prune: bool = True) -> int:
    return run_transfer(spec, z, prune).value


def transfer_polynomial(spec: BoardSpec, prune: bool = True) -> DominationPolynomial:
    nv = spec.nverts
    if nv == 0:
        return DominationPolynomial((1,), 0)
    # every coefficient is below 2**nv, so base 2**(nv+1) digits never carry
    bits = nv + 1
    packed = transfer_eval(spec, 1 << bits, prune)
    digit = (1 << bits) - 1
    coeffs = []
    for _ in range(nv + 1):
        coeffs.append(packed & digit)
        packed >>= bits
    if packed:
        raise ArithmeticError("packed evaluation overflowed its digit budget")
    return DominationPolynomial(tuple(coeffs), nv)


def table_scan(
    family: Family,
    cyclic: tuple[int, ...],
    m_range: range,
    n_range: range,
    z: int,
    prune: bool = True,
) -> list[list[int]]:
    """``out[i][j]`` is the value for ``m = m_range[j]``, ``n = n_range[i]``."""
    rows = []
    for n in n_range:
        row = []
        for m in m_range:
            spec = BoardSpec(family, (m, n), tuple(
                Boundary.CYCLIC if a in cyclic else Boundary.FREE for a in range(2)
            ))
            row.append(transfer_eval(spec, z, prune))
        rows.append(row)
    return rows
