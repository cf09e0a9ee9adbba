"""Chessboard graphs: families, boundary conditions, vertex indexing, neighborhoods.

Vertices are 1-based coordinate tuples ``(x1, ..., xd)``.  The canonical index
of a vertex is ``sum((x_i - 1) * stride_i)`` with axis 1 varying fastest, and a
vertex set is a plain ``int`` whose bit ``index(v)`` is set iff ``v`` is a member.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
import re
from dataclasses import dataclass
from functools import cached_property

from kingdom.errors import BoardSpecError, GuardError

Vertex = tuple[int, ...]
VertexSet = int

DEFAULT_MAX_ORACLE_BITS = 28
AXIS_NAMES = "xyzw"


def max_oracle_bits() -> int:
    """Vertex-count guard for exhaustive subset enumeration."""
    raw = os.environ.get("KINGDOM_MAX_ORACLE_BITS")
    if raw is None:
        return DEFAULT_MAX_ORACLE_BITS
    try:
        return int(raw)
    except ValueError:
        raise BoardSpecError(f"KINGDOM_MAX_ORACLE_BITS must be an integer, got {raw!r}") from None


class Family(enum.Enum):
    KING = "king"
    WAZIR = "wazir"


class Boundary(enum.Enum):
    FREE = "free"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class BoardSpec:
    family: Family
    dims: tuple[int, ...]
    boundary: tuple[Boundary, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))
        object.__setattr__(self, "boundary", tuple(Boundary(b) for b in self.boundary))
        object.__setattr__(self, "family", Family(self.family))
        if not self.dims:
            raise BoardSpecError("board needs at least one axis")
        if len(self.dims) != len(self.boundary):
            raise BoardSpecError(
                f"dims and boundary differ in length ({len(self.dims)} vs {len(self.boundary)})"
            )
        if any(n < 0 for n in self.dims):
            raise BoardSpecError(f"negative side length in {self.dims}")
        if self.family is Family.WAZIR and self.d != 2:
            raise BoardSpecError("wazir boards are only defined in two dimensions")
        for axis, (n, b) in enumerate(zip(self.dims, self.boundary)):
            if b is Boundary.CYCLIC and n <= 2:
                raise BoardSpecError(
                    f"cyclic axis {AXIS_NAMES[axis] if axis < 4 else axis + 1} needs length >= 3, got {n}"
                )

    @classmethod
    def king(cls, *dims: int, cyclic: tuple[int, ...] = ()) -> BoardSpec:
        """Convenience constructor; ``cyclic`` lists 0-based axes that wrap."""
        return cls(Family.KING, dims, _boundaries(len(dims), cyclic))

    @classmethod
    def wazir(cls, m: int, n: int, cyclic: tuple[int, ...] = ()) -> BoardSpec:
        return cls(Family.WAZIR, (m, n), _boundaries(2, cyclic))

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def nverts(self) -> int:
        return math.prod(self.dims)

    @property
    def is_free(self) -> bool:
        return all(b is Boundary.FREE for b in self.boundary)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for n in self.dims:
            out.append(s)
            s *= n
        return tuple(out)

    @property
    def full(self) -> VertexSet:
        return (1 << self.nverts) - 1

    def index(self, v: Vertex) -> int:
        self._check_vertex(v)
        return sum((x - 1) * s for x, s in zip(v, self.strides))

    def vertex(self, index: int) -> Vertex:
        if not 0 <= index < self.nverts:
            raise IndexError(f"vertex index {index} out of range for {self}")
        coords = []
        for n in self.dims:
            index, r = divmod(index, n)
            coords.append(r + 1)
        return tuple(coords)

    def vertices(self):
        """All vertices in canonical order."""
        return (self.vertex(i) for i in range(self.nverts))

    def to_set(self, vertices) -> VertexSet:
        s = 0
        for v in vertices:
            s |= 1 << self.index(v)
        return s

    def members(self, s: VertexSet) -> list[Vertex]:
        out = []
        while s:
            low = s & -s
            out.append(self.vertex(low.bit_length() - 1))
            s ^= low
        return out

    def _check_vertex(self, v: Vertex) -> None:
        if len(v) != self.d or any(not 1 <= x <= n for x, n in zip(v, self.dims)):
            raise IndexError(f"vertex {v} is outside board {self}")

    def __str__(self) -> str:
        return format_board(self)


def _boundaries(d: int, cyclic) -> tuple[Boundary, ...]:
    return tuple(Boundary.CYCLIC if i in cyclic else Boundary.FREE for i in range(d))


_SPEC_RE = re.compile(r"^(?P<family>[a-z]+):(?P<dims>\d+(?:x\d+)*)(?::(?P<boundary>[a-z+-]+))?$")


def parse_board(text: str) -> BoardSpec:
    """Parse ``<family>:<n1>x<n2>[x...][:<boundary>]``.

    Boundary is ``free`` (default), ``torus`` (every axis cyclic) or one or
    more ``cyl-<axis>`` tokens joined by ``+``, e.g. ``cyl-x`` or ``cyl-x+cyl-z``.
    """
    m = _SPEC_RE.match(text.strip().lower())
    if m is None:
        raise BoardSpecError(f"cannot parse board spec {text!r}")
    try:
        family = Family(m["family"])
    except ValueError:
        raise BoardSpecError(f"unknown family {m['family']!r}") from None
    dims = tuple(int(tok) for tok in m["dims"].split("x"))
    token = m["boundary"] or "free"
    if token == "free":
        cyclic: tuple[int, ...] = ()
    elif token == "torus":
        cyclic = tuple(range(len(dims)))
    else:
        axes = []
        for part in token.split("+"):
            if not part.startswith("cyl-") or len(part) != 5 or part[4] not in AXIS_NAMES:
                raise BoardSpecError(f"unknown boundary {part!r}")
            axis = AXIS_NAMES.index(part[4])
            if axis >= len(dims):
                raise BoardSpecError(f"boundary {part!r} names a missing axis")
            axes.append(axis)
        cyclic = tuple(axes)
    return BoardSpec(family, dims, _boundaries(len(dims), cyclic))


def format_board(spec: BoardSpec) -> str:
    head = f"{spec.family.value}:{'x'.join(map(str, spec.dims))}"
    cyclic = [i for i, b in enumerate(spec.boundary) if b is Boundary.CYCLIC]
    if not cyclic:
        return head
    if len(cyclic) == spec.d and spec.d > 1:
        return head + ":torus"
    if max(cyclic) >= len(AXIS_NAMES):
        return head + ":" + "+".join(f"cyl-{i + 1}" for i in cyclic)
    return head + ":" + "+".join(f"cyl-{AXIS_NAMES[i]}" for i in cyclic)


def vertex_count(spec: BoardSpec) -> int:
    return spec.nverts


def neighbors(spec: BoardSpec, v: Vertex) -> list[Vertex]:
    """Open neighborhood of ``v``, without duplicates, in canonical order."""
    spec._check_vertex(v)
    if spec.family is Family.KING:
        steps = [s for s in itertools.product((-1, 0, 1), repeat=spec.d) if any(s)]
    else:
        steps = []
        for axis in range(spec.d):
            for delta in (-1, 1):
                step = [0] * spec.d
                step[axis] = delta
                steps.append(tuple(step))
    found = set()
    for step in steps:
        u = []
        for x, dx, n, b in zip(v, step, spec.dims, spec.boundary):
            y = x + dx
            if b is Boundary.CYCLIC:
                y = (y - 1) % n + 1
            elif not 1 <= y <= n:
                break
            u.append(y)
        else:
            u = tuple(u)
            if u != v:
                found.add(u)
    return sorted(found, key=spec.index)


def closed_neighborhood_masks(spec: BoardSpec, limit: int | None = None) -> list[VertexSet]:
    """``masks[i]`` is the bitset of vertex ``i`` together with its neighbors."""
    limit = max_oracle_bits() if limit is None else limit
    if spec.nverts > limit:
        raise GuardError(
            "oracle-bits", f"board {spec} has {spec.nverts} vertices, limit is {limit}"
        )
    masks = []
    for i, v in enumerate(spec.vertices()):
        m = 1 << i
        for u in neighbors(spec, v):
            m |= 1 << spec.index(u)
        masks.append(m)
    return masks


class Dilation:
    """Bit-parallel closed-neighborhood coverage on arbitrarily large boards.

    ``cover(s)`` is the union of closed neighborhoods of the members of ``s``,
    computed with a handful of shifts per axis instead of a loop over members.
    """

    def __init__(self, spec: BoardSpec):
        self.spec = spec
        self.full = spec.full
        self._axes = []
        for axis, (n, b) in enumerate(zip(spec.dims, spec.boundary)):
            if n == 0:
                continue
            stride = spec.strides[axis]
            first = _slab(spec, axis, 1)
            last = _slab(spec, axis, n)
            self._axes.append((stride, n, b is Boundary.CYCLIC, first, last))

    def _step(self, s: int, axis) -> tuple[int, int]:
        stride, n, cyclic, first, last = axis
        up = (s & ~last) << stride
        down = (s & ~first) >> stride
        if cyclic:
            up |= (s & last) >> (stride * (n - 1))
            down |= (s & first) << (stride * (n - 1))
        return up, down

    def cover(self, s: VertexSet) -> VertexSet:
        if self.spec.family is Family.KING:
            # strong product: dilate along each axis in turn
            for axis in self._axes:
                up, down = self._step(s, axis)
                s |= up | down
            return s
        out = s
        for axis in self._axes:
            up, down = self._step(s, axis)
            out |= up | down
        return out

    def is_dominating(self, s: VertexSet) -> bool:
        return self.cover(s) == self.full


def _slab(spec: BoardSpec, axis: int, coord: int) -> int:
    """Bitset of all vertices whose coordinate on ``axis`` equals ``coord``."""
    stride = spec.strides[axis]
    n = spec.dims[axis]
    block = stride * n
    row = ((1 << stride) - 1) << (stride * (coord - 1))
    out = 0
    for base in range(0, spec.nverts, block):
        out |= row << base
    return out


def is_dominating(spec: BoardSpec, s: VertexSet) -> bool:
    if s < 0 or s >> spec.nverts:
        raise ValueError(f"vertex set has bits outside board {spec}")
    return Dilation(spec).is_dominating(s)
