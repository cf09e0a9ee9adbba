"""Parity-reversing partner map on dominating sets of free king boards.

The board is cut into ``2 x ... x 2`` blocks anchored at the vertices whose
coordinates are all odd (blocks are truncated at odd-length edges).  Blocks
are scanned in lexicographic order of their corners, last axis slowest.  The
partner of a dominating set ``S`` toggles the corner of the first block that
holds a member of ``S`` other than its corner.  The set of all corners is the
only dominating set without a partner.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field

from kingdom import oracle
from kingdom.board import BoardSpec, Dilation, Family, Vertex, VertexSet
from kingdom.errors import NotDominatingError, UnsupportedError


@dataclass(frozen=True)
class Block:
    corner: Vertex
    corner_bit: int
    rest: int  # bitset of the block's non-corner vertices
    cells: tuple[Vertex, ...]


class BlockDecomposition:
    def __init__(self, spec: BoardSpec):
        _require_free_king(spec)
        self.spec = spec
        self.blocks: list[Block] = []
        corner_axes = [range(1, n + 1, 2) for n in spec.dims]
        # itertools.product varies the last factor fastest; reverse so axis 1 is fastest
        for rev in itertools.product(*reversed(corner_axes)):
            corner = tuple(reversed(rev))
            cells = tuple(
                tuple(reversed(c))
                for c in itertools.product(
                    *reversed([range(ci, min(ci + 1, n) + 1) for ci, n in zip(corner, spec.dims)])
                )
            )
            corner_bit = 1 << spec.index(corner)
            rest = 0
            for v in cells:
                if v != corner:
                    rest |= 1 << spec.index(v)
            self.blocks.append(Block(corner, corner_bit, rest, cells))
        self.corners: VertexSet = sum(b.corner_bit for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def _require_free_king(spec: BoardSpec) -> None:
    if spec.family is not Family.KING:
        raise UnsupportedError(f"matching is only defined for king boards, not {spec.family.value}")
    if not spec.is_free:
        raise UnsupportedError(
            f"matching undefined on {spec}: cyclic axes have no first block to scan from"
        )


def decompose(spec: BoardSpec) -> BlockDecomposition:
    return BlockDecomposition(spec)


def fixed_point(spec: BoardSpec) -> VertexSet:
    """The set of all block corners, i.e. every vertex with all-odd coordinates."""
    return BlockDecomposition(spec).corners


class Outcome(enum.Enum):
    PARTNER = "partner"
    FIXED_POINT = "fixed_point"


@dataclass(frozen=True)
class MatchOutcome:
    kind: Outcome
    flipped: Vertex | None = None
    partner: VertexSet | None = None


class Matcher:
    """Partner map with the decomposition and coverage precomputed."""

    def __init__(self, spec: BoardSpec):
        self.spec = spec
        self.decomposition = BlockDecomposition(spec)
        self.dilation = Dilation(spec)
        self.fixed = self.decomposition.corners

    def partner(self, s: VertexSet) -> MatchOutcome:
        if not self.dilation.is_dominating(s):
            raise NotDominatingError(f"set {s:#x} does not dominate {self.spec}")
        for block in self.decomposition.blocks:
            if s & block.rest:
                return MatchOutcome(Outcome.PARTNER, block.corner, s ^ block.corner_bit)
            # an inactive block before the first active one must hold its corner,
            # or the corner would have no dominator
            if not s & block.corner_bit:
                raise AssertionError(f"block at {block.corner} is empty in a dominating set")
        assert s == self.fixed
        return MatchOutcome(Outcome.FIXED_POINT)


def partner(spec: BoardSpec, s: VertexSet) -> MatchOutcome:
    return Matcher(spec).partner(s)


@dataclass
class MatchingReport:
    board: str
    dominating_sets: int = 0
    pairs: int = 0
    fixed_points: int = 0
    signed_count: int = 0
    expected_sign: int = 0
    fixed_point_size: int = 0
    checks: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "board": self.board,
            "dominating_sets": self.dominating_sets,
            "pairs": self.pairs,
            "fixed_points": self.fixed_points,
            "signed_count": self.signed_count,
            "expected": self.expected_sign,
            "fixed_point_size": self.fixed_point_size,
            "checks": self.checks,
            "violations": self.violations,
            "passed": self.passed,
        }


MAX_LISTED_VIOLATIONS = 20


def _note(report, msg: str) -> None:
    if len(report.violations) < MAX_LISTED_VIOLATIONS:
        report.violations.append(msg)


def _check_pair(m: Matcher, s: VertexSet, report, flags: dict) -> MatchOutcome:
    out = m.partner(s)
    if out.kind is Outcome.FIXED_POINT:
        report.fixed_points += 1
        if s != m.fixed:
            flags["unique_fixed_point"] = False
            _note(report, f"fixed point {s:#x} differs from the corner set")
        return out
    t = out.partner
    if (t ^ s).bit_count() != 1 or t.bit_count() % 2 == s.bit_count() % 2:
        flags["parity_flip"] = False
        _note(report, f"{s:#x} -> {t:#x} does not flip parity by one vertex")
    if not m.dilation.is_dominating(t):
        flags["closure"] = False
        _note(report, f"partner {t:#x} of {s:#x} is not dominating")
        return out
    back = m.partner(t)
    if back.kind is not Outcome.PARTNER or back.partner != s:
        flags["involution"] = False
        _note(report, f"partner of partner of {s:#x} is not itself")
    return out


def verify_theorem(spec: BoardSpec, force: bool = False) -> MatchingReport:
    """Exhaustively check the partner map on every dominating set of ``spec``."""
    m = Matcher(spec)
    report = MatchingReport(str(spec))
    report.fixed_point_size = m.fixed.bit_count()
    flags = {"involution": True, "parity_flip": True, "closure": True, "unique_fixed_point": True}
    signed = 0
    for s in oracle.enumerate_dominating_sets(spec, force=force):
        report.dominating_sets += 1
        signed += -1 if s.bit_count() & 1 else 1
        out = _check_pair(m, s, report, flags)
        if out.kind is Outcome.PARTNER:
            report.pairs += 1
    # each pair was visited from both ends
    report.pairs //= 2
    report.signed_count = signed
    report.expected_sign = (-1) ** math.prod((n + 1) // 2 for n in spec.dims)
    if report.fixed_points != 1:
        flags["unique_fixed_point"] = False
        _note(report, f"found {report.fixed_points} fixed points")
    flags["signed_count"] = signed == report.expected_sign == (-1) ** report.fixed_point_size
    if not flags["signed_count"]:
        _note(report, f"signed count {signed}, expected {report.expected_sign}")
    report.checks = flags
    return report


@dataclass
class SampleReport:
    board: str
    trials: int = 0
    partners: int = 0
    fixed_points: int = 0
    fixed_point_samples: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and self.fixed_points == self.fixed_point_samples

    def to_json(self) -> dict:
        return {
            "board": self.board,
            "trials": self.trials,
            "pairs": self.partners,
            "fixed_points": self.fixed_points,
            "fixed_point_samples": self.fixed_point_samples,
            "violations": self.violations,
            "passed": self.passed,
        }


MAX_REJECTIONS = 1000


def sample_dominating(m: Matcher, rng: random.Random, trial: int) -> VertexSet:
    """Trial 0 is the corner set itself; afterwards alternate between uniform
    dominating sets and the corner set plus 1-4 extra vertices."""
    nv = m.spec.nverts
    if trial == 0:
        return m.fixed
    if trial % 2:
        for _ in range(MAX_REJECTIONS):
            s = rng.getrandbits(nv) if nv else 0
            if m.dilation.is_dominating(s):
                return s
    others = [i for i in range(nv) if not m.fixed >> i & 1]
    if not others:
        return m.fixed
    extra = rng.sample(others, min(len(others), rng.randint(1, 4)))
    return m.fixed | sum(1 << i for i in extra)


def sampled_check(spec: BoardSpec, trials: int, rng_seed: int = 0) -> SampleReport:
    m = Matcher(spec)
    rng = random.Random(rng_seed)
    report = SampleReport(str(spec))
    flags: dict[str, bool] = {}
    for trial in range(trials):
        s = sample_dominating(m, rng, trial)
        report.trials += 1
        if s == m.fixed:
            report.fixed_point_samples += 1
        out = _check_pair(m, s, report, flags)
        if out.kind is Outcome.PARTNER:
            report.partners += 1
    return report
