import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kingdom import matching
from kingdom.board import BoardSpec, is_dominating, parse_board
from kingdom.errors import NotDominatingError, UnsupportedError
from kingdom.matching import Matcher, Outcome

FEN_ACTIVE = "k1k1k1k1/8/k1K1k2k/2k3k1/kk2k1k1/k4k2/1k2k1k1/3k2k1"
FEN_CORNERS = "k1k1k1k1/8/k1k1k1k1/8/k1k1k1k1/8/k1k1k1k1/8"


def fen_kings(fen):
    """Coordinates of all kings; the top rank is y = 1, file a is x = 1."""
    kings, white = [], []
    for y, rank in enumerate(fen.split("/"), start=1):
        x = 1
        for ch in rank:
            if ch.isdigit():
                x += int(ch)
                continue
            kings.append((x, y))
            if ch == "K":
                white.append((x, y))
            x += 1
    return kings, white


def test_decompose_examples():
    blocks = matching.decompose(parse_board("king:8x8")).blocks
    assert len(blocks) == 16 and all(len(b.cells) == 4 for b in blocks)
    sizes = [len(b.cells) for b in matching.decompose(parse_board("king:3x3"))]
    assert sizes == [4, 2, 2, 1]
    assert [b.cells for b in matching.decompose(parse_board("king:1x1"))] == [((1, 1),)]


@pytest.mark.parametrize("dims", [(1, 1), (3, 3), (4, 5), (2, 3, 3), (5, 1, 4), (3,)])
def test_blocks_partition_and_scan_order(dims):
    spec = BoardSpec.king(*dims)
    blocks = matching.decompose(spec).blocks
    cells = [v for b in blocks for v in b.cells]
    assert sorted(cells) == sorted(spec.vertices())
    assert len(blocks) == math.prod((n + 1) // 2 for n in dims)
    corners = [b.corner for b in blocks]
    for i, a in enumerate(corners):
        assert all(x % 2 == 1 for x in a)
        for b in corners[i + 1 :]:
            assert not all(p >= q for p, q in zip(a, b))


def test_fixed_point_examples():
    spec = parse_board("king:8x8")
    corners, _ = fen_kings(FEN_CORNERS)
    assert matching.fixed_point(spec) == spec.to_set(corners)
    assert bin(matching.fixed_point(parse_board("king:5x5"))).count("1") == 9
    assert bin(matching.fixed_point(parse_board("king:3x3x3"))).count("1") == 8
    assert is_dominating(spec, matching.fixed_point(spec))


def test_partner_of_corner_set_is_fixed_point():
    spec = parse_board("king:8x8")
    out = matching.partner(spec, matching.fixed_point(spec))
    assert out.kind is Outcome.FIXED_POINT and out.flipped is None and out.partner is None


def test_partner_two_by_two():
    spec = parse_board("king:2x2")
    out = matching.partner(spec, spec.to_set([(1, 2)]))
    assert out.kind is Outcome.PARTNER
    assert out.flipped == (1, 1)
    assert out.partner == spec.to_set([(1, 1), (1, 2)])


def test_partner_flips_white_king_in_example_position():
    spec = parse_board("king:8x8")
    kings, (white,) = fen_kings(FEN_ACTIVE)
    s = spec.to_set(kings)
    assert is_dominating(spec, s)
    out = matching.partner(spec, s)
    assert out.flipped == white == (3, 3)
    assert out.partner == s ^ spec.to_set([white])
    assert matching.partner(spec, out.partner).partner == s


def test_partner_rejects_non_dominating():
    spec = parse_board("king:3x3")
    with pytest.raises(NotDominatingError):
        matching.partner(spec, spec.to_set([(1, 1)]))


@pytest.mark.parametrize("text", ["king:4x4:torus", "king:5x4:cyl-x", "wazir:3x3"])
def test_refuses_unsupported_boards(text):
    with pytest.raises(UnsupportedError):
        matching.decompose(parse_board(text))


@pytest.mark.parametrize("text, signed", [("king:3x3", 1), ("king:4x4", 1), ("king:2x3x2", 1), ("king:2x2x2", -1)])
def test_verify_theorem(text, signed):
    report = matching.verify_theorem(parse_board(text))
    assert report.passed, report.violations
    assert report.signed_count == signed
    assert report.fixed_points == 1
    assert 2 * report.pairs + 1 == report.dominating_sets


def test_verify_theorem_catches_a_broken_map(monkeypatch):
    spec = parse_board("king:3x3")
    real = Matcher.partner

    def skewed(self, s):
        out = real(self, s)
        if out.kind is Outcome.PARTNER and s == 0b111111111:
            return matching.MatchOutcome(Outcome.PARTNER, out.flipped, s ^ 0b11)
        return out

    monkeypatch.setattr(Matcher, "partner", skewed)
    report = matching.verify_theorem(spec)
    assert not report.passed
    assert not report.checks["parity_flip"] or not report.checks["involution"]


def test_sampled_check_counts_fixed_points():
    report = matching.sampled_check(parse_board("king:9x7"), 200, 3)
    assert report.passed
    assert report.fixed_points == report.fixed_point_samples >= 1


def test_sampled_check_is_reproducible():
    a = matching.sampled_check(parse_board("king:6x6"), 300, 11).to_json()
    b = matching.sampled_check(parse_board("king:6x6"), 300, 11).to_json()
    assert a == b


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=3), st.data())
def test_partner_properties_on_random_sets(dims, data):
    spec = BoardSpec.king(*dims)
    m = Matcher(spec)
    s = data.draw(st.integers(0, spec.full))
    if not is_dominating(spec, s):
        s |= m.fixed
    out = m.partner(s)
    if s == m.fixed:
        assert out.kind is Outcome.FIXED_POINT
        return
    t = out.partner
    assert bin(s ^ t).count("1") == 1
    assert is_dominating(spec, t)
    assert m.partner(t).partner == s
