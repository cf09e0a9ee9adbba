import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
from kingdom.board import (
    BoardSpec,
    Dilation,
    Family,
    closed_neighborhood_masks,
    format_board,
    is_dominating,
    neighbors,
    parse_board,
    vertex_count,
)
from kingdom.errors import BoardSpecError, GuardError


@st.composite
def boards(draw, max_vertices=40):
    family = draw(st.sampled_from(["king", "wazir"]))
    d = 2 if family == "wazir" else draw(st.integers(1, 3))
    dims = tuple(draw(st.integers(1, 6)) for _ in range(d))
    cyclic = tuple(i for i in range(d) if dims[i] >= 3 and draw(st.booleans()))
    if math.prod(dims) > max_vertices:
        dims = tuple(min(n, 3) for n in dims)
    return BoardSpec(Family(family), dims, BoardSpec.king(*dims, cyclic=cyclic).boundary)


@pytest.mark.parametrize("text, count", [("king:8x8", 64), ("king:3x0", 0), ("king:2x3x4", 24)])
def test_vertex_count(text, count):
    assert vertex_count(parse_board(text)) == count


def test_king_interior_has_all_eight_neighbors():
    spec = parse_board("king:3x3")
    assert sorted(neighbors(spec, (2, 2))) == sorted(v for v in spec.vertices() if v != (2, 2))


def test_wazir_corner():
    assert set(neighbors(parse_board("wazir:3x3"), (1, 1))) == {(2, 1), (1, 2)}


def test_cylinder_wraps_along_x():
    got = set(neighbors(parse_board("king:4x3:cyl-x"), (1, 2)))
    assert {(4, 1), (4, 2), (4, 3)} <= got
    assert len(got) == 8


def test_neighbors_rejects_out_of_bounds():
    with pytest.raises(IndexError):
        neighbors(parse_board("king:3x3"), (4, 1))


def test_masks_small_boards():
    assert closed_neighborhood_masks(parse_board("king:1x1")) == [1]
    assert closed_neighborhood_masks(parse_board("king:2x2")) == [0b1111] * 4
    assert [bin(m).count("1") for m in closed_neighborhood_masks(parse_board("wazir:2x2"))] == [3] * 4


def test_masks_guard():
    with pytest.raises(GuardError):
        closed_neighborhood_masks(parse_board("king:6x6"))


def test_is_dominating_examples():
    spec = parse_board("king:3x3")
    assert is_dominating(spec, spec.to_set([(2, 2)]))
    assert not is_dominating(spec, spec.to_set([(1, 1)]))


def test_nine_kings_dominate_eight_by_eight():
    spec = parse_board("king:8x8")
    kings = [(x, y) for x in (2, 5, 8) for y in (2, 5, 8)]
    assert is_dominating(spec, spec.to_set(kings))
    assert not is_dominating(spec, spec.to_set(kings[:-1]))


def test_empty_and_full_sets():
    spec = parse_board("king:3x0")
    assert is_dominating(spec, 0)
    spec = parse_board("wazir:3x4")
    assert is_dominating(spec, spec.full)
    assert not is_dominating(spec, 0)


@given(boards())
def test_adjacency_symmetric_and_loop_free(spec):
    for v in spec.vertices():
        nb = neighbors(spec, v)
        assert v not in nb
        assert len(set(nb)) == len(nb)
        for u in nb:
            assert v in neighbors(spec, u)


@given(boards())
def test_neighbors_match_coordinate_definition(spec):
    cyclic = [i for i, b in enumerate(spec.boundary) if b.value == "cyclic"]
    for v in spec.vertices():
        expect = {
            u for u in spec.vertices()
            if bruteforce.adjacent(spec.family.value, spec.dims, cyclic, u, v)
        }
        assert set(neighbors(spec, v)) == expect


@settings(max_examples=50)
@given(boards(), st.data())
def test_dilation_equals_union_of_masks(spec, data):
    masks = closed_neighborhood_masks(spec, limit=64)
    s = data.draw(st.integers(0, spec.full))
    union = 0
    for i, m in enumerate(masks):
        if s >> i & 1:
            union |= m
    assert Dilation(spec).cover(s) == union


@pytest.mark.parametrize("d", [1, 2, 3])
def test_interior_degrees(d):
    king = BoardSpec.king(*([5] * d))
    centre = (3,) * d
    assert len(neighbors(king, centre)) == 3**d - 1
    if d == 2:
        assert len(neighbors(BoardSpec.wazir(5, 5), centre)) == 4


@pytest.mark.parametrize("m, n", [(3, 3), (3, 5), (4, 6)])
def test_torus_king_is_eight_regular(m, n):
    spec = BoardSpec.king(m, n, cyclic=(0, 1))
    assert all(len(neighbors(spec, v)) == 8 for v in spec.vertices())


def test_canonical_index_axis_one_fastest():
    spec = BoardSpec.king(3, 4, 2)
    assert spec.index((1, 1, 1)) == 0
    assert spec.index((2, 1, 1)) == 1
    assert spec.index((1, 2, 1)) == 3
    assert spec.index((1, 1, 2)) == 12
    assert [spec.vertex(spec.index(v)) for v in spec.vertices()] == list(spec.vertices())


@pytest.mark.parametrize(
    "text", ["king:8x8", "king:8x8:cyl-x", "king:6x6:torus", "king:3x3x3", "wazir:4x4", "king:3x4x5:cyl-x+cyl-z"]
)
def test_parse_format_round_trip(text):
    assert format_board(parse_board(text)) == text


def test_parse_defaults_and_axes():
    assert parse_board("king:4x5:free") == parse_board("king:4x5")
    spec = parse_board("king:4x5:cyl-y")
    assert [b.value for b in spec.boundary] == ["free", "cyclic"]


@pytest.mark.parametrize(
    "text",
    ["king", "king:", "king:3x", "queen:3x3", "king:3x3:mobius", "king:2x3:cyl-x", "king:3x3:cyl-z", "wazir:2x2x2"],
)
def test_parse_rejects(text):
    with pytest.raises(BoardSpecError):
        parse_board(text)


def test_spec_validation():
    with pytest.raises(BoardSpecError):
        BoardSpec(Family.KING, (3, 3), ("free",))
    with pytest.raises(BoardSpecError):
        BoardSpec(Family.KING, (-1, 3), ("free", "free"))
    with pytest.raises(BoardSpecError):
        BoardSpec.wazir(2, 5, cyclic=(0,))
