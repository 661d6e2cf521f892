"""Graph representation and exact coloring tests.

Coloring answers are checked against an independent oracle that tries every
color assignment outright, so no backtracking logic is trusted twice.
"""

from __future__ import annotations

from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromacount import (
    ColorAssignment,
    ColoringCapError,
    DomainError,
    Graph,
    Partition,
    chromatic_number,
    chromatic_number_from_masks,
    complete_multipartite,
    exponent,
    index_pair,
    is_k_colorable,
    pair_count,
    pair_index,
)


def brute_is_k_colorable(g: Graph, k: int) -> bool:
    """Independent oracle: try every one of the k^v color assignments."""
    v = g.vertex_count
    if v == 0:
        return True
    edges = list(g.edges())
    return any(
        all(colors[i] != colors[j] for i, j in edges)
        for colors in product(range(k), repeat=v)
    )


def brute_chromatic_number(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    k = 1
    while not brute_is_k_colorable(g, k):
        k += 1
    return k


@st.composite
def small_graphs(draw, min_v=1, max_v=6):
    v = draw(st.integers(min_v, max_v))
    bits = draw(st.integers(0, (1 << comb(v, 2)) - 1))
    return Graph(v, bits)


def cycle(v: int) -> Graph:
    return Graph.from_edges(v, [(i, (i + 1) % v) for i in range(v)])


def test_pair_index_round_trip_exhaustive():
    for v in range(2, 17):
        seen = set()
        for i in range(v):
            for j in range(i + 1, v):
                k = pair_index(v, i, j)
                assert index_pair(v, k) == (i, j)
                seen.add(k)
        assert seen == set(range(pair_count(v)))


def test_pair_index_rejects_bad_pairs():
    with pytest.raises(DomainError):
        pair_index(4, 2, 2)
    with pytest.raises(DomainError):
        pair_index(4, 3, 1)
    with pytest.raises(DomainError):
        index_pair(4, 6)


def test_graph_validation():
    with pytest.raises(DomainError):
        Graph(-1, 0)
    with pytest.raises(DomainError):
        Graph(3, 1 << 3)  # only 3 pair bits exist
    assert Graph(0, 0).vertex_count == 0


def test_graph_edge_accessors():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (3, 1)])
    assert g.edge_count() == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert g.has_edge(1, 3)
    assert not g.has_edge(0, 2)
    assert sorted(g.edges()) == [(0, 1), (1, 3), (2, 3)]
    assert g.degrees() == [1, 2, 1, 2]
    assert g.with_edge(0, 2).edge_count() == 4


def test_graph_json_round_trip():
    g = Graph.from_edges(5, [(0, 4), (1, 2)])
    data = g.to_json_dict()
    assert data["v"] == 5
    assert data["edges_hex"] == format(g.edge_bits, "x")
    assert data["edges_hex"] == data["edges_hex"].lower()
    assert Graph.from_json_dict(data) == g
    assert Graph.empty(3).to_json_dict() == {"v": 3, "edges_hex": "0"}


def test_complete_multipartite_small_cases():
    one_edge = complete_multipartite(Partition((1, 1)))
    assert one_edge.vertex_count == 2
    assert one_edge.edge_count() == 1

    triangle = complete_multipartite(Partition((1, 1, 1)))
    assert triangle == Graph.complete(3)

    k22 = complete_multipartite(Partition((2, 2)))
    assert k22.edge_count() == 4
    assert not k22.has_edge(0, 1)
    assert not k22.has_edge(2, 3)
    assert k22.has_edge(0, 2) and k22.has_edge(1, 3)


def test_complete_multipartite_edge_count_matches_exponent():
    for parts in [(2, 1), (3, 2), (2, 2, 1), (4, 3, 1), (1, 1, 1, 1)]:
        p = Partition(parts)
        assert complete_multipartite(p).edge_count() == exponent(p).exponent


def test_color_assignment_properness():
    triangle = Graph.complete(3)
    assert ColorAssignment((1, 2, 3)).is_proper(triangle)
    assert not ColorAssignment((1, 1, 2)).is_proper(triangle)
    assert ColorAssignment((1, 1, 1)).is_proper(Graph.empty(3))
    with pytest.raises(DomainError):
        ColorAssignment((1, 2)).is_proper(triangle)
    with pytest.raises(DomainError):
        ColorAssignment((0, 1, 2))


def test_color_assignment_classes_and_partition():
    assignment = ColorAssignment((2, 1, 2, 2))
    assert assignment.color_classes() == {1: (1,), 2: (0, 2, 3)}
    assert assignment.induced_partition() == Partition((3, 1))
    assert assignment.color_count() == 2


def test_partition_coloring_is_proper_on_its_host():
    for parts in [(1, 1), (2, 1), (2, 2), (3, 2, 1), (2, 2, 2)]:
        p = Partition(parts)
        assignment = ColorAssignment.for_partition(p)
        assert assignment.is_proper(complete_multipartite(p))
        assert assignment.induced_partition() == p
        assert assignment.color_count() == p.n


def test_is_k_colorable_known_cases():
    assert not is_k_colorable(Graph.complete(3), 2)
    assert is_k_colorable(Graph.empty(4), 1)
    assert not is_k_colorable(cycle(5), 2)
    assert is_k_colorable(cycle(5), 3)
    assert is_k_colorable(Graph.empty(0), 0)
    assert not is_k_colorable(Graph.empty(1), 0)
    with pytest.raises(DomainError):
        is_k_colorable(Graph.empty(1), -1)


def test_chromatic_number_known_cases():
    assert chromatic_number(Graph.empty(0)) == 0
    assert chromatic_number(Graph.empty(3)) == 1
    assert chromatic_number(Graph.complete(4)) == 4
    assert chromatic_number(complete_multipartite(Partition((2, 1, 1)))) == 3
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2


@pytest.mark.parametrize("v", range(1, 9))
def test_chromatic_number_extremes(v):
    assert chromatic_number(Graph.complete(v)) == v
    assert chromatic_number(Graph.empty(v)) == 1


def test_multipartite_chromatic_number_is_class_count():
    for parts in [(1, 1), (2, 1), (2, 2), (3, 2, 1), (2, 2, 2), (4, 1, 1)]:
        p = Partition(parts)
        assert chromatic_number(complete_multipartite(p)) == p.n


def test_coloring_cap_guard():
    big = Graph.empty(17)
    with pytest.raises(ColoringCapError):
        is_k_colorable(big, 2)
    with pytest.raises(ColoringCapError):
        chromatic_number(big)
    with pytest.raises(ColoringCapError):
        chromatic_number(Graph.complete(5), max_vertices=4)
    assert chromatic_number(Graph.complete(5), max_vertices=5) == 5


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_v=5), st.integers(0, 5))
def test_colorability_matches_brute_force(g, k):
    assert is_k_colorable(g, k) == brute_is_k_colorable(g, k)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_v=5))
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic_number(g)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_v=6), st.integers(0, 6))
def test_colorability_monotone_in_k(g, k):
    if is_k_colorable(g, k):
        assert is_k_colorable(g, k + 1)


@settings(max_examples=80, deadline=None)
@given(small_graphs(min_v=2, max_v=6), st.data())
def test_chromatic_number_monotone_under_edge_addition(g, data):
    free = [
        (i, j)
        for i in range(g.vertex_count)
        for j in range(i + 1, g.vertex_count)
        if not g.has_edge(i, j)
    ]
    if not free:
        return
    i, j = data.draw(st.sampled_from(free))
    assert chromatic_number(g.with_edge(i, j)) >= chromatic_number(g)


def test_masks_entry_point_agrees_with_graph_entry_point():
    for bits in range(1 << comb(4, 2)):
        g = Graph(4, bits)
        assert chromatic_number_from_masks(g.neighbor_masks()) == chromatic_number(g)
