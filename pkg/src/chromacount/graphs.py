"""Labeled simple graphs as edge bit vectors, with exact coloring.

A graph on ``v`` vertices is stored as an integer whose bit ``k`` records the
presence of the ``k``-th vertex pair ``(i, j)``, ``0 <= i < j < v``, in
lexicographic order of ``(i, j)``.  This makes the 2^C(v,2) labeled graphs on
``v`` vertices exactly the integers ``0 .. 2^C(v,2) - 1``, which is what the
exhaustive enumeration in :mod:`chromacount.oracle` iterates over.

Coloring operations are exact (backtracking, never heuristic) and guarded by a
vertex cap since their worst case is exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ColoringCapError, DomainError
from .partitions import Partition

#: Hard cap on vertex count for any operation that enumerates colorings.
MAX_COLORING_VERTICES = 16


def pair_count(v: int) -> int:
    """Number of vertex pairs, i.e. the edge-bit-vector length C(v, 2)."""
    return comb(v, 2)


def pair_index(v: int, i: int, j: int) -> int:
    """Bit index of the pair (i, j), 0 <= i < j < v, in lexicographic order."""
    if not 0 <= i < j < v:
        raise DomainError(f"not a vertex pair for v={v}: ({i}, {j})")
    return i * (2 * v - i - 1) // 2 + (j - i - 1)


def index_pair(v: int, k: int) -> tuple[int, int]:
    """Inverse of :func:`pair_index`: the pair occupying bit index ``k``."""
    if not 0 <= k < pair_count(v):
        raise DomainError(f"pair index {k} out of range for v={v}")
    i = 0
    while k >= v - 1 - i:
        k -= v - 1 - i
        i += 1
    return i, i + 1 + k


@lru_cache(maxsize=None)
def all_pairs(v: int) -> tuple[tuple[int, int], ...]:
    """All vertex pairs of a v-vertex graph in bit-index order."""
    return tuple((i, j) for i in range(v) for j in range(i + 1, v))


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph: vertex count plus edge bit vector.

    Loops and multi-edges are unrepresentable by construction.  Values are
    immutable and safe to share between workers.
    """

    vertex_count: int
    edge_bits: int

    def __post_init__(self):
        if self.vertex_count < 0:
            raise DomainError(f"negative vertex count: {self.vertex_count}")
        if not 0 <= self.edge_bits < (1 << pair_count(self.vertex_count)):
            raise DomainError(
                f"edge bits out of range for {self.vertex_count} vertices: "
                f"{self.edge_bits:#x}"
            )

    @classmethod
    def empty(cls, v: int) -> "Graph":
        return cls(v, 0)

    @classmethod
    def complete(cls, v: int) -> "Graph":
        return cls(v, (1 << pair_count(v)) - 1)

    @classmethod
    def from_edges(cls, v: int, edges) -> "Graph":
        bits = 0
        for i, j in edges:
            if i > j:
                i, j = j, i
            bits |= 1 << pair_index(v, i, j)
        return cls(v, bits)

    def edge_count(self) -> int:
        return bin(self.edge_bits).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return bool(self.edge_bits >> pair_index(self.vertex_count, i, j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        pairs = all_pairs(self.vertex_count)
        bits = self.edge_bits
        while bits:
            low = bits & -bits
            yield pairs[low.bit_length() - 1]
            bits ^= low

    def with_edge(self, i: int, j: int) -> "Graph":
        if i > j:
            i, j = j, i
        k = pair_index(self.vertex_count, i, j)
        return Graph(self.vertex_count, self.edge_bits | 1 << k)

    def neighbor_masks(self) -> list[int]:
        """Per-vertex adjacency bitmasks (bit u of entry w set iff edge {u, w})."""
        masks = [0] * self.vertex_count
        for i, j in self.edges():
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def degrees(self) -> list[int]:
        return [bin(m).count("1") for m in self.neighbor_masks()]

    def to_json_dict(self) -> dict:
        """Report form: ``{"v": ..., "edges_hex": ...}``, hex LSB = pair index 0."""
        return {"v": self.vertex_count, "edges_hex": format(self.edge_bits, "x")}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(int(data["v"]), int(data["edges_hex"], 16))


@dataclass(frozen=True)
class ColorAssignment:
    """One color (1-based) per vertex; the certificate form of a coloring.

    The nonempty sets of vertices sharing a color are the assignment's color
    classes; their sizes are the partition it realizes.
    """

    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        fixed = tuple(colors)
        if any(not isinstance(c, int) or c < 1 for c in fixed):
            raise DomainError(f"colors must be integers >= 1: {fixed}")
        object.__setattr__(self, "colors", fixed)

    @classmethod
    def for_partition(cls, p: Partition) -> "ColorAssignment":
        """Color consecutive vertex ranges 1..n, matching :func:`complete_multipartite`."""
        colors: list[int] = []
        for idx, size in enumerate(p.parts):
            colors.extend([idx + 1] * size)
        return cls(colors)

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    def color_count(self) -> int:
        return len(set(self.colors))

    def color_classes(self) -> dict[int, tuple[int, ...]]:
        classes: dict[int, list[int]] = {}
        for vertex, color in enumerate(self.colors):
            classes.setdefault(color, []).append(vertex)
        return {color: tuple(members) for color, members in sorted(classes.items())}

    def induced_partition(self) -> Partition:
        return Partition(len(members) for members in self.color_classes().values())

    def is_proper(self, g: Graph) -> bool:
        """True iff no edge of ``g`` joins two vertices of equal color."""
        if g.vertex_count != self.vertex_count:
            raise DomainError(
                f"assignment covers {self.vertex_count} vertices, graph has {g.vertex_count}"
            )
        return all(self.colors[i] != self.colors[j] for i, j in g.edges())


def complete_multipartite(p: Partition) -> Graph:
    """The graph whose color classes are consecutive vertex ranges of ``p``'s parts.

    Every cross-class pair is joined and no intra-class pair is; the edge count
    therefore equals the closed-form exponent of ``p``.  Classes are placed in
    canonical (non-increasing) part order so outputs are reproducible
    bit-for-bit.
    """
    v = p.v
    class_of = [0] * v
    vertex = 0
    for idx, size in enumerate(p.parts):
        for _ in range(size):
            class_of[vertex] = idx
            vertex += 1
    bits = 0
    for k, (i, j) in enumerate(all_pairs(v)):
        if class_of[i] != class_of[j]:
            bits |= 1 << k
    return Graph(v, bits)


def _check_cap(v: int, max_vertices: int) -> None:
    if v > max_vertices:
        raise ColoringCapError(
            f"coloring requested on {v} vertices, cap is {max_vertices}"
        )


def _degree_order(neigh: Sequence[int]) -> list[int]:
    """Vertices in non-increasing degree order (stable, hence deterministic)."""
    return sorted(range(len(neigh)), key=lambda u: -bin(neigh[u]).count("1"))


def _colorable(neigh: Sequence[int], order: Sequence[int], k: int) -> bool:
    """Backtracking k-colorability over ``order`` with first-fit symmetry breaking.

    A vertex may only use colors ``0 .. used`` where ``used`` is the number of
    colors already introduced, so each color class pattern is tried once.
    """
    n = len(order)
    if k >= n:
        return True
    class_masks = [0] * k

    def assign(pos: int, used: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        bit = 1 << u
        nb = neigh[u]
        cap = used + 1 if used < k else k
        for c in range(cap):
            if class_masks[c] & nb:
                continue
            class_masks[c] |= bit
            ok = assign(pos + 1, used + 1 if c == used else used)
            class_masks[c] &= ~bit
            if ok:
                return True
        return False

    return assign(0, 0)


def is_k_colorable(g: Graph, k: int, max_vertices: int = MAX_COLORING_VERTICES) -> bool:
    """Exact test for a proper coloring of ``g`` with at most ``k`` colors.

    ``k = 0`` is satisfiable only by the graph with no vertices.
    """
    if k < 0:
        raise DomainError(f"negative color count: {k}")
    v = g.vertex_count
    if v == 0:
        return True
    if k == 0:
        return False
    _check_cap(v, max_vertices)
    if g.edge_bits == 0:
        return True
    if k == 1:
        return False
    neigh = g.neighbor_masks()
    # Greedy bound: one more color than the max degree always suffices.
    if k > max(bin(m).count("1") for m in neigh):
        return True
    return _colorable(neigh, _degree_order(neigh), k)


def chromatic_number(g: Graph, max_vertices: int = MAX_COLORING_VERTICES) -> int:
    """Least k such that ``g`` is k-colorable; 0 for the vertex-free graph.

    Iterative deepening over k with exact backtracking at each level.
    """
    if g.vertex_count == 0:
        return 0
    _check_cap(g.vertex_count, max_vertices)
    if g.edge_bits == 0:
        return 1
    return chromatic_number_from_masks(g.neighbor_masks(), max_vertices)


def chromatic_number_from_masks(
    neigh: Sequence[int], max_vertices: int = MAX_COLORING_VERTICES
) -> int:
    """Chromatic number from adjacency bitmasks; the hot path for census loops."""
    v = len(neigh)
    if v == 0:
        return 0
    _check_cap(v, max_vertices)
    if not any(neigh):
        return 1
    order = _degree_order(neigh)
    for k in range(2, v):
        if _colorable(neigh, order, k):
            return k
    return v
