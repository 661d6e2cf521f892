"""Exact verification of the upper-bound theorem and its term-expansion machinery.

The count of all labeled graphs on ``v`` vertices and the count compatible
with a best partition into ``n`` classes are both powers of two; the theorem
bounds their exponent gap below by ``y = v - n``, with equality exactly when
``2n >= v``.  Violations of either fact are raised as
:class:`InternalInconsistencyError` rather than reported as data, because a
violation can only mean an implementation bug.

The term machinery re-derives the bound the long way: the full-count exponent
``C(v, 2)`` is the sum of the terms ``v - i`` for ``i = 1 .. v-1``, and the
partition exponent expands into blocks of equal terms that are dominated
term-by-term, each block falling short by exactly ``C(x_j, 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .errors import DomainError, InternalInconsistencyError
from .partitions import (
    Log2Count,
    Partition,
    class_pair_sum,
    enumerate_partitions,
    exponent,
    max_partition,
)

RELATION_EQUALITY = "equality"
RELATION_STRICT = "strict"


def total_log2(v: int) -> Log2Count:
    """Exponent of the count of all labeled graphs on ``v`` vertices: C(v, 2)."""
    if v < 0:
        raise DomainError(f"negative vertex count: {v}")
    return Log2Count(comb(v, 2))


def log2_gap(v: int, n: int) -> int:
    """Exponent gap between the all-graphs count and the best n-class count.

    Computed as ``C(v, 2) - e*`` and cross-checked against the equivalent
    minimum over partitions of the intra-class pair count; a mismatch raises
    :class:`InternalInconsistencyError`.
    """
    _, e_star = max_partition(v, n)
    gap = comb(v, 2) - e_star.exponent
    min_intra = min(class_pair_sum(p) for p in enumerate_partitions(v, n))
    if gap != min_intra:
        raise InternalInconsistencyError(
            f"gap mismatch at v={v}, n={n}: C(v,2)-e*={gap}, "
            f"min intra-class pairs={min_intra}"
        )
    return gap


def check_upper_bound(v: int, n: int) -> "BoundReport":
    """Evaluate the bound at one (v, n) and return the full report row.

    Raises :class:`InternalInconsistencyError` if the proven bound
    ``gap >= v - n`` fails or the equality case does not match ``2n >= v``.
    """
    best, e_star = max_partition(v, n)
    gap = log2_gap(v, n)
    y = v - n
    if gap < y:
        raise InternalInconsistencyError(
            f"upper bound violated at v={v}, n={n}: gap={gap} < y={y}, "
            f"best partition {best}"
        )
    relation = RELATION_EQUALITY if gap == y else RELATION_STRICT
    corollary = 2 * n >= v
    if (gap == y) != corollary:
        raise InternalInconsistencyError(
            f"equality case mismatch at v={v}, n={n}: gap={gap}, y={y}, "
            f"2n>=v is {corollary}"
        )
    return BoundReport(
        v=v,
        n=n,
        y=y,
        log2_total=comb(v, 2),
        best_partition=best,
        e_star=e_star,
        log2_gap=gap,
        relation=relation,
        corollary=corollary,
    )


@dataclass(frozen=True)
class BoundReport:
    """One verified row of the bound table."""

    v: int
    n: int
    y: int
    log2_total: int
    best_partition: Partition
    e_star: Log2Count
    log2_gap: int
    relation: str
    corollary: bool

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "n": self.n,
            "y": self.y,
            "log2_total": self.log2_total,
            "best_partition": str(self.best_partition),
            "e_star": self.e_star.exponent,
            "lambda": self.log2_gap,
            "relation": self.relation,
            "corollary": self.corollary,
        }


@dataclass(frozen=True)
class TermSequence:
    """The two exponent term lists for one ordered part placement.

    ``full_terms[idx]`` is ``v - (idx + 1)``, the count of pairs the
    ``(idx+1)``-th vertex adds; the entries sum to ``C(v, 2)``.

    ``block_terms`` is the partition exponent expanded to the same length:
    part ``j`` (all but the last) contributes a block of ``x_j`` equal
    entries, each the number of vertices in later classes, and the tail that
    the last class would occupy is zero-padded.  Entries sum to the partition
    exponent and are dominated entry-wise by ``full_terms``.

    ``block_ranges`` holds one half-open index range per contributing part,
    in part order; the zero tail is ``range(v - parts[-1], v - 1)``.
    """

    parts: tuple[int, ...]
    full_terms: tuple[int, ...]
    block_terms: tuple[int, ...]
    block_ranges: tuple[tuple[int, int], ...]

    @property
    def v(self) -> int:
        return sum(self.parts)

    @property
    def partition(self) -> Partition:
        return Partition(self.parts)

    def padding_range(self) -> tuple[int, int]:
        """Half-open index range of the zero-padded tail (may be empty)."""
        return (self.v - self.parts[-1], self.v - 1)


PartsLike = Union[Partition, Sequence[int]]


def _as_ordered_parts(parts: PartsLike) -> tuple[int, ...]:
    if isinstance(parts, Partition):
        return parts.parts
    ordered = tuple(parts)
    if not ordered or any(not isinstance(x, int) or x < 1 for x in ordered):
        raise DomainError(f"parts must be positive integers: {ordered}")
    return ordered


def expand_term_sequences(parts: PartsLike) -> TermSequence:
    """Expand the two exponent term lists for ``parts``.

    The expansion depends on where each part sits, so an explicit part order
    is honored; passing a :class:`Partition` uses its canonical order.
    Requires at least two vertices (otherwise there are no terms).
    """
    ordered = _as_ordered_parts(parts)
    v = sum(ordered)
    if v < 2:
        raise DomainError(f"term expansion needs v >= 2, got v={v}")
    full_terms = tuple(v - i for i in range(1, v))
    block_terms = [0] * (v - 1)
    ranges = []
    covered = 0
    for x in ordered[:-1]:
        start = covered
        covered += x
        value = v - covered
        for idx in range(start, covered):
            block_terms[idx] = value
        ranges.append((start, covered))
    return TermSequence(
        parts=ordered,
        full_terms=full_terms,
        block_terms=tuple(block_terms),
        block_ranges=tuple(ranges),
    )


def verify_term_identities(parts: PartsLike) -> int:
    """Check every expansion identity for one part placement.

    Verifies term-wise domination, the strictness witness when some part
    exceeds 1, both column sums, the per-block arithmetic-run identity, and
    the per-block gaps against ``C(x_j, 2)``.  Returns the number of
    elementary comparisons made; raises
    :class:`InternalInconsistencyError` with context on any failure.
    """
    ordered = _as_ordered_parts(parts)
    v = sum(ordered)
    if v == 1:
        if block_gaps(ordered) != [0]:
            raise InternalInconsistencyError("nonzero gap for the one-vertex placement")
        return 1
    seq = expand_term_sequences(ordered)
    checks = 0

    def require(ok: bool, what: str) -> None:
        nonlocal checks
        checks += 1
        if not ok:
            raise InternalInconsistencyError(f"{what} failed for parts {ordered}")

    require(len(seq.full_terms) == v - 1, "full term list length")
    require(len(seq.block_terms) == v - 1, "block term list length")
    for idx in range(v - 1):
        require(seq.full_terms[idx] >= seq.block_terms[idx], f"domination at index {idx}")
    if any(x > 1 for x in ordered):
        require(
            any(f > b for f, b in zip(seq.full_terms, seq.block_terms)),
            "strict domination witness",
        )
    else:
        require(seq.full_terms == seq.block_terms, "term lists equal for all-ones parts")
    require(sum(seq.full_terms) == comb(v, 2), "full terms sum")
    require(sum(seq.block_terms) == exponent(Partition(ordered)).exponent, "block terms sum")
    for a, b in seq.block_ranges:
        run_sum = sum(seq.full_terms[a:b])
        require(
            2 * run_sum == (seq.full_terms[a] + seq.full_terms[b - 1]) * (b - a),
            f"arithmetic run over block {a}:{b}",
        )
    gaps = block_gaps(ordered)
    require(gaps == [comb(x, 2) for x in ordered], "per-block gaps")
    require(
        sum(gaps) == comb(v, 2) - exponent(Partition(ordered)).exponent,
        "total gap",
    )
    return checks


def block_gaps(parts: PartsLike) -> list[int]:
    """Per-block shortfall of the expanded terms, padding tail last.

    Entry ``j`` is the sum of ``full_terms`` minus the sum of ``block_terms``
    over block ``j``'s range; the final entry is the full-terms sum over the
    zero tail.  Each equals ``C(x_j, 2)`` and the total equals
    ``C(v, 2) - exponent``.
    """
    ordered = _as_ordered_parts(parts)
    v = sum(ordered)
    if v == 1:
        return [0]
    seq = expand_term_sequences(ordered)
    gaps = [
        sum(seq.full_terms[a:b]) - sum(seq.block_terms[a:b])
        for a, b in seq.block_ranges
    ]
    tail_a, tail_b = seq.padding_range()
    gaps.append(sum(seq.full_terms[tail_a:tail_b]))
    return gaps
