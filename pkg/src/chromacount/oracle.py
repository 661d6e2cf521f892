"""Brute-force ground truth: exhaustive censuses and conjecture verdicts.

Everything here counts by literally enumerating edge bit vectors, so results
are independent of the closed-form exponents they are checked against.  All
counts are plain Python integers (exact, arbitrary precision).

Enumeration loops are pure over disjoint integer ranges of bit vectors, so
they shard across worker processes; per-shard tallies merge by addition, which
makes results identical for any worker count.  A per-call budget guards
against accidentally requesting week-long searches; it can be overridden
explicitly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal, Optional

from .errors import BudgetExceededError, DomainError, InternalInconsistencyError
from .graphs import (
    all_pairs,
    chromatic_number_from_masks,
    complete_multipartite,
    pair_index,
)
from .partitions import Partition, enumerate_partitions, exponent, max_partition

#: Default cap on evaluated graphs per call, as bits of search space.
ENUMERATION_BUDGET_BITS = 28

#: Search spaces smaller than this many bits are not worth forking workers for.
PARALLEL_MIN_BITS = 14

PARTITION_SUBGRAPH = "partition-subgraph"
CENSUS = "census"

Interpretation = Literal["partition-subgraph", "census"]


def _check_budget(required_bits: int, budget_bits: int, override: bool) -> None:
    if not override and required_bits > budget_bits:
        raise BudgetExceededError(required_bits, budget_bits)


def _cross_pairs(p: Partition) -> list[tuple[int, int]]:
    """Cross-class vertex pairs of ``p``'s complete multipartite graph, in bit order."""
    class_of = []
    for idx, size in enumerate(p.parts):
        class_of.extend([idx] * size)
    return [
        (i, j) for i, j in all_pairs(p.v) if class_of[i] != class_of[j]
    ]


def iter_partition_subgraphs(p: Partition) -> Iterator[int]:
    """Every spanning subgraph of ``p``'s complete multipartite graph.

    Yields each subgraph's full edge bit vector exactly once, by iterating
    every subset of the cross-class edge set in ascending subset-code order.
    """
    v = p.v
    positions = [pair_index(v, i, j) for i, j in _cross_pairs(p)]
    e = len(positions)
    for code in range(1 << e):
        bits = 0
        remaining = code
        while remaining:
            low = remaining & -remaining
            bits |= 1 << positions[low.bit_length() - 1]
            remaining ^= low
        yield bits


def count_partition_subgraphs(
    p: Partition,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
) -> int:
    """Count ``p``-compatible graphs by exhaustive enumeration.

    This is the independent check of the closed form: the result must equal
    ``2 ** exponent(p)``, but is obtained by constructing and counting every
    spanning subgraph of the complete multipartite graph.
    """
    _check_budget(exponent(p).exponent, budget_bits, override)
    host = complete_multipartite(p)
    count = 0
    for bits in iter_partition_subgraphs(p):
        if bits & ~host.edge_bits:
            raise InternalInconsistencyError(
                f"enumerated subgraph {bits:#x} not contained in host graph"
            )
        count += 1
    return count


def _tally_census_range(v: int, start: int, stop: int) -> list[int]:
    """Chromatic-number tallies for edge bit vectors in [start, stop)."""
    pairs = all_pairs(v)
    counts = [0] * (v + 1)
    for bits in range(start, stop):
        neigh = [0] * v
        remaining = bits
        while remaining:
            low = remaining & -remaining
            i, j = pairs[low.bit_length() - 1]
            neigh[i] |= 1 << j
            neigh[j] |= 1 << i
            remaining ^= low
        counts[chromatic_number_from_masks(neigh)] += 1
    return counts


def _census_worker(args: tuple[int, int, int]) -> list[int]:
    return _tally_census_range(*args)


def _tally_partition_range(
    parts: tuple[int, ...], start: int, stop: int
) -> list[int]:
    """Chromatic-number tallies for cross-edge subset codes in [start, stop)."""
    p = Partition(parts)
    cross = _cross_pairs(p)
    v = p.v
    counts = [0] * (v + 1)
    for code in range(start, stop):
        neigh = [0] * v
        remaining = code
        while remaining:
            low = remaining & -remaining
            i, j = cross[low.bit_length() - 1]
            neigh[i] |= 1 << j
            neigh[j] |= 1 << i
            remaining ^= low
        counts[chromatic_number_from_masks(neigh)] += 1
    return counts


def _partition_worker(args: tuple[tuple[int, ...], int, int]) -> list[int]:
    return _tally_partition_range(*args)


def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    """Contiguous ranges covering [0, total), deterministic for a given shard count."""
    shards = max(1, min(shards, total))
    step = -(-total // shards)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _sharded_tally(worker, make_args, total: int, size: int, jobs: int) -> list[int]:
    """Run a range-tally worker over shards and merge by elementwise addition."""
    if jobs > 1 and total >= (1 << PARALLEL_MIN_BITS):
        bounds = _shard_bounds(total, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, [make_args(lo, hi) for lo, hi in bounds]))
    else:
        parts = [worker(make_args(0, total))]
    merged = [0] * size
    for tally in parts:
        for idx, value in enumerate(tally):
            merged[idx] += value
    return merged


@dataclass(frozen=True)
class ChiCensus:
    """Exact tally of all labeled graphs on ``v`` vertices by chromatic number."""

    v: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json_dict(self) -> dict:
        return {
            "v": self.v,
            "counts": {str(chi): str(c) for chi, c in sorted(self.counts.items())},
        }


def chromatic_census(
    v: int,
    jobs: int = 1,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
) -> ChiCensus:
    """Tally every one of the 2^C(v, 2) labeled graphs by chromatic number."""
    if v < 0:
        raise DomainError(f"negative vertex count: {v}")
    if v == 0:
        return ChiCensus(v=0, counts={0: 1})
    bits = comb(v, 2)
    _check_budget(bits, budget_bits, override)
    tally = _sharded_tally(
        _census_worker,
        lambda lo, hi: (v, lo, hi),
        total=1 << bits,
        size=v + 1,
        jobs=jobs,
    )
    if sum(tally) != 1 << bits:
        raise InternalInconsistencyError(
            f"census at v={v} tallied {sum(tally)} graphs, expected {1 << bits}"
        )
    return ChiCensus(v=v, counts={chi: tally[chi] for chi in range(1, v + 1)})


def subgraph_chi_histogram(
    p: Partition,
    jobs: int = 1,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
) -> dict[int, int]:
    """Chromatic numbers of all spanning subgraphs of ``p``'s host graph.

    Keys run 1 .. p.n; a subgraph of an n-partite graph can never need more
    than n colors, and the values sum to ``2 ** exponent(p)``.
    """
    e = exponent(p).exponent
    _check_budget(e, budget_bits, override)
    tally = _sharded_tally(
        _partition_worker,
        lambda lo, hi: (p.parts, lo, hi),
        total=1 << e,
        size=p.v + 1,
        jobs=jobs,
    )
    if any(tally[p.n + 1 :]):
        raise InternalInconsistencyError(
            f"subgraph of {p} tallied with more than {p.n} colors: {tally}"
        )
    return {chi: tally[chi] for chi in range(1, p.n + 1)}


def count_chi_exact(
    p: Partition,
    chi: int,
    jobs: int = 1,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
) -> int:
    """Count spanning subgraphs of ``p``'s host whose chromatic number is exactly ``chi``."""
    if chi < 0:
        raise DomainError(f"negative chromatic number: {chi}")
    hist = subgraph_chi_histogram(p, jobs=jobs, budget_bits=budget_bits, override=override)
    return hist.get(chi, 0)


def chi_count(
    v: int,
    n: int,
    interpretation: Interpretation = PARTITION_SUBGRAPH,
    jobs: int = 1,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
) -> tuple[int, Optional[Partition]]:
    """Number of graphs on ``v`` vertices with chromatic number exactly ``n``.

    Under the partition-subgraph interpretation this is the maximum over all
    partitions of ``v`` into ``n`` classes of the exact-chi subgraph count,
    returned with the first maximizing partition in enumeration order.  Under
    the census interpretation it is the census total, with no witness.
    """
    if v < 1 or n < 1 or n > v:
        raise DomainError(f"need 1 <= n <= v, got v={v}, n={n}")
    if interpretation == CENSUS:
        census = chromatic_census(v, jobs=jobs, budget_bits=budget_bits, override=override)
        return census.counts.get(n, 0), None
    if interpretation != PARTITION_SUBGRAPH:
        raise DomainError(f"unknown interpretation: {interpretation!r}")
    best: Optional[tuple[int, Partition]] = None
    for p in enumerate_partitions(v, n):
        hist = subgraph_chi_histogram(p, jobs=jobs, budget_bits=budget_bits, override=override)
        count = hist.get(n, 0)
        if best is None or count > best[0]:
            best = (count, p)
    assert best is not None
    return best[0], best[1]


@dataclass(frozen=True)
class ConjectureVerdict:
    """Computed truth value of one conjecture instance.

    A failed conjecture is a finding, not an error; both sides of the
    (in)equality are carried exactly.
    """

    which: int
    v: int
    n: int
    interpretation: Optional[str]
    lhs: int
    rhs: int
    holds: bool
    witness_partition: Optional[Partition]

    def to_json_dict(self) -> dict:
        return {
            "conjecture": self.which,
            "v": self.v,
            "n": self.n,
            "interpretation": self.interpretation,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "witness": None if self.witness_partition is None else str(self.witness_partition),
        }


def evaluate_conjecture(
    which: int,
    v: int,
    n: int,
    interpretation: Interpretation = PARTITION_SUBGRAPH,
    jobs: int = 1,
    budget_bits: int = ENUMERATION_BUDGET_BITS,
    override: bool = False,
    chi_value: Optional[tuple[int, Optional[Partition]]] = None,
) -> ConjectureVerdict:
    """Evaluate conjecture 1, 2 or 3 at (v, n) with exact arithmetic.

    1: exact-chi count equals the difference of best-partition counts at n
       and n-1.
    2: best-partition count at n is at least twice the one at n-1.
    3: exact-chi count is at least the best-partition count at n-1.

    Conjecture 2 involves no exact-chi counting, so it carries no
    interpretation and needs no enumeration.  Callers evaluating several
    conjectures on the same instance may pass a precomputed
    :func:`chi_count` result as ``chi_value`` to avoid re-enumerating.
    """
    if which not in (1, 2, 3):
        raise DomainError(f"conjecture must be 1, 2 or 3: {which}")
    if not 2 <= n <= v:
        raise DomainError(f"conjectures compare against n-1, need 2 <= n <= v, got v={v}, n={n}")
    count_n = max_partition(v, n)[1].exact()
    count_n_minus_1 = max_partition(v, n - 1)[1].exact()
    if which == 2:
        return ConjectureVerdict(
            which=2,
            v=v,
            n=n,
            interpretation=None,
            lhs=count_n,
            rhs=2 * count_n_minus_1,
            holds=count_n >= 2 * count_n_minus_1,
            witness_partition=None,
        )
    exact, witness = chi_value if chi_value is not None else chi_count(
        v, n, interpretation, jobs=jobs, budget_bits=budget_bits, override=override
    )
    if which == 1:
        rhs = count_n - count_n_minus_1
        return ConjectureVerdict(
            which=1,
            v=v,
            n=n,
            interpretation=interpretation,
            lhs=exact,
            rhs=rhs,
            holds=exact == rhs,
            witness_partition=witness,
        )
    return ConjectureVerdict(
        which=3,
        v=v,
        n=n,
        interpretation=interpretation,
        lhs=exact,
        rhs=count_n_minus_1,
        holds=exact >= count_n_minus_1,
        witness_partition=witness,
    )
