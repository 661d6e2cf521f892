"""Exhaustive-enumeration oracle tests.

The census is checked against a second, fully independent chromatic-number
computation that tries every color assignment, so the two never share
search logic.
"""

from __future__ import annotations

from itertools import product
from math import comb

import pytest

from chromacount import (
    BudgetExceededError,
    DomainError,
    Graph,
    Partition,
    chi_count,
    chromatic_census,
    complete_multipartite,
    count_chi_exact,
    count_partition_subgraphs,
    enumerate_partitions,
    evaluate_conjecture,
    exponent,
    iter_partition_subgraphs,
    subgraph_chi_histogram,
)


def assignment_chromatic_number(g: Graph) -> int:
    """Independent oracle: smallest k admitting any proper assignment."""
    if g.vertex_count == 0:
        return 0
    edges = list(g.edges())
    for k in range(1, g.vertex_count + 1):
        for colors in product(range(k), repeat=g.vertex_count):
            if all(colors[i] != colors[j] for i, j in edges):
                return k
    raise AssertionError("every graph is v-colorable")


def assignment_census(v: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for bits in range(1 << comb(v, 2)):
        chi = assignment_chromatic_number(Graph(v, bits))
        counts[chi] = counts.get(chi, 0) + 1
    return counts


def all_partitions(max_v):
    for v in range(1, max_v + 1):
        for n in range(1, v + 1):
            yield from enumerate_partitions(v, n)


def test_count_partition_subgraphs_small_cases():
    assert count_partition_subgraphs(Partition((1, 1))) == 2
    assert count_partition_subgraphs(Partition((2, 2))) == 16
    assert count_partition_subgraphs(Partition((1, 1, 1))) == 8
    assert count_partition_subgraphs(Partition((3,))) == 1


def test_enumerated_subgraphs_are_distinct_spanning_subgraphs():
    for p in all_partitions(5):
        host = complete_multipartite(p)
        masks = list(iter_partition_subgraphs(p))
        assert len(set(masks)) == len(masks) == 1 << exponent(p).exponent
        assert all(bits & ~host.edge_bits == 0 for bits in masks)


def test_count_matches_closed_form_up_to_six_vertices():
    for p in all_partitions(6):
        assert count_partition_subgraphs(p) == 2 ** exponent(p).exponent


def test_count_budget_guard():
    p = Partition((4, 4))  # exponent 16
    with pytest.raises(BudgetExceededError) as err:
        count_partition_subgraphs(p, budget_bits=10)
    assert err.value.required_bits == 16
    assert err.value.allowed_bits == 10
    assert count_partition_subgraphs(p, budget_bits=10, override=True) == 1 << 16


def test_count_chi_exact_small_cases():
    assert count_chi_exact(Partition((1, 1)), 2) == 1
    assert count_chi_exact(Partition((2, 1)), 2) == 3
    assert count_chi_exact(Partition((2, 1, 1)), 3) == 7
    with pytest.raises(DomainError):
        count_chi_exact(Partition((2, 1)), -1)


def test_chi_histogram_sums_and_bridge():
    for p in all_partitions(5):
        hist = subgraph_chi_histogram(p)
        assert set(hist) == set(range(1, p.n + 1))
        assert sum(hist.values()) == 2 ** exponent(p).exponent
        # a spanning subgraph of an n-partite host never needs more colors
        for chi in range(p.n + 1, p.v + 2):
            assert count_chi_exact(p, chi) == 0


def test_chi_histogram_against_assignment_oracle():
    for p in all_partitions(4):
        expected: dict[int, int] = {}
        for bits in iter_partition_subgraphs(p):
            chi = assignment_chromatic_number(Graph(p.v, bits))
            expected[chi] = expected.get(chi, 0) + 1
        hist = subgraph_chi_histogram(p)
        assert {k: v for k, v in hist.items() if v} == expected


def test_census_trivial_sizes():
    assert chromatic_census(0).counts == {0: 1}
    assert chromatic_census(1).counts == {1: 1}
    assert chromatic_census(2).counts == {1: 1, 2: 1}


def test_census_fixtures():
    assert chromatic_census(3).counts == {1: 1, 2: 6, 3: 1}
    assert chromatic_census(4).counts == {1: 1, 2: 40, 3: 22, 4: 1}


def test_census_against_assignment_oracle():
    for v in range(1, 5):
        assert chromatic_census(v).counts == assignment_census(v)


def test_census_structure_up_to_five():
    for v in range(1, 6):
        census = chromatic_census(v)
        assert census.total() == 1 << comb(v, 2)
        assert census.counts[1] == 1
        assert census.counts[v] == 1


def test_census_budget_guard():
    with pytest.raises(BudgetExceededError):
        chromatic_census(9)  # 36 pair bits > default 28
    with pytest.raises(DomainError):
        chromatic_census(-1)


def test_census_json_uses_decimal_strings():
    assert chromatic_census(3).to_json_dict() == {
        "v": 3,
        "counts": {"1": "1", "2": "6", "3": "1"},
    }


def test_sharded_runs_match_single_worker():
    single = chromatic_census(6, jobs=1)
    sharded = chromatic_census(6, jobs=2)
    assert single == sharded

    p = Partition((3, 2, 2))  # 16 exponent bits, enough to engage the pool
    assert subgraph_chi_histogram(p, jobs=2) == subgraph_chi_histogram(p, jobs=1)


def test_chi_count_small_cases():
    assert chi_count(3, 2) == (3, Partition((2, 1)))
    assert chi_count(2, 2) == (1, Partition((1, 1)))
    assert chi_count(2, 2, "census") == (1, None)
    assert chi_count(4, 2, "census") == (40, None)
    with pytest.raises(DomainError):
        chi_count(3, 4)
    with pytest.raises(DomainError):
        chi_count(3, 2, "majority-vote")


def test_conjecture_one_holds_then_fails():
    held = evaluate_conjecture(1, 3, 2)
    assert (held.lhs, held.rhs, held.holds) == (3, 3, True)
    assert held.witness_partition == Partition((2, 1))

    violated = evaluate_conjecture(1, 4, 3)
    assert (violated.lhs, violated.rhs, violated.holds) == (7, 16, False)
    assert violated.witness_partition == Partition((2, 1, 1))


def test_conjecture_two_equality_case():
    verdict = evaluate_conjecture(2, 4, 3)
    assert (verdict.lhs, verdict.rhs, verdict.holds) == (32, 32, True)
    assert verdict.interpretation is None
    assert verdict.witness_partition is None


def test_conjecture_three():
    verdict = evaluate_conjecture(3, 3, 2)
    assert (verdict.lhs, verdict.rhs, verdict.holds) == (3, 1, True)


def test_conjecture_census_interpretation_runs():
    verdict = evaluate_conjecture(1, 4, 3, "census")
    assert verdict.interpretation == "census"
    assert verdict.lhs == 22  # census count at chi = 3
    assert verdict.witness_partition is None


def test_conjecture_accepts_precomputed_chi_value():
    direct = evaluate_conjecture(1, 4, 3)
    reused = evaluate_conjecture(
        1, 4, 3, chi_value=(direct.lhs, direct.witness_partition)
    )
    assert direct == reused


def test_conjecture_domain_errors():
    with pytest.raises(DomainError):
        evaluate_conjecture(4, 4, 3)
    with pytest.raises(DomainError):
        evaluate_conjecture(1, 4, 1)  # needs n >= 2
    with pytest.raises(DomainError):
        evaluate_conjecture(1, 3, 4)


def test_verdict_json_shape():
    row = evaluate_conjecture(1, 4, 3).to_json_dict()
    assert row == {
        "conjecture": 1,
        "v": 4,
        "n": 3,
        "interpretation": "partition-subgraph",
        "lhs": "7",
        "rhs": "16",
        "holds": False,
        "witness": "2,1,1",
    }
