"""Exact counting and verification of labeled graphs compatible with color partitions."""

from .bounds import (
    BoundReport,
    TermSequence,
    block_gaps,
    check_upper_bound,
    expand_term_sequences,
    log2_gap,
    total_log2,
    verify_term_identities,
)
from .errors import (
    BudgetExceededError,
    ColoringCapError,
    DomainError,
    InternalInconsistencyError,
)
from .graphs import (
    ColorAssignment,
    Graph,
    MAX_COLORING_VERTICES,
    chromatic_number,
    chromatic_number_from_masks,
    complete_multipartite,
    index_pair,
    is_k_colorable,
    pair_count,
    pair_index,
)
from .oracle import (
    CENSUS,
    ENUMERATION_BUDGET_BITS,
    PARTITION_SUBGRAPH,
    ChiCensus,
    ConjectureVerdict,
    chi_count,
    chromatic_census,
    count_chi_exact,
    count_partition_subgraphs,
    evaluate_conjecture,
    iter_partition_subgraphs,
    subgraph_chi_histogram,
)
from .partitions import (
    Log2Count,
    Partition,
    balanced_partition,
    class_pair_sum,
    enumerate_partitions,
    exponent,
    exponent_closed_form,
    max_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetExceededError",
    "CENSUS",
    "ChiCensus",
    "ColorAssignment",
    "ColoringCapError",
    "ConjectureVerdict",
    "DomainError",
    "ENUMERATION_BUDGET_BITS",
    "Graph",
    "InternalInconsistencyError",
    "Log2Count",
    "MAX_COLORING_VERTICES",
    "PARTITION_SUBGRAPH",
    "Partition",
    "TermSequence",
    "balanced_partition",
    "block_gaps",
    "check_upper_bound",
    "chi_count",
    "chromatic_census",
    "chromatic_number",
    "chromatic_number_from_masks",
    "class_pair_sum",
    "complete_multipartite",
    "count_chi_exact",
    "count_partition_subgraphs",
    "enumerate_partitions",
    "evaluate_conjecture",
    "expand_term_sequences",
    "exponent",
    "exponent_closed_form",
    "index_pair",
    "is_k_colorable",
    "iter_partition_subgraphs",
    "log2_gap",
    "max_partition",
    "pair_count",
    "pair_index",
    "subgraph_chi_histogram",
    "total_log2",
    "verify_term_identities",
]
