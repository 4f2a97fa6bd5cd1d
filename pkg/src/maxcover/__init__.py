"""Solvers, instance generators, and guarantee curves for budgeted set coverage."""

from .core import (
    ApprovalElection,
    FrequencyProfile,
    Graph,
    Instance,
    ParseError,
    Solution,
    SolverConfig,
    coverage,
    coverage_inclusion_exclusion,
    document_kind,
    election_to_maxcover,
    frequency_profile,
    pad_frequencies,
    parse_election,
    parse_graph,
    parse_instance,
    serialize_instance,
    set_masks,
)
from .exact import DEFAULT_CEILING, EnumerationCeilingError, ExactResult, brute_force
from .fpt import PoolPlan, fpt_approx, pool_size
from .generators import (
    TightFptSpec,
    TightGreedySpec,
    gen_random,
    gen_tight_fpt,
    gen_tight_greedy,
    graph_to_maxvertexcover,
    rank_colex,
    unrank_colex,
)
from .greedy import GreedyTrace, greedy_cover, greedy_guarantee
from .hybrid import (
    HybridReport,
    exact_then_greedy,
    greedy_branch_applies,
    greedy_then_exact,
    hybrid_ratio,
    ptas_dispatch,
)
from .minnoncovered import RandomizedRun, randomized_min_noncovered, repetition_count

__version__ = "0.1.0"

__all__ = [
    "ApprovalElection",
    "DEFAULT_CEILING",
    "EnumerationCeilingError",
    "ExactResult",
    "FrequencyProfile",
    "Graph",
    "GreedyTrace",
    "HybridReport",
    "Instance",
    "ParseError",
    "PoolPlan",
    "RandomizedRun",
    "Solution",
    "SolverConfig",
    "TightFptSpec",
    "TightGreedySpec",
    "brute_force",
    "coverage",
    "coverage_inclusion_exclusion",
    "document_kind",
    "election_to_maxcover",
    "exact_then_greedy",
    "fpt_approx",
    "frequency_profile",
    "gen_random",
    "gen_tight_fpt",
    "gen_tight_greedy",
    "graph_to_maxvertexcover",
    "greedy_branch_applies",
    "greedy_cover",
    "greedy_guarantee",
    "greedy_then_exact",
    "hybrid_ratio",
    "pad_frequencies",
    "parse_election",
    "parse_graph",
    "parse_instance",
    "pool_size",
    "ptas_dispatch",
    "randomized_min_noncovered",
    "rank_colex",
    "repetition_count",
    "serialize_instance",
    "set_masks",
    "unrank_colex",
]
