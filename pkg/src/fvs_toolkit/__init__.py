"""Randomized divide-and-conquer solvers for feedback vertex set problems.

The package covers weighted feedback vertex set in digraphs with bounded
independence number, weighted subset feedback vertex set in tournaments,
local-ratio baselines, brute-force oracles, seeded generators, a text
instance format, and a benchmark harness.
"""
from .bench import (
    BenchConfig,
    BenchConfigError,
    ExperimentRow,
    InvalidSolutionError,
    format_csv,
    parse_bench_config,
    run_bench,
)
from .config import AlgoConfig, desk_profile, paper_profile
from .exact import exact_fvs, exact_sfvs, exact_vertex_cover
from .fvs import eliminate_cycles_through, find_fvs, local_ratio_fvs_baseline
from .generators import (
    GenSpec,
    gen_alpha_bounded,
    gen_instance,
    gen_terminals,
    gen_tournament,
    gen_weights,
)
from .graphio import GraphFormatError, dump_graph, load_graph, parse_graph, save_graph
from .graphs import (
    Cycle,
    ExactLimitError,
    ReachPartition,
    WeightedDigraph,
    high_inout_vertex,
    hl_degree_ordering,
    independence_number_exact,
    is_acyclic,
    reach_partition,
    s_acyclic,
    shortest_cycle_in_induced,
    shortest_cycle_through,
    triangle_in_sets,
    triangle_through,
)
from .local_ratio import update1, update2, update3, update4, vertex_cover_2approx
from .rng import SplitMix64, derive_seed
from .sfvs import (
    SfvsInstance,
    base_case_extend,
    eliminate_triangles_through,
    find_sfvs,
    local_ratio_sfvs_baseline,
)
from .solution import Solution

__version__ = "0.1.0"

__all__ = [
    "AlgoConfig",
    "BenchConfig",
    "BenchConfigError",
    "Cycle",
    "ExactLimitError",
    "ExperimentRow",
    "GenSpec",
    "GraphFormatError",
    "InvalidSolutionError",
    "ReachPartition",
    "SfvsInstance",
    "Solution",
    "SplitMix64",
    "WeightedDigraph",
    "base_case_extend",
    "derive_seed",
    "desk_profile",
    "dump_graph",
    "eliminate_cycles_through",
    "eliminate_triangles_through",
    "exact_fvs",
    "exact_sfvs",
    "exact_vertex_cover",
    "find_fvs",
    "find_sfvs",
    "format_csv",
    "gen_alpha_bounded",
    "gen_instance",
    "gen_terminals",
    "gen_tournament",
    "gen_weights",
    "high_inout_vertex",
    "hl_degree_ordering",
    "independence_number_exact",
    "is_acyclic",
    "load_graph",
    "local_ratio_fvs_baseline",
    "local_ratio_sfvs_baseline",
    "paper_profile",
    "parse_bench_config",
    "parse_graph",
    "reach_partition",
    "run_bench",
    "s_acyclic",
    "save_graph",
    "shortest_cycle_in_induced",
    "shortest_cycle_through",
    "triangle_in_sets",
    "triangle_through",
    "update1",
    "update2",
    "update3",
    "update4",
    "vertex_cover_2approx",
]
