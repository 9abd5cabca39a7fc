"""graphtwins: constructing twins in graphs.

Twins are two disjoint vertex sets of equal size inducing the same number of
edges. The package provides exhaustive ground truth for small graphs,
low-discrepancy constructions for general graphs, perfect-twin constructions
for graphs with suitable degree sequences, a pipeline for sparse graphs and a
complete algorithm for forests.
"""

from .criteria import (
    CriterionReport,
    PerfectTwinsResult,
    consecutive_pairs,
    criterion_holds,
    detect_criteria,
    perfect_twins,
    perfect_twins_consecutive,
    perfect_twins_consecutive_pairs,
    perfect_twins_even_classes,
    perfect_twins_odd_classes,
)
from .discrepancy import (
    AlmostTwinsTrace,
    BlockPair,
    Branch,
    almost_twins,
    almost_twins_extraction,
    almost_twins_local_search,
    combine_blocks,
    equal_sum_pair,
    extraction_bound,
    local_search_bound,
)
from .errors import (
    ConstructionError,
    GraphParseError,
    InternalInvariantError,
    OracleCapError,
    PreconditionError,
)
from .forest import (
    AssemblyTrace,
    GoodTwinColoring,
    MoveRecord,
    forest_bound,
    forest_twins,
    good_twins,
    is_good,
    replay_good_twins,
    xy_move,
)
from .generators import (
    Family,
    GenSpec,
    SplitMix64,
    derive_seed,
    gen_criterion_graph,
    gen_forest,
    gen_gnp,
    gen_odd_cliques,
    gen_star,
    gen_tree,
    grid_graph,
)
from .graph import (
    DegreeProfile,
    Graph,
    TwinCheck,
    TwinPair,
    check_twins,
    cross_edge_count,
    degree_profile,
    degree_sum,
    format_graph,
    induced_edge_count,
    parse_graph,
)
from .oracle import OracleResult, balanced_halving, exact_t, min_disc_at_half
from .sparse import SparseTrace, sparse_twins

__version__ = "0.1.0"

__all__ = [
    "almost_twins",
    "almost_twins_extraction",
    "almost_twins_local_search",
    "AlmostTwinsTrace",
    "AssemblyTrace",
    "balanced_halving",
    "BlockPair",
    "Branch",
    "check_twins",
    "combine_blocks",
    "consecutive_pairs",
    "ConstructionError",
    "criterion_holds",
    "CriterionReport",
    "cross_edge_count",
    "degree_profile",
    "degree_sum",
    "DegreeProfile",
    "derive_seed",
    "detect_criteria",
    "equal_sum_pair",
    "exact_t",
    "extraction_bound",
    "Family",
    "forest_bound",
    "forest_twins",
    "format_graph",
    "gen_criterion_graph",
    "gen_forest",
    "gen_gnp",
    "gen_odd_cliques",
    "gen_star",
    "gen_tree",
    "GenSpec",
    "good_twins",
    "GoodTwinColoring",
    "Graph",
    "GraphParseError",
    "grid_graph",
    "induced_edge_count",
    "InternalInvariantError",
    "is_good",
    "local_search_bound",
    "min_disc_at_half",
    "MoveRecord",
    "OracleCapError",
    "OracleResult",
    "parse_graph",
    "perfect_twins",
    "perfect_twins_consecutive",
    "perfect_twins_consecutive_pairs",
    "perfect_twins_even_classes",
    "perfect_twins_odd_classes",
    "PerfectTwinsResult",
    "PreconditionError",
    "replay_good_twins",
    "sparse_twins",
    "SparseTrace",
    "SplitMix64",
    "TwinCheck",
    "TwinPair",
    "xy_move",
]
