"""Exact toolkit for maximum-contrast greyscales on graphs.

Vertices get rational tones in [0, 1] (with both extremes used somewhere);
edges inherit the absolute tone difference of their endpoints; the contrast
vector is the ascending sort of all edge tones and is compared
lexicographically.  The package computes contrast vectors exactly, the
maximal minimum-step-enchained value sets F_k that bound the image of every
optimum, exact maximum-contrast greyscales by pruned search over F_k, and
solutions to the {0,1}-restricted variant on bipartite graphs and trees.
"""

from .enchained import (
    EnchainedCheck,
    EnchainedSet,
    StepChain,
    is_enchained_set,
    make_chain,
    maximal_enchained_set,
    s_value,
    uniform_ladder,
)
from .errors import (
    BudgetExceededError,
    DisconnectedError,
    DomainError,
    DuplicateEdgeError,
    FixedToneError,
    GraphFormatError,
    GreycontrastError,
    GreyscaleError,
    ImproperColouringError,
    RationalError,
    SelfLoopError,
    VertexRangeError,
)
from .foundation import (
    Graph,
    TwoColouring,
    chromatic_number,
    format_rational,
    is_bipartite,
    parse_graph,
    parse_rational,
    rat_normalize,
    two_colourings,
    write_graph,
)
from .greyscale import (
    ContrastVector,
    GradationVector,
    Greyscale,
    IncrementalPath,
    VerificationReport,
    colouring_from_greyscale,
    complementary,
    contrast_vector,
    find_incremental_paths,
    gradation_vector,
    lex_compare,
    lightest_tone,
    parse_greyscale,
    verify_max_conditions,
    write_greyscale,
)
from .rmacg import (
    IncompleteGreyscale,
    RestrictedResult,
    VcPartition,
    complete_bipartite_graph,
    constructive_f_phi,
    is_complete_bipartite,
    oracle_restricted,
    parse_fixed_tones,
    partition_vc,
    singleton_bound_greyscale,
    solve_complete_bipartite,
    solve_restricted,
    solve_single_opposite,
    solve_star_subdivision,
    solve_tree_three,
    star_subdivision_legs,
    write_fixed_tones,
)
from .solver import (
    FIVE_GRID,
    MaxContrastResult,
    SearchConfig,
    oracle_max_contrast,
    solve_max_contrast,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ContrastVector",
    "DisconnectedError",
    "DomainError",
    "DuplicateEdgeError",
    "EnchainedCheck",
    "EnchainedSet",
    "FIVE_GRID",
    "FixedToneError",
    "GradationVector",
    "Graph",
    "GraphFormatError",
    "GreycontrastError",
    "Greyscale",
    "GreyscaleError",
    "ImproperColouringError",
    "IncompleteGreyscale",
    "IncrementalPath",
    "MaxContrastResult",
    "RationalError",
    "RestrictedResult",
    "SearchConfig",
    "SelfLoopError",
    "StepChain",
    "TwoColouring",
    "VcPartition",
    "VerificationReport",
    "VertexRangeError",
    "chromatic_number",
    "colouring_from_greyscale",
    "complementary",
    "complete_bipartite_graph",
    "constructive_f_phi",
    "contrast_vector",
    "find_incremental_paths",
    "format_rational",
    "gradation_vector",
    "is_bipartite",
    "is_complete_bipartite",
    "is_enchained_set",
    "lex_compare",
    "lightest_tone",
    "make_chain",
    "maximal_enchained_set",
    "oracle_max_contrast",
    "oracle_restricted",
    "parse_fixed_tones",
    "parse_graph",
    "parse_greyscale",
    "parse_rational",
    "partition_vc",
    "rat_normalize",
    "s_value",
    "singleton_bound_greyscale",
    "solve_complete_bipartite",
    "solve_max_contrast",
    "solve_restricted",
    "solve_single_opposite",
    "solve_star_subdivision",
    "solve_tree_three",
    "star_subdivision_legs",
    "two_colourings",
    "uniform_ladder",
    "verify_max_conditions",
    "write_fixed_tones",
    "write_graph",
    "write_greyscale",
]
