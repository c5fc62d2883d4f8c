"""Minimum (strict) consistent subsets of vertex-colored graphs."""
from .graph import (
    BlockDecomposition, ColoredGraph, DistanceOracle, GraphClass, InstanceError,
    ParseError, SolveResult, ValidationError, blocks, classify, distances_from,
    load_graph, nearest_in_set, read_graph, recognize,
)
from .consistency import VerifyReport, verify_cs, verify_css, verify_scs
from .oracle import (
    CapExceeded, brute_dominating, brute_max2sat, brute_mcs, brute_mcss, brute_mscs,
)

from .approx import two_approx_mscs_tree
from .fast import (
    CombTables, OverlayGraph, path_valid_pair, solve_mscs_comb, solve_mscs_cycle,
    solve_mscs_path, solve_mscs_spider,
)
from .generators import generate
from .reductions import (
    ReductionInstance, certify_reduction, dominating_to_mcs, dominating_to_mscs,
    forward_witness, max2sat_to_tree_mcs,
)
from .tree_dp import INF, TreeSolver, solve_mscs_tree, solve_mscs_tree_weighted

__version__ = "0.1.0"
