"""Exact and approximate Densest/Sparsest k-Subgraph on structured graphs."""

from .approx import ApproxResult, approx_densest
from .block_dp import BlockDP, knapsack_merge, solve_block_weighted
from .blocks import build_block_cut_tree, find_min_block_deletion_set, is_block_graph
from .cw_dp import cw_profile, solve_cw_weighted
from .deletion import (
    WeightedSolver,
    block_solver,
    cw_solver,
    max_k_vertex_cover,
    oracle_solver,
    solve_with_deletion_set,
)
from .errors import DksError
from .expression import cograph_to_expression, emit_expression, parse_expression, realize
from .generators import InstanceSpec, generate
from .graph import Graph, complement, parse_instance
from .nd import compute_nd_partition, solve_nd
from .oracle import Objective, SolveResult, brute_force_solve
from .params import check_parameter_inequalities, parameter_report
from .solve import Strategy, solve

__version__ = "0.1.0"

__all__ = [
    "ApproxResult", "BlockDP", "DksError", "Graph", "InstanceSpec", "Objective", "SolveResult",
    "Strategy", "WeightedSolver", "approx_densest", "block_solver", "brute_force_solve",
    "build_block_cut_tree", "check_parameter_inequalities", "cograph_to_expression", "complement",
    "compute_nd_partition", "cw_profile", "cw_solver", "emit_expression", "find_min_block_deletion_set",
    "generate", "is_block_graph", "knapsack_merge", "max_k_vertex_cover", "oracle_solver",
    "parameter_report", "parse_expression", "parse_instance", "realize", "solve",
    "solve_block_weighted", "solve_cw_weighted", "solve_nd", "solve_with_deletion_set",
]
