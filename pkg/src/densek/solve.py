"""One entry point over every solver, with applicability checks up front."""

from __future__ import annotations

import enum
from collections.abc import Sequence

from .approx import approx_densest
from .block_dp import solve_block_weighted
from .blocks import find_min_block_deletion_set, is_block_graph
from .deletion import block_solver, cw_solver, solve_with_deletion_set
from .errors import (
    BudgetExceeded,
    CompositionSpaceTooLarge,
    InvalidDeletionSet,
    NotFound,
    SolverNotApplicable,
    StrategyNotApplicable,
)
from .expression import Expr
from .graph import Graph, check_weights
from .nd import solve_nd
from .oracle import Objective, SolveResult, brute_force_solve, check_k, verify_result
from .params import min_cograph_deletion_set

AUTO_BUDGET = 12


class Strategy(enum.Enum):
    ORACLE = "oracle"
    BLOCK_DP = "block-dp"
    DELETION_BLOCK = "deletion-block"
    DELETION_CW = "deletion-cw"
    ND_ENUM = "nd-enum"
    APPROX_SPLIT = "approx-split"

    @classmethod
    def parse(cls, text: str | Strategy) -> Strategy:
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower().replace("_", "-"))
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise StrategyNotApplicable(f"unknown strategy {text!r}; choose from {names}") from None


def _auto_deletion_set(g: Graph, cw: bool) -> list[int]:
    try:
        if cw:
            return list(min_cograph_deletion_set(g, AUTO_BUDGET))
        return list(find_min_block_deletion_set(g, min(AUTO_BUDGET, g.n)))
    except (BudgetExceeded, NotFound) as exc:
        raise StrategyNotApplicable(f"no deletion set given and none of size <= {AUTO_BUDGET} found") from exc


def solve(g: Graph, k: int, obj: Objective | str = Objective.DENSEST,
          strategy: Strategy | str = Strategy.ORACLE, *,
          deletion_set: Sequence[int] | None = None,
          expression: Expr | None = None,
          weights: Sequence[int] | None = None,
          threads: int | None = None) -> SolveResult:
    """Solve with the named strategy; the result is re-verified before return.

    Without ``deletion_set`` the deletion strategies search for a minimum one
    (size at most ``AUTO_BUDGET``).
    """
    obj = Objective.parse(obj)
    strategy = Strategy.parse(strategy)
    w = check_weights(weights, g.n)
    check_k(k, g.n)
    weighted = any(w)

    if strategy is Strategy.ORACLE:
        res = brute_force_solve(g, w, k, obj)
    elif strategy is Strategy.BLOCK_DP:
        if not is_block_graph(g):
            raise StrategyNotApplicable("graph is not a block graph (some block is not a clique)")
        res = solve_block_weighted(g, w, k, obj)
    elif strategy in (Strategy.DELETION_BLOCK, Strategy.DELETION_CW):
        cw = strategy is Strategy.DELETION_CW
        d = list(deletion_set) if deletion_set is not None else _auto_deletion_set(g, cw)
        solver = cw_solver(expression) if cw else block_solver()
        try:
            res = solve_with_deletion_set(g, d, k, obj, solver, w, threads)
        except InvalidDeletionSet as exc:
            what = "a cograph or the given expression's graph" if cw else "a block graph"
            raise StrategyNotApplicable(f"graph minus the deletion set is not {what}") from exc
    elif strategy is Strategy.ND_ENUM:
        if weighted:
            raise StrategyNotApplicable("nd-enum does not take vertex weights")
        try:
            res = solve_nd(g, k, obj)
        except CompositionSpaceTooLarge as exc:
            raise StrategyNotApplicable(str(exc)) from exc
    else:
        if obj is not Objective.DENSEST or weighted:
            raise StrategyNotApplicable("approx-split handles unweighted Densest only")
        d = list(deletion_set) if deletion_set is not None else _auto_deletion_set(g, False)
        try:
            res = approx_densest(g, d, k, block_solver()).result
        except SolverNotApplicable as exc:
            raise StrategyNotApplicable(str(exc)) from exc
    return verify_result(g, w, k, res)
