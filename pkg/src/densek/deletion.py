"""Solving k-Subgraph problems through a deletion set.

For a set ``D`` whose removal leaves a graph some weighted solver handles,
every ``S`` subset of ``D`` is tried as the part of the solution inside
``D``.  Each remaining vertex then weighs as many edges as it would add to
``S``, and the weighted solver picks the other ``k - |S|`` vertices.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from .block_dp import BlockDP
from .blocks import is_block_graph
from .cw_dp import cw_profile, solve_cw_weighted
from .errors import (
    DeletionSetTooLarge,
    InvalidDeletionSet,
    SolverNotApplicable,
    VertexOutOfRange,
)
from .expression import Expr, cograph_to_expression, is_cograph, realize
from .graph import Graph, check_weights, edge_count_within, remove_vertices
from .oracle import Objective, SolveResult, brute_force_solve, check_k, verify_result

MAX_DELETION_SET = 30
# Subsets per batched DP call.  Kept small so per-call overhead scales with
# the subset count instead of adding a fixed cost that hides the 2^|D| growth.
CHUNK = 64


class BoundSolver(Protocol):
    def solve(self, w: Sequence[int], k: int, obj: Objective) -> SolveResult: ...

    def values(self, weights: np.ndarray, ks: np.ndarray, obj: Objective) -> np.ndarray:
        """Optimal value of row ``b`` of ``weights`` at size ``ks[b]``."""
        ...


@dataclass(frozen=True)
class WeightedSolver:
    """A weighted k-subgraph solver plus the graphs it accepts.

    ``bind`` prepares the solver for one graph (e.g. builds its block-cut
    tree) so many weight vectors can be solved against it.
    """

    name: str
    accepts: Callable[[Graph], bool]
    bind: Callable[[Graph], BoundSolver]

    def __call__(self, g: Graph, w: Sequence[int] | None, k: int,
                 obj: Objective = Objective.DENSEST) -> SolveResult:
        if not self.accepts(g):
            raise SolverNotApplicable(f"{self.name} does not accept this graph")
        return self.bind(g).solve(check_weights(w, g.n), k, Objective.parse(obj))


class _BlockBound:
    def __init__(self, g: Graph):
        self.dp = BlockDP(g)

    def solve(self, w, k, obj):
        return self.dp.solve(w, k, obj)

    def values(self, weights, ks, obj):
        kmax = int(ks.max()) if len(ks) else 0
        prof = self.dp.profile(weights, kmax, obj)
        return prof[np.arange(len(ks)), ks]


class _CwBound:
    def __init__(self, g: Graph, expr: Expr, mapping: Sequence[int]):
        # mapping[i] = graph vertex created by the i-th introduce node
        self.g = g
        self.expr = expr
        self.mapping = list(mapping)

    def _expr_weights(self, w) -> list[int]:
        return [int(w[v]) for v in self.mapping]

    def solve(self, w, k, obj):
        res = solve_cw_weighted(self.expr, self._expr_weights(w), k, obj)
        witness = tuple(sorted(self.mapping[i] for i in res.witness))
        return verify_result(self.g, w, k, SolveResult(res.value, witness, res.strategy, res.stats))

    def values(self, weights, ks, obj):
        out = np.empty(len(ks))
        for b, (row, k) in enumerate(zip(weights, ks)):
            out[b] = cw_profile(self.expr, self._expr_weights(row), int(k), obj)[int(k)]
        return out


class _OracleBound:
    def __init__(self, g: Graph):
        self.g = g

    def solve(self, w, k, obj):
        return brute_force_solve(self.g, list(w), k, obj)

    def values(self, weights, ks, obj):
        return np.array([brute_force_solve(self.g, [int(x) for x in row], int(k), obj).value
                         for row, k in zip(weights, ks)], dtype=float)


def block_solver() -> WeightedSolver:
    return WeightedSolver("block-dp", is_block_graph, _BlockBound)


def cw_solver(expression: Expr | None = None) -> WeightedSolver:
    """Clique-width DP on the residual graph.

    With ``expression``, a residual that the expression realizes exactly (vertex
    ``i`` of the expression is residual vertex ``i``) is accepted.  Any
    residual cograph is accepted too; its expression is built automatically.
    """
    target = realize(expression).graph if expression is not None else None

    def accepts(g: Graph) -> bool:
        return g.n == 0 or g == target or is_cograph(g)

    def bind(g: Graph) -> BoundSolver:
        if g.n == 0:
            return _OracleBound(g)
        if g == target:
            return _CwBound(g, expression, range(g.n))
        expr, mapping = cograph_to_expression(g)
        return _CwBound(g, expr, mapping)

    return WeightedSolver("cw-dp", accepts, bind)


def oracle_solver() -> WeightedSolver:
    return WeightedSolver("oracle", lambda g: True, _OracleBound)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("DKS_THREADS", "1")))
    except ValueError:
        return 1


def solve_with_deletion_set(g: Graph, d: Sequence[int], k: int,
                            obj: Objective = Objective.DENSEST,
                            solver: WeightedSolver | None = None,
                            weights: Sequence[int] | None = None,
                            threads: int | None = None) -> SolveResult:
    """Exact optimum by guessing the solution's intersection with ``d``.

    ``weights`` are optional base vertex weights added to the objective.
    Candidates are reduced deterministically: best value, then smallest
    subset bitmask (bit ``i`` is the ``i``-th smallest vertex of ``d``).
    """
    obj = Objective.parse(obj)
    solver = solver or block_solver()
    if not isinstance(solver, WeightedSolver):
        raise SolverNotApplicable(f"{solver!r} is not a weighted solver")
    base = check_weights(weights, g.n)
    check_k(k, g.n)
    dset = sorted(set(d))
    for v in dset:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"deletion-set vertex {v} outside 0..{g.n - 1}")
    t = len(dset)
    if t > MAX_DELETION_SET:
        raise DeletionSetTooLarge(f"|D|={t} exceeds {MAX_DELETION_SET}")
    residual, mapping = remove_vertices(g, dset)
    if not solver.accepts(residual):
        raise InvalidDeletionSet(f"{solver.name} does not accept the graph left after removing D")
    bound = solver.bind(residual)
    r = residual.n

    # adj[i, j] = 1 if the i-th vertex of D touches residual vertex j
    adj = np.zeros((t, r))
    for j, v in enumerate(mapping):
        for i, x in enumerate(dset):
            if g.has_edge(v, x):
                adj[i, j] = 1
    base_r = np.array([base[v] for v in mapping], dtype=float)
    adj_d = np.array([[1.0 if g.has_edge(x, y) else 0.0 for y in dset] for x in dset]).reshape(t, t)
    base_d = np.array([base[x] for x in dset], dtype=float)

    def evaluate(lo: int, hi: int) -> tuple[float, int]:
        masks = np.arange(lo, hi, dtype=np.int64)
        bits = (masks[:, None] >> np.arange(t)) & 1
        size = bits.sum(axis=1)
        ks = k - size
        ok = (ks >= 0) & (ks <= r)
        if not ok.any():
            return (np.nan, -1)
        masks, bits, ks = masks[ok], bits[ok], ks[ok]
        w = bits @ adj + base_r
        # edges inside S plus the base weight of S
        own = np.einsum("bi,ij,bj->b", bits, adj_d, bits) / 2 + bits @ base_d
        vals = bound.values(w, ks, obj) + own
        pick = int(np.argmax(vals) if obj is Objective.DENSEST else np.argmin(vals))
        return (vals[pick], int(masks[pick]))

    chunks = [(lo, min(lo + CHUNK, 1 << t)) for lo in range(0, 1 << t, CHUNK)]
    workers = threads or default_threads()
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partial = list(pool.map(lambda c: evaluate(*c), chunks))
    else:
        partial = [evaluate(*c) for c in chunks]

    best_val, best_mask = None, -1
    for val, mask in partial:  # chunk order = mask order, so ties keep the smallest mask
        if mask < 0:
            continue
        if best_val is None or obj.better(val, best_val):
            best_val, best_mask = val, mask

    s = [dset[i] for i in range(t) if best_mask >> i & 1]
    w_best = [base[v] + sum(1 for x in s if g.has_edge(v, x)) for v in mapping]
    sub = bound.solve(w_best, k - len(s), obj)
    witness = tuple(sorted(s + [mapping[i] for i in sub.witness]))
    value = edge_count_within(g, s) + sum(base[v] for v in s) + sub.value
    if value != best_val:
        raise AssertionError(f"re-solve gave {value}, reduction gave {best_val}")
    res = SolveResult(value, witness, f"deletion[{solver.name}]",
                      {"deletion_set": dset, "subsets": 1 << t})
    return verify_result(g, base, k, res)


def max_k_vertex_cover(g: Graph, k: int,
                       sparsest_solver: Callable[[Graph, int, Objective], SolveResult] | None = None
                       ) -> tuple[int, tuple[int, ...]]:
    """Best k vertices to cover edges, via Sparsest (n-k)-Subgraph on ``g``.

    Returns (number of covered edges, chosen vertices).
    """
    check_k(k, g.n)
    solve = sparsest_solver or (lambda h, kk, o: brute_force_solve(h, None, kk, o))
    res = solve(g, g.n - k, Objective.SPARSEST)
    chosen = set(res.witness)
    cover = tuple(v for v in range(g.n) if v not in chosen)
    return g.m - res.value, cover
