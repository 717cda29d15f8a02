"""2-approximation for Densest k-Subgraph by splitting a deletion set in two.

With ``d = V1 + (d - V1)``, the edge set splits into the edges inside ``V1``
or inside ``V2 = V - V1`` (graph G'') and the edges between them (graph G',
bipartite).  Both halves are solved exactly; the optimum's edges fall into
one of them for at least half its count.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .block_dp import knapsack_merge
from .deletion import WeightedSolver, block_solver, solve_with_deletion_set
from .errors import SolverNotApplicable
from .graph import Graph, edge_count_within, induced_subgraph, remove_vertices
from .oracle import SolveResult, check_k, verify_result


@dataclass(frozen=True)
class ApproxResult:
    result: SolveResult
    branch: str  # "disjoint" (G'') or "bipartite" (G')
    disjoint_value: int
    bipartite_value: int

    @property
    def value(self) -> int:
        return self.result.value

    @property
    def witness(self) -> tuple[int, ...]:
        return self.result.witness

    @property
    def opt_upper_bound(self) -> int:
        # OPT splits into its G' edges and its G'' edges, each at most that branch's optimum.
        return self.disjoint_value + self.bipartite_value


def split_edges(g: Graph, v1: Sequence[int]) -> tuple[Graph, Graph]:
    """(G'', G'): edges inside a side, and edges across."""
    side = set(v1)
    inner = [(u, v) for u, v in g.edges if (u in side) == (v in side)]
    cross = [(u, v) for u, v in g.edges if (u in side) != (v in side)]
    return Graph(g.n, inner), Graph(g.n, cross)


def _sized(h: Graph, d: Sequence[int], k: int, solver: WeightedSolver) -> list[float]:
    vals: list[float] = []
    for i in range(k + 1):
        vals.append(solve_with_deletion_set(h, d, i, solver=solver).value if i <= h.n
                    else float("-inf"))
    return vals


def approx_densest(g: Graph, d: Sequence[int], k: int,
                   solver: WeightedSolver | None = None) -> ApproxResult:
    solver = solver or block_solver()
    check_k(k, g.n)
    dset = sorted(set(d))
    if not solver.accepts(remove_vertices(g, dset)[0]):
        raise SolverNotApplicable(f"{solver.name} does not accept the graph left after removing d")
    v1 = dset[: len(dset) // 2]
    in_v1 = set(v1)
    v2 = [v for v in range(g.n) if v not in in_v1]

    g2, g1 = split_edges(g, v1)
    if g1.edges & g2.edges or g1.edges | g2.edges != g.edges:
        raise AssertionError("edge split is not a partition")

    # G'' is two disjoint pieces; combine their per-size optima.
    h1, map1 = induced_subgraph(g, v1)
    h2, map2 = induced_subgraph(g, v2)
    local2 = {v: i for i, v in enumerate(map2)}
    d2 = [local2[v] for v in dset if v in local2]
    p1 = _sized(h1, range(h1.n), k, solver)
    p2 = _sized(h2, d2, k, solver)
    merged = knapsack_merge(p1, p2, k)
    i1 = next(i for i in range(k + 1) if p1[i] + p2[k - i] == merged[k])
    s1 = solve_with_deletion_set(h1, range(h1.n), i1, solver=solver).witness
    s2 = solve_with_deletion_set(h2, d2, k - i1, solver=solver).witness
    disjoint = tuple(sorted([map1[v] for v in s1] + [map2[v] for v in s2]))
    disjoint_value = int(merged[k])

    # V1 covers every edge of G', so G' minus V1 is edgeless.
    bip = solve_with_deletion_set(g1, v1, k, solver=solver)

    a = edge_count_within(g, disjoint)
    b = edge_count_within(g, bip.witness)
    if b > a:
        branch, witness, value = "bipartite", bip.witness, b
    else:
        branch, witness, value = "disjoint", disjoint, a
    res = SolveResult(value, witness, "approx-split",
                      {"branch": branch, "v1": v1, "disjoint_value": disjoint_value,
                       "bipartite_value": bip.value})
    verify_result(g, None, k, res)
    return ApproxResult(res, branch, disjoint_value, bip.value)
