"""Small exact finders for structural parameters and the inequality check.

All searches run by iterative deepening on the solution size, so the first
set found is minimum.  Branching always picks the lexicographically first
obstruction, which makes results deterministic.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .blocks import find_min_block_deletion_set, is_block_graph
from .errors import BudgetExceeded
from .expression import is_cograph
from .graph import Graph, remove_vertices
from .nd import compute_nd_partition


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_set(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def _deepen(n: int, budget: int, what: str,
            obstruction: Callable[[int], tuple[int, ...] | None]) -> tuple[int, ...]:
    """Smallest removal set hitting every obstruction.

    ``obstruction(alive)`` returns the vertices of some obstruction inside the
    ``alive`` bitmask, or ``None`` when none is left; we branch on deleting
    each of its vertices.
    """
    everyone = (1 << n) - 1

    def search(removed: int, left: int) -> int | None:
        found = obstruction(everyone & ~removed)
        if found is None:
            return removed
        if left == 0:
            return None
        for v in found:
            hit = search(removed | (1 << v), left - 1)
            if hit is not None:
                return hit
        return None

    for size in range(min(budget, n) + 1):
        hit = search(0, size)
        if hit is not None:
            return _to_set(hit)
    raise BudgetExceeded(f"{what} larger than budget {budget}")


def is_vertex_cover(g: Graph, x: Iterable[int]) -> bool:
    xs = set(x)
    return all(u in xs or v in xs for u, v in g.edges)


def min_vertex_cover(g: Graph, budget: int = 25) -> tuple[int, ...]:
    masks = g.masks

    def uncovered_edge(alive: int):
        for u in _bits(alive):
            nb = masks[u] & alive
            if nb:
                return (u, (nb & -nb).bit_length() - 1)
        return None

    return _deepen(g.n, budget, "vertex cover", uncovered_edge)


def non_twin_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges whose endpoints have different closed neighbourhoods."""
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    return frozenset((u, v) for u, v in g.edges if closed[u] != closed[v])


def is_twin_cover(g: Graph, x: Iterable[int]) -> bool:
    xs = set(x)
    return all(u in xs or v in xs or g.adj[u] | {u} == g.adj[v] | {v} for u, v in g.edges)


def min_twin_cover(g: Graph, budget: int = 25) -> tuple[int, ...]:
    cover = min_vertex_cover(Graph(g.n, non_twin_edges(g)), budget)
    assert is_twin_cover(g, cover)
    return cover


def is_cluster_graph(g: Graph) -> bool:
    """Every connected component is a clique."""
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [s], [s]
        seen[s] = True
        while stack:
            for y in g.adj[stack.pop()]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        if any(len(g.adj[v]) != len(comp) - 1 for v in comp):
            return False
    return True


def find_induced_p3(g: Graph, alive: int) -> tuple[int, int, int] | None:
    masks = g.masks
    for v in _bits(alive):
        nb = masks[v] & alive
        for a in _bits(nb):
            rest = nb & ~masks[a] & ~(1 << a)
            if rest:
                return (a, v, (rest & -rest).bit_length() - 1)
    return None


def min_cluster_deletion_set(g: Graph, budget: int = 12) -> tuple[int, ...]:
    return _deepen(g.n, budget, "cluster deletion set", lambda alive: find_induced_p3(g, alive))


def find_induced_p4(g: Graph, alive: int) -> tuple[int, int, int, int] | None:
    masks = g.masks
    for b, c in sorted(g.edges):
        if not (alive >> b & 1 and alive >> c & 1):
            continue
        for x, y in ((b, c), (c, b)):
            left = masks[x] & alive & ~masks[y] & ~(1 << y)
            right = masks[y] & alive & ~masks[x] & ~(1 << x)
            for a in _bits(left):
                d = right & ~masks[a]
                if d:
                    return (a, x, y, (d & -d).bit_length() - 1)
    return None


def min_cograph_deletion_set(g: Graph, budget: int = 10) -> tuple[int, ...]:
    return _deepen(g.n, budget, "cograph deletion set", lambda alive: find_induced_p4(g, alive))


@dataclass
class ParamReport:
    nd: int
    vc: int
    tc: int
    cd: int
    bd: int
    cod: int
    witnesses: dict[str, list] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"nd": self.nd, "vc": self.vc, "tc": self.tc, "cd": self.cd,
                "bd": self.bd, "cod": self.cod, "witnesses": self.witnesses}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def parameter_report(g: Graph, budget: int = 25) -> ParamReport:
    part = compute_nd_partition(g)
    vc = min_vertex_cover(g, budget)
    tc = min_twin_cover(g, budget)
    cd = min_cluster_deletion_set(g, budget)
    bd = find_min_block_deletion_set(g, min(budget, g.n))
    cod = min_cograph_deletion_set(g, budget)

    # Each witness is re-checked with a recognizer independent of its finder.
    assert is_vertex_cover(g, vc)
    assert is_twin_cover(g, tc)
    assert is_cluster_graph(remove_vertices(g, cd)[0])
    assert is_block_graph(remove_vertices(g, bd)[0])
    assert is_cograph(remove_vertices(g, cod)[0])

    return ParamReport(
        nd=len(part.modules), vc=len(vc), tc=len(tc), cd=len(cd), bd=len(bd), cod=len(cod),
        witnesses={"nd": [list(m) for m in part.modules], "vc": list(vc), "tc": list(tc),
                   "cd": list(cd), "bd": list(bd), "cod": list(cod)},
    )


def check_parameter_inequalities(g: Graph, budget: int = 25) -> ParamReport:
    """Compute all parameters and record any broken inequality in ``violations``."""
    r = parameter_report(g, budget)
    chain = [("bd", r.bd), ("cd", r.cd), ("tc", r.tc), ("vc", r.vc)]
    for (a, x), (b, y) in zip(chain, chain[1:]):
        if x > y:
            r.violations.append(f"{a}={x} > {b}={y}")
    if r.nd > 2 ** r.tc + r.tc:
        r.violations.append(f"nd={r.nd} > 2^tc + tc = {2 ** r.tc + r.tc}")
    return r
