"""Block-cut trees, block-graph recognition, and a small block-deletion finder."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetTooLarge, NotFound
from .graph import Graph, edge_count_within, remove_vertices


def biconnected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of the blocks of ``g``; isolated vertices give singleton blocks.

    Iterative Hopcroft-Tarjan over an edge stack, so deep graphs do not hit
    the recursion limit.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[set[int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            blocks.append({root})
            continue
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = clock
                    clock += 1
                    stack.append((u, v, iter(sorted(g.adj[u]))))
                    descended = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (p, v):
                        break
                blocks.append(comp)
    return blocks


@dataclass(frozen=True)
class BlockCutTree:
    """Rooted block-cut forest.

    Blocks are indexed ``0..len(blocks)-1`` in order of (smallest vertex,
    sorted contents).  Each component is rooted at its first block in that
    order, i.e. a block containing the component's smallest vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]   # (block index, cut vertex)
    roots: tuple[int, ...]                     # one root block per component
    component_index: tuple[int, ...]           # vertex -> component
    parent_cut: tuple[int | None, ...]         # block -> cut vertex above it
    child_cuts: tuple[tuple[int, ...], ...]    # block -> cut vertices below it
    child_blocks: dict[int, tuple[int, ...]]   # cut vertex -> blocks below it

    def postorder(self, root: int) -> list[int]:
        """Blocks of ``root``'s component, children before parents."""
        order: list[int] = []
        stack = [root]
        while stack:
            b = stack.pop()
            order.append(b)
            for c in self.child_cuts[b]:
                stack.extend(self.child_blocks[c])
        order.reverse()
        return order

    def component_vertices(self, root: int) -> list[int]:
        seen: set[int] = set()
        for b in self.postorder(root):
            seen.update(self.blocks[b])
        return sorted(seen)


def build_block_cut_tree(g: Graph) -> BlockCutTree:
    blocks = sorted((tuple(sorted(b)) for b in biconnected_components(g)),
                    key=lambda b: (b[0], b))
    owners: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            owners.setdefault(v, []).append(i)
    cut_vertices = tuple(sorted(v for v, bs in owners.items() if len(bs) > 1))
    cut_set = set(cut_vertices)
    tree_edges = tuple((i, v) for i, b in enumerate(blocks) for v in b if v in cut_set)

    parent_cut: list[int | None] = [None] * len(blocks)
    child_cuts: list[list[int]] = [[] for _ in blocks]
    child_blocks: dict[int, tuple[int, ...]] = {}
    component_index = [-1] * g.n
    visited = [False] * len(blocks)
    roots = []
    for r in range(len(blocks)):
        if visited[r]:
            continue
        comp = len(roots)
        roots.append(r)
        visited[r] = True
        queue = deque([r])
        while queue:
            b = queue.popleft()
            for v in blocks[b]:
                component_index[v] = comp
            for v in blocks[b]:
                if v not in cut_set or v == parent_cut[b]:
                    continue
                below = tuple(j for j in owners[v] if not visited[j])
                child_cuts[b].append(v)
                child_blocks[v] = below
                for j in below:
                    visited[j] = True
                    parent_cut[j] = v
                    queue.append(j)
    return BlockCutTree(
        blocks=tuple(blocks),
        cut_vertices=cut_vertices,
        tree_edges=tree_edges,
        roots=tuple(roots),
        component_index=tuple(component_index),
        parent_cut=tuple(parent_cut),
        child_cuts=tuple(tuple(c) for c in child_cuts),
        child_blocks=child_blocks,
    )


def blocks_are_cliques(g: Graph, tree: BlockCutTree) -> bool:
    return all(edge_count_within(g, b) == len(b) * (len(b) - 1) // 2 for b in tree.blocks)


def is_block_graph(g: Graph) -> bool:
    return blocks_are_cliques(g, build_block_cut_tree(g))


def find_min_block_deletion_set(g: Graph, budget: int) -> tuple[int, ...]:
    """Smallest D (lexicographically first among equals) leaving a block graph.

    Exhaustive over subsets by increasing size; meant for small graphs only.
    """
    if budget < 0:
        raise BudgetTooLarge("budget must be non-negative")
    if budget > g.n:
        raise BudgetTooLarge(f"budget {budget} exceeds n={g.n}")
    for size in range(budget + 1):
        for d in combinations(range(g.n), size):
            if is_block_graph(remove_vertices(g, d)[0]):
                return d
    raise NotFound(f"no block deletion set of size <= {budget}")
