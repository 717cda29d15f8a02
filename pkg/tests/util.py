"""Shared fixtures-as-functions for the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from densek.graph import Graph, remove_vertices

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
P3 = Graph(3, [(0, 1), (1, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])
K22 = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def bowtie_apex() -> Graph:
    """Bowtie plus vertex 5 adjacent to all five others."""
    return Graph(6, list(BOWTIE.edges) + [(v, 5) for v in range(5)])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.uniform(0.15, 0.8) if p is None else p
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def exhaustive_min_deletion(g: Graph, accepts) -> int:
    """Size of the smallest vertex set whose removal leaves a graph ``accepts`` likes."""
    for size in range(g.n + 1):
        if any(accepts(remove_vertices(g, c)[0]) for c in combinations(range(g.n), size)):
            return size
    raise AssertionError("the empty graph should always be accepted")
