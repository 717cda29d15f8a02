"""Seeded random instances: block graphs, planted deletion sets, cographs,
Erdős–Rényi graphs and arbitrary clique-width expressions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidSpec
from .expression import Expr, Introduce, Join, Relabel, Union, realize
from .graph import Graph

KINDS = ("block", "planted", "cograph", "er")


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    n: int
    seed: int = 0
    d: int = 0            # planted vertices (kind "planted")
    p: float = 0.3        # edge probability for "er" and for planted vertices
    max_clique: int = 5   # largest glued clique in block graphs
    new_component: float = 0.0  # chance a glued clique starts a new component


@dataclass(frozen=True)
class Instance:
    graph: Graph
    spec: InstanceSpec
    deletion_set: tuple[int, ...] = ()
    expression: Expr | None = field(default=None, compare=False)


def _validate(spec: InstanceSpec) -> None:
    if spec.kind not in KINDS:
        raise InvalidSpec(f"unknown kind {spec.kind!r}; expected one of {', '.join(KINDS)}")
    if spec.n < 1:
        raise InvalidSpec("n must be positive")
    if not 0 <= spec.d <= spec.n:
        raise InvalidSpec(f"d={spec.d} outside 0..{spec.n}")
    if not 0.0 <= spec.p <= 1.0 or not 0.0 <= spec.new_component <= 1.0:
        raise InvalidSpec("probabilities must lie in [0, 1]")
    if spec.max_clique < 2:
        raise InvalidSpec("max_clique must be at least 2")


def random_block_edges(rng: random.Random, n: int, max_clique: int = 5,
                       new_component: float = 0.0) -> list[tuple[int, int]]:
    """Glue cliques onto single existing vertices until ``n`` vertices exist."""
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        grow = min(rng.randint(1, max_clique - 1), n - size)
        if rng.random() < new_component:
            members = list(range(size, size + grow))
        else:
            members = [rng.randrange(size)] + list(range(size, size + grow))
        edges += [(a, b) for i, a in enumerate(members) for b in members[i + 1:]]
        size += grow
    return edges


def random_cograph_expression(rng: random.Random, n: int, p_join: float = 0.5) -> Expr:
    """Random union/join tree over ``n`` introduce nodes, two labels."""
    # Built bottom-up from a random split plan to stay iterative.
    plan = [(n, None)]
    order = []
    while plan:
        size, parent = plan.pop()
        idx = len(order)
        order.append((size, parent, rng.random() < p_join))
        if size > 1:
            left = rng.randint(1, size - 1)
            plan.append((size - left, idx))
            plan.append((left, idx))
    built: list[list[Expr]] = [[] for _ in order]
    for idx in range(len(order) - 1, -1, -1):
        size, parent, join = order[idx]
        if size == 1:
            e: Expr = Introduce(1)
        else:
            a, b = built[idx][::-1]
            if join:
                e = Relabel(2, 1, Join(1, 2, Union(a, Relabel(1, 2, b))))
            else:
                e = Union(a, b)
        if parent is not None:
            built[parent].append(e)
        else:
            return e
    raise AssertionError("unreachable")


def random_expression(rng: random.Random, depth: int = 8, labels: int = 4) -> Expr:
    """Arbitrary expression with at most ``depth`` levels and labels ``1..labels``."""

    def pair() -> tuple[int, int]:
        i, j = rng.sample(range(1, labels + 1), 2)
        return i, j

    def build(level: int) -> Expr:
        if level <= 1:
            return Introduce(rng.randint(1, labels))
        roll = rng.random()
        if roll < 0.2:
            return Introduce(rng.randint(1, labels))
        if roll < 0.6 or labels < 2:
            return Union(build(level - 1), build(level - 1))
        if roll < 0.8:
            return Join(*pair(), build(level - 1))
        return Relabel(*pair(), build(level - 1))

    return build(depth)


def generate(spec: InstanceSpec) -> Instance:
    _validate(spec)
    rng = random.Random(spec.seed)
    n = spec.n
    if spec.kind == "block":
        return Instance(Graph(n, random_block_edges(rng, n, spec.max_clique, spec.new_component)), spec)
    if spec.kind == "planted":
        base = n - spec.d
        edges = random_block_edges(rng, base, spec.max_clique, spec.new_component) if base else []
        planted = tuple(range(base, n))
        for v in planted:
            edges += [(u, v) for u in range(v) if rng.random() < spec.p]
        return Instance(Graph(n, edges), spec, planted)
    if spec.kind == "cograph":
        expr = random_cograph_expression(rng, n)
        return Instance(realize(expr).graph, spec, expression=expr)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < spec.p]
    return Instance(Graph(n, edges), spec)
