import random
from itertools import product

import pytest

from densek.errors import CompositionSpaceTooLarge, InvalidPartition, KTooLarge
from densek.graph import Graph, edge_count_within
from densek.nd import (
    NdPartition,
    are_twins,
    build_type_graph,
    compute_nd_partition,
    count_compositions,
    emit_iqp,
    solve_nd,
)
from densek.oracle import brute_force_solve
from util import K22, P4, complete, random_graph


def test_partition_examples():
    p = compute_nd_partition(complete(5))
    assert p.modules == ((0, 1, 2, 3, 4),) and p.is_clique == (True,)
    p = compute_nd_partition(K22)
    assert p.modules == ((0, 1), (2, 3)) and p.is_clique == (False, False)
    assert compute_nd_partition(P4).modules == ((0,), (1,), (2,), (3,))


def test_partition_is_minimum_and_valid():
    rng = random.Random(6)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12))
        p = compute_nd_partition(g)
        owner = p.module_of()
        # twins never sit in different modules, so no coarser twin partition exists
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert are_twins(g, u, v) == (owner[u] == owner[v])
        build_type_graph(g, p)


def test_type_graph_examples():
    tg = build_type_graph(K22, compute_nd_partition(K22))
    assert tg.n == 2 and tg.sorted_edges() == [(0, 1)]
    assert build_type_graph(complete(4), compute_nd_partition(complete(4))).m == 0
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    tg = build_type_graph(two_triangles, compute_nd_partition(two_triangles))
    assert tg.n == 2 and tg.m == 0


def test_type_graph_rejects_partial_joins():
    with pytest.raises(InvalidPartition):
        build_type_graph(P4, NdPartition(((0, 2), (1, 3)), (False, False)))


def test_iqp_examples():
    p = compute_nd_partition(K22)
    iqp = emit_iqp(p, build_type_graph(K22, p), 2)
    assert iqp.Q == ((0, 1), (1, 0)) and iqp.q == (0, 0)
    assert iqp.value((1, 1)) == 1
    p = compute_nd_partition(complete(4))
    iqp = emit_iqp(p, build_type_graph(complete(4), p), 3)
    assert iqp.value((3,)) == 3
    assert iqp.to_text() == "iqp 1 max\nk 3\nbounds 4\nQ\n1\nq\n-1\n"
    with pytest.raises(KTooLarge):
        emit_iqp(p, build_type_graph(complete(4), p), 5)


def test_iqp_coefficients_and_witness_consistency():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 10))
        p = compute_nd_partition(g)
        iqp = emit_iqp(p, build_type_graph(g, p), 0)
        assert all(abs(x) <= 1 for row in iqp.Q for x in row) and all(abs(x) <= 1 for x in iqp.q)
        assert all(iqp.Q[i][j] == iqp.Q[j][i] for i in range(iqp.t) for j in range(iqp.t))
        for _ in range(5):
            x = [rng.randint(0, m) for m in p.sizes]
            chosen = [v for mod, xi in zip(p.modules, x) for v in mod[:xi]]
            assert edge_count_within(g, chosen) == iqp.value(x)
            # swapping for other members of the same module changes nothing
            other = [v for mod, xi in zip(p.modules, x) for v in mod[len(mod) - xi:]]
            assert edge_count_within(g, other) == iqp.value(x)


def test_count_compositions():
    for bounds in [(2, 3), (1, 1, 1), (4,), (2, 0, 3)]:
        for k in range(sum(bounds) + 2):
            direct = sum(1 for x in product(*(range(b + 1) for b in bounds)) if sum(x) == k)
            assert count_compositions(bounds, k) == direct


def test_solve_examples():
    assert solve_nd(K22, 3).value == 2
    for k in range(7):
        assert solve_nd(complete(6), k).value == k * (k - 1) // 2


def test_solve_oracle_equivalence():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(1, 11)
        g = random_graph(rng, n)
        for obj in ("densest", "sparsest"):
            for k in range(n + 1):
                assert solve_nd(g, k, obj).value == brute_force_solve(g, None, k, obj).value


def test_composition_cap():
    with pytest.raises(CompositionSpaceTooLarge):
        solve_nd(P4, 2, cap=3)
