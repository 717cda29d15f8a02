import json
import random
from itertools import combinations

import pytest

from densek.blocks import is_block_graph
from densek.errors import BudgetExceeded
from densek.expression import is_cograph
from densek.graph import Graph, remove_vertices
from densek.params import (
    check_parameter_inequalities,
    is_cluster_graph,
    is_twin_cover,
    is_vertex_cover,
    min_cluster_deletion_set,
    min_cograph_deletion_set,
    min_twin_cover,
    min_vertex_cover,
    non_twin_edges,
    parameter_report,
)
from util import BOWTIE, C5, P3, P4, complete, exhaustive_min_deletion, random_graph


def test_vertex_cover_examples():
    assert min_vertex_cover(P3) == (1,)
    assert len(min_vertex_cover(C5)) == 3
    with pytest.raises(BudgetExceeded):
        min_vertex_cover(C5, budget=2)


def test_non_twin_edges_examples():
    assert non_twin_edges(complete(5)) == frozenset()
    assert non_twin_edges(P4) == P4.edges
    assert sorted(non_twin_edges(BOWTIE)) == [(0, 2), (1, 2), (2, 3), (2, 4)]


def test_twin_cover_examples():
    assert min_twin_cover(complete(5)) == ()
    assert len(min_twin_cover(P4)) == 2
    multipartite = Graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])
    tc = min_twin_cover(multipartite)
    assert is_twin_cover(multipartite, tc)


def test_twin_cover_equivalence():
    # X is a twin cover iff it covers every non-twin edge
    rng = random.Random(1)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 7))
        rest = Graph(g.n, non_twin_edges(g))
        for size in range(g.n + 1):
            for x in combinations(range(g.n), size):
                assert is_twin_cover(g, x) == is_vertex_cover(rest, x)


def test_cluster_and_cograph_examples():
    assert len(min_cluster_deletion_set(P3)) == 1
    assert min_cluster_deletion_set(complete(4)) == ()
    assert len(min_cograph_deletion_set(P4)) == 1
    assert min_cograph_deletion_set(complete(4)) == ()


def test_report_examples():
    r = check_parameter_inequalities(P4)
    assert (r.bd, r.cd, r.tc, r.vc, r.nd, r.cod) == (0, 1, 2, 2, 4, 1)
    assert r.ok
    r = check_parameter_inequalities(complete(5))
    # vc(K_n) is n - 1; the other deletion numbers are 0
    assert (r.bd, r.cd, r.tc, r.vc, r.nd) == (0, 0, 0, 4, 1)
    assert r.ok
    data = json.loads(r.to_json())
    assert list(data) == ["nd", "vc", "tc", "cd", "bd", "cod", "witnesses"]


def test_nd_twin_cover_bound_counterexamples():
    # tc = 0 but two modules
    two_cliques = Graph(5, [(0, 1), (2, 3), (2, 4), (3, 4)])
    r = check_parameter_inequalities(two_cliques)
    assert (r.tc, r.nd) == (0, 2) and not r.ok
    # connected: three triangles hanging off vertex 0 give tc = 1, nd = 4
    edges = []
    for t in range(3):
        a, b, c = 1 + 3 * t, 2 + 3 * t, 3 + 3 * t
        edges += [(a, b), (b, c), (a, c), (0, a), (0, b), (0, c)]
    r = check_parameter_inequalities(Graph(10, edges))
    assert (r.tc, r.nd) == (1, 4)
    assert r.violations == ["nd=4 > 2^tc + tc = 3"]


def test_finders_match_exhaustive_minima():
    rng = random.Random(2)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9))
        r = parameter_report(g)
        assert r.vc == exhaustive_min_deletion(g, lambda h: h.m == 0)
        assert r.cd == exhaustive_min_deletion(g, is_cluster_graph)
        assert r.cod == exhaustive_min_deletion(g, is_cograph)
        assert r.bd == exhaustive_min_deletion(g, is_block_graph)
        assert is_vertex_cover(g, r.witnesses["vc"])
        assert is_cluster_graph(remove_vertices(g, r.witnesses["cd"])[0])
        assert r.bd <= r.cd <= r.tc <= r.vc


def test_deterministic():
    g = random_graph(random.Random(3), 9)
    assert parameter_report(g).to_dict() == parameter_report(g).to_dict()
