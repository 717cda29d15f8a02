import random

import pytest

from densek.blocks import (
    biconnected_components,
    build_block_cut_tree,
    find_min_block_deletion_set,
    is_block_graph,
)
from densek.errors import BudgetTooLarge, NotFound
from densek.generators import random_block_edges
from densek.graph import Graph, remove_vertices
from util import BOWTIE, C4, C5, P4, complete, exhaustive_min_deletion, random_graph


def test_bowtie_tree():
    t = build_block_cut_tree(BOWTIE)
    assert [sorted(b) for b in t.blocks] == [[0, 1, 2], [2, 3, 4]]
    assert t.cut_vertices == (2,)
    assert sorted(t.tree_edges) == [(0, 2), (1, 2)]
    assert t.roots == (0,)


def test_path_and_clique_trees():
    t = build_block_cut_tree(P4)
    assert len(t.blocks) == 3 and sorted(t.cut_vertices) == [1, 2]
    t = build_block_cut_tree(complete(4))
    assert len(t.blocks) == 1 and t.cut_vertices == ()


def test_isolated_vertices_and_components():
    g = Graph(5, [(0, 1), (3, 4)])
    t = build_block_cut_tree(g)
    assert sorted(sorted(b) for b in t.blocks) == [[0, 1], [2], [3, 4]]
    assert len(t.roots) == 3
    assert t.component_index[0] == t.component_index[1] != t.component_index[2]


def _check_tree(g, t):
    # every vertex housed; each tree edge joins a block to a cut vertex in it
    assert set().union(*map(set, t.blocks)) == set(range(g.n))
    for b, c in t.tree_edges:
        assert c in t.blocks[b]
    for c in t.cut_vertices:
        assert sum(c in b for b in t.blocks) >= 2
    # one tree per component: #edges = #nodes - #components
    nodes = len(t.blocks) + len(t.cut_vertices)
    assert len(t.tree_edges) == nodes - len(t.roots)


def test_tree_invariants_random():
    rng = random.Random(8)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.5))
        t = build_block_cut_tree(g)
        _check_tree(g, t)
        # blocks cover each edge exactly once
        owners = [sum(u in b and v in b for b in t.blocks) for u, v in g.edges]
        assert all(o == 1 for o in owners)


def test_deep_path_is_iterative():
    n = 5000
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    assert len(biconnected_components(g)) == n - 1
    assert is_block_graph(g)


def test_recognition_examples():
    assert not is_block_graph(C4)
    assert is_block_graph(P4) and is_block_graph(complete(6)) and is_block_graph(BOWTIE)
    rng = random.Random(2)
    tree = Graph(10, [(i, rng.randrange(i)) for i in range(1, 10)])
    assert is_block_graph(tree)
    assert is_block_graph(Graph(40, random_block_edges(rng, 40)))


def test_min_block_deletion_examples():
    d = find_min_block_deletion_set(C4, 2)
    assert len(d) == 1 and is_block_graph(remove_vertices(C4, d)[0])
    assert find_min_block_deletion_set(complete(4), 1) == ()
    diamond_c5 = Graph(5, list(C5.edges) + [(0, 2)])
    d = find_min_block_deletion_set(diamond_c5, 3)
    assert len(d) == exhaustive_min_deletion(diamond_c5, is_block_graph)


def test_min_block_deletion_errors():
    with pytest.raises(NotFound):
        find_min_block_deletion_set(C4, 0)
    with pytest.raises(BudgetTooLarge):
        find_min_block_deletion_set(C4, 5)


def test_min_block_deletion_random():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9))
        d = find_min_block_deletion_set(g, g.n)
        assert is_block_graph(remove_vertices(g, d)[0])
        assert len(d) == exhaustive_min_deletion(g, is_block_graph)
