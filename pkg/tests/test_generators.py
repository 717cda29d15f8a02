import random

import pytest

from densek.blocks import is_block_graph
from densek.errors import InvalidSpec
from densek.expression import is_cograph, realize
from densek.generators import InstanceSpec, generate, random_expression
from densek.graph import remove_vertices


@pytest.mark.parametrize("kind", ["block", "planted", "cograph", "er"])
def test_seeded(kind):
    spec = InstanceSpec(kind, 25, seed=3, d=4 if kind == "planted" else 0)
    assert generate(spec) == generate(spec)
    assert generate(spec).graph.n == 25


def test_structure():
    for seed in range(20):
        assert is_block_graph(generate(InstanceSpec("block", 30, seed, new_component=0.2)).graph)
        inst = generate(InstanceSpec("planted", 30, seed, d=5))
        assert inst.deletion_set == tuple(range(25, 30))
        assert is_block_graph(remove_vertices(inst.graph, inst.deletion_set)[0])
        cog = generate(InstanceSpec("cograph", 15, seed))
        assert is_cograph(cog.graph) and realize(cog.expression).graph == cog.graph


def test_random_expression_limits():
    rng = random.Random(0)
    for _ in range(50):
        r = realize(random_expression(rng, depth=6, labels=3))
        assert set(r.labels) <= {1, 2, 3}


@pytest.mark.parametrize("spec", [
    InstanceSpec("tree", 5), InstanceSpec("er", 0), InstanceSpec("planted", 4, d=5),
    InstanceSpec("er", 4, p=1.5), InstanceSpec("block", 4, max_clique=1),
])
def test_invalid(spec):
    with pytest.raises(InvalidSpec):
        generate(spec)
