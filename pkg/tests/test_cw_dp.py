import random

import pytest

from densek.cw_dp import cw_profile, solve_cw_weighted
from densek.errors import KTooLarge, WeightLengthMismatch
from densek.expression import Join, label_count, parse_expression, realize, vertex_count
from densek.generators import InstanceSpec, generate, random_expression
from densek.oracle import brute_force_solve

K3 = parse_expression("r(2,1,e(1,2,u(r(2,1,e(1,2,u(i(1),i(2)))),i(2))))")
K22 = parse_expression("e(1,2,u(u(i(1),i(1)),u(i(2),i(2))))")


def test_examples():
    assert realize(K3).graph.m == 3
    assert solve_cw_weighted(K3, None, 2, "densest").value == 1
    assert solve_cw_weighted(K22, None, 3, "densest").value == 2
    assert solve_cw_weighted(K22, None, 2, "sparsest").value == 0


def test_errors():
    with pytest.raises(KTooLarge):
        solve_cw_weighted(K22, None, 5)
    with pytest.raises(WeightLengthMismatch):
        solve_cw_weighted(K22, [1, 2], 1)


def test_redundant_join_not_double_counted():
    e = parse_expression("e(1,2,e(1,2,u(i(1),i(2))))")
    assert solve_cw_weighted(e, None, 2).value == 1


def test_cograph_oracle_equivalence():
    rng = random.Random(21)
    for seed in range(120):
        n = rng.randint(1, 12)
        inst = generate(InstanceSpec("cograph", n, seed))
        w = [rng.randint(0, 5) for _ in range(n)]
        for obj in ("densest", "sparsest"):
            prof = cw_profile(inst.expression, w, n, obj)
            for k in range(n + 1):
                ref = brute_force_solve(inst.graph, w, k, obj).value
                assert prof[k] == ref
                assert solve_cw_weighted(inst.expression, w, k, obj).value == ref


def test_random_expression_oracle_and_state_bound():
    rng = random.Random(22)
    done = 0
    while done < 200:
        e = random_expression(rng, rng.randint(2, 8), rng.randint(1, 4))
        n = vertex_count(e)
        if n > 12:
            continue
        done += 1
        g = realize(e).graph
        w = [rng.randint(0, 5) for _ in range(n)]
        c = label_count(e)
        for obj in ("densest", "sparsest"):
            for k in range(n + 1):
                res = solve_cw_weighted(e, w, k, obj)
                assert res.value == brute_force_solve(g, w, k, obj).value
                assert res.stats["max_states"] <= (k + 1) ** (c + 1)


def test_join_never_lowers_densest_states():
    from densek.cw_dp import _tables
    rng = random.Random(23)
    for _ in range(40):
        e = random_expression(rng, 6, 3)
        n = vertex_count(e)
        nodes, tables, _, _, _, _ = _tables(e, [0] * n, n, 1, keep=True)
        for pos, (node, kids) in enumerate(nodes):
            if isinstance(node, Join):
                before = tables[kids[0]]
                assert all(tables[pos][s] >= v for s, v in before.items())
