import random

import pytest

from densek.errors import KTooLarge, VerificationError
from densek.graph import complement
from densek.oracle import Objective, SolveResult, brute_force_solve, verify_result
from util import C5, STAR, complete, random_graph


def test_examples():
    assert brute_force_solve(C5, None, 3, Objective.DENSEST).value == 2
    assert brute_force_solve(complete(4), None, 2, Objective.SPARSEST).value == 1
    res = brute_force_solve(STAR, [5, 0, 0, 0], 1, "densest")
    assert (res.value, res.witness) == (5, (0,))


def test_k_zero_and_errors():
    res = brute_force_solve(C5, None, 0)
    assert (res.value, res.witness) == (0, ())
    with pytest.raises(KTooLarge):
        brute_force_solve(C5, None, 6)
    with pytest.raises(KTooLarge):
        brute_force_solve(C5, None, -1)


def test_lexicographic_ties():
    # every 2-set of C5 with an edge has value 1; (0, 1) is the smallest
    assert brute_force_solve(C5, None, 2).witness == (0, 1)
    assert brute_force_solve(C5, None, 2, "sparsest").witness == (0, 2)


def test_objective_parse():
    assert Objective.parse("Sparsest") is Objective.SPARSEST
    assert Objective.DENSEST.better(3, 2) and Objective.SPARSEST.better(2, 3)


def test_verify_catches_lies():
    with pytest.raises(VerificationError):
        verify_result(C5, None, 2, SolveResult(2, (0, 1), "liar"))
    with pytest.raises(VerificationError):
        verify_result(C5, None, 3, SolveResult(1, (0, 1), "short"))


def test_duality_and_monotonicity():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        dense = [brute_force_solve(g, None, k).value for k in range(n + 1)]
        sparse = [brute_force_solve(g, None, k, "sparsest").value for k in range(n + 1)]
        for k in range(n + 1):
            assert dense[k] + brute_force_solve(complement(g), None, k, "sparsest").value == k * (k - 1) // 2
        assert dense == sorted(dense) and sparse == sorted(sparse)
