"""Objective, solve results, and the exhaustive reference solver."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .errors import KTooLarge, VerificationError
from .graph import Graph, check_weights, edge_count_within


class Objective(enum.Enum):
    DENSEST = "densest"
    SPARSEST = "sparsest"

    @property
    def sign(self) -> int:
        """+1 when maximizing, -1 when minimizing; DP code maximizes ``sign * value``."""
        return 1 if self is Objective.DENSEST else -1

    def better(self, a: int, b: int) -> bool:
        """True if ``a`` is strictly better than ``b``."""
        return a > b if self is Objective.DENSEST else a < b

    @classmethod
    def parse(cls, text: str | Objective) -> Objective:
        if isinstance(text, Objective):
            return text
        return cls(text.lower())


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple[int, ...]
    strategy: str
    stats: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "witness": list(self.witness), "strategy": self.strategy}


def objective_value(g: Graph, w: Sequence[int], s: Sequence[int]) -> int:
    return edge_count_within(g, s) + sum(w[v] for v in s)


def verify_result(g: Graph, w: Sequence[int] | None, k: int, res: SolveResult) -> SolveResult:
    """Recompute the objective from the witness; raise if it disagrees."""
    w = check_weights(w, g.n)
    if len(set(res.witness)) != k or len(res.witness) != k:
        raise VerificationError(f"{res.strategy}: witness has {len(set(res.witness))} vertices, expected {k}")
    actual = objective_value(g, w, res.witness)
    if actual != res.value:
        raise VerificationError(f"{res.strategy}: reported {res.value}, witness gives {actual}")
    return res


def check_k(k: int, n: int) -> None:
    if k < 0:
        raise KTooLarge(f"k={k} is negative")
    if k > n:
        raise KTooLarge(f"k={k} exceeds n={n}")


def brute_force_solve(g: Graph, w: Sequence[int] | None, k: int,
                      obj: Objective = Objective.DENSEST) -> SolveResult:
    """Optimum over all k-subsets, ties broken by the lexicographically smallest witness."""
    obj = Objective.parse(obj)
    w = check_weights(w, g.n)
    check_k(k, g.n)
    masks = g.masks
    best_val: int | None = None
    best: tuple[int, ...] = ()
    for comb in combinations(range(g.n), k):
        mask = 0
        for v in comb:
            mask |= 1 << v
        val = sum((masks[v] & mask).bit_count() for v in comb) // 2
        val += sum(w[v] for v in comb)
        if best_val is None or obj.better(val, best_val):
            best_val, best = val, comb
    return SolveResult(best_val or 0, best, "oracle")
