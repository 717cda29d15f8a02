"""Densest/Sparsest k-Subgraph with vertex weights over a clique-width expression.

Each expression node gets a sparse table keyed by the label-count vector
``(s_1, ..., s_c)`` of the chosen set; the set size is ``sum(s)``.  Only
reachable states are stored.  Values maximize ``sign * (edges + weights)``.
"""

from __future__ import annotations

from collections.abc import Sequence

from .expression import Expr, Introduce, Join, Union, flatten, label_count, make_irredundant, realize, vertex_count
from .graph import check_weights
from .oracle import Objective, SolveResult, check_k, verify_result

State = tuple[int, ...]


def _tables(e: Expr, w: Sequence[int], k: int, sign: int, keep: bool):
    # Join counts s_i * s_j new edges, which is only right without redundant joins.
    nodes = flatten(make_irredundant(e))
    c = label_count(e)
    zero = (0,) * c
    tables: dict[int, dict[State, int]] = {}
    back: dict[int, object] = {}
    vertex_of: dict[int, int] = {}
    counts: list[int] = []
    for pos, (node, kids) in enumerate(nodes):
        if isinstance(node, Introduce):
            v = len(vertex_of)
            vertex_of[pos] = v
            table = {zero: 0}
            if k >= 1:
                s = list(zero)
                s[node.label - 1] = 1
                table[tuple(s)] = sign * w[v]
            bp = None
        elif isinstance(node, Union):
            left, right = tables[kids[0]], tables[kids[1]]
            table, bp = {}, {}
            for s1, v1 in left.items():
                l1 = sum(s1)
                for s2, v2 in right.items():
                    if l1 + sum(s2) > k:
                        continue
                    s = tuple(a + b for a, b in zip(s1, s2))
                    val = v1 + v2
                    if s not in table or val > table[s]:
                        table[s] = val
                        bp[s] = (s1, s2)
        elif isinstance(node, Join):
            i, j = node.i - 1, node.j - 1
            table = {s: val + sign * s[i] * s[j] for s, val in tables[kids[0]].items()}
            bp = None
        else:
            i, j = node.i - 1, node.j - 1
            table, bp = {}, {}
            for s0, val in tables[kids[0]].items():
                s = list(s0)
                s[j] += s[i]
                s[i] = 0
                s = tuple(s)
                if s not in table or val > table[s]:
                    table[s] = val
                    bp[s] = s0
        tables[pos] = table
        counts.append(len(table))
        if keep:
            back[pos] = bp
        else:
            for ch in kids:
                del tables[ch]
    return nodes, tables, back, vertex_of, counts, c


def cw_profile(e: Expr, w: Sequence[int], k: int, obj: Objective = Objective.DENSEST) -> list[int | None]:
    """Optimal value for each size 0..k, ``None`` where no set of that size exists."""
    obj = Objective.parse(obj)
    sign = obj.sign
    nodes, tables, _, _, _, _ = _tables(e, w, k, sign, keep=False)
    best: list[int | None] = [None] * (k + 1)
    for s, val in tables[len(nodes) - 1].items():
        ell = sum(s)
        if best[ell] is None or val > best[ell]:
            best[ell] = val
    return [None if b is None else sign * b for b in best]


def solve_cw_weighted(e: Expr, w: Sequence[int] | None, k: int,
                      obj: Objective = Objective.DENSEST) -> SolveResult:
    """Optimum over k-subsets of the graph ``e`` denotes.

    ``w`` is indexed by expression vertex id.  ``stats`` on the result holds
    the per-node state counts and the ``(k+1)^(c+1)`` bound they obey.
    """
    obj = Objective.parse(obj)
    sign = obj.sign
    n = vertex_count(e)
    w = check_weights(w, n)
    check_k(k, n)
    nodes, tables, back, vertex_of, counts, c = _tables(e, w, k, sign, keep=True)

    top = len(nodes) - 1
    root = tables[top]
    state, best = None, None
    for s, val in root.items():
        if sum(s) == k and (best is None or val > best):
            state, best = s, val

    witness: list[int] = []
    stack = [(top, state)]
    while stack:
        pos, s = stack.pop()
        node, kids = nodes[pos]
        if isinstance(node, Introduce):
            if sum(s) == 1:
                witness.append(vertex_of[pos])
        elif isinstance(node, Union):
            s1, s2 = back[pos][s]
            stack.append((kids[0], s1))
            stack.append((kids[1], s2))
        elif isinstance(node, Join):
            stack.append((kids[0], s))
        else:
            stack.append((kids[0], back[pos][s]))

    stats = {"max_states": max(counts), "state_bound": (k + 1) ** (c + 1),
             "label_count": c, "node_states": counts}
    res = SolveResult(sign * best, tuple(sorted(witness)), "cw-dp", stats)
    return verify_result(realize(e).graph, w, k, res)
