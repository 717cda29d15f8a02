"""Neighborhood diversity: twin modules, type graph, the quadratic program, and
an exact solver that enumerates module compositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompositionSpaceTooLarge, InvalidPartition, KTooLarge
from .graph import Graph
from .oracle import Objective, SolveResult, check_k, verify_result

DEFAULT_COMPOSITION_CAP = 10**8


@dataclass(frozen=True)
class NdPartition:
    modules: tuple[tuple[int, ...], ...]
    is_clique: tuple[bool, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.modules)

    def module_of(self) -> list[int]:
        owner = [0] * sum(self.sizes)
        for i, mod in enumerate(self.modules):
            for v in mod:
                owner[v] = i
        return owner


def are_twins(g: Graph, u: int, v: int) -> bool:
    mu = g.masks[u] & ~(1 << v)
    mv = g.masks[v] & ~(1 << u)
    return mu == mv


def compute_nd_partition(g: Graph) -> NdPartition:
    """Twin classes of ``g``, ordered by smallest vertex.

    False twins share an open neighbourhood, true twins a closed one; both
    groupings are merged with a small union-find.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    open_key: dict[int, int] = {}
    closed_key: dict[int, int] = {}
    for v in range(g.n):
        for table, key in ((open_key, g.masks[v]), (closed_key, g.masks[v] | (1 << v))):
            if key in table:
                a, b = find(table[key]), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                table[key] = v
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    modules = tuple(sorted(tuple(vs) for vs in groups.values()))
    is_clique = tuple(len(m) > 1 and g.has_edge(m[0], m[1]) for m in modules)
    return NdPartition(modules, is_clique)


def build_type_graph(g: Graph, p: NdPartition) -> Graph:
    """Quotient graph over modules; raises if some module pair is partially joined."""
    owner = p.module_of()
    cross: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = owner[u], owner[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        cross[key] = cross.get(key, 0) + 1
    sizes = p.sizes
    for (a, b), count in cross.items():
        if count != sizes[a] * sizes[b]:
            raise InvalidPartition(f"modules {a} and {b} are joined by {count} of "
                                   f"{sizes[a] * sizes[b]} possible edges")
    for i, mod in enumerate(p.modules):
        inside = sum(1 for x in mod for y in mod if x < y and g.has_edge(x, y))
        full = len(mod) * (len(mod) - 1) // 2
        if inside not in (0, full) or (inside == full and len(mod) > 1) != p.is_clique[i]:
            raise InvalidPartition(f"module {i} is neither the declared clique nor independent set")
    return Graph(len(p.modules), cross.keys())


@dataclass(frozen=True)
class IqpInstance:
    """max/min x'Qx + q.x  s.t.  sum(x) = k,  0 <= x_i <= m_i,  x integer.

    Uses the doubled objective; :meth:`value` halves it back to an edge count.
    """

    Q: tuple[tuple[int, ...], ...]
    q: tuple[int, ...]
    k: int
    bounds: tuple[int, ...]
    sense: Objective

    @property
    def t(self) -> int:
        return len(self.q)

    def doubled(self, x) -> int:
        t = self.t
        quad = sum(self.Q[i][j] * x[i] * x[j] for i in range(t) for j in range(t))
        return quad + sum(qi * xi for qi, xi in zip(self.q, x))

    def value(self, x) -> int:
        return self.doubled(x) // 2

    def to_text(self) -> str:
        sense = "max" if self.sense is Objective.DENSEST else "min"
        lines = [f"iqp {self.t} {sense}", f"k {self.k}", "bounds " + " ".join(map(str, self.bounds)), "Q"]
        lines += [" ".join(map(str, row)) for row in self.Q]
        lines += ["q", " ".join(map(str, self.q))]
        return "\n".join(lines) + "\n"


def emit_iqp(p: NdPartition, tg: Graph, k: int, obj: Objective = Objective.DENSEST) -> IqpInstance:
    n = sum(p.sizes)
    if k > n or k < 0:
        raise KTooLarge(f"k={k} outside 0..{n}")
    t = len(p.modules)
    Q = [[0] * t for _ in range(t)]
    q = [0] * t
    for a, b in tg.edges:
        Q[a][b] = Q[b][a] = 1
    for i, clique in enumerate(p.is_clique):
        if clique:
            Q[i][i] = 1
            q[i] = -1
    return IqpInstance(tuple(map(tuple, Q)), tuple(q), k, p.sizes, Objective.parse(obj))


def count_compositions(bounds: tuple[int, ...], k: int) -> int:
    """Number of integer vectors with 0 <= x_i <= bounds[i] summing to k."""

    ways = [1] + [0] * k
    for b in bounds:
        ways = [sum(ways[r - x] for x in range(min(b, r) + 1)) for r in range(k + 1)]
    return ways[k]


def solve_nd(g: Graph, k: int, obj: Objective = Objective.DENSEST,
             cap: int = DEFAULT_COMPOSITION_CAP) -> SolveResult:
    """Exact solve by enumerating how many vertices to take from each module."""
    obj = Objective.parse(obj)
    check_k(k, g.n)
    part = compute_nd_partition(g)
    tg = build_type_graph(g, part)
    iqp = emit_iqp(part, tg, k, obj)
    bounds = part.sizes
    total = count_compositions(bounds, k)
    if total > cap:
        raise CompositionSpaceTooLarge(f"{total} compositions exceed the cap of {cap}")

    t = len(bounds)
    clique = part.is_clique
    earlier = [[a for a in tg.adj[b] if a < b] for b in range(t)]
    suffix = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]
    sign = obj.sign
    best_val: int | None = None
    best_x: list[int] = []
    x = [0] * t

    # Depth-first odometer over x_0, x_1, ...; each frame is
    # [module index, vertices still to place, objective so far, next x_i, last x_i].
    def frame(i: int, rest: int, acc: int) -> list[int]:
        return [i, rest, acc, max(0, rest - suffix[i + 1]), min(bounds[i], rest)]

    stack = [frame(0, k, 0)] if t else []
    if not t:
        best_val = 0
    while stack:
        top = stack[-1]
        i, rest, acc, xi, hi = top
        if xi > hi:
            x[i] = 0
            stack.pop()
            continue
        top[3] += 1
        x[i] = xi
        gain = xi * sum(x[a] for a in earlier[i])
        if clique[i]:
            gain += xi * (xi - 1) // 2
        if i + 1 == t:
            val = acc + gain
            if best_val is None or sign * val > sign * best_val:
                best_val, best_x = val, x.copy()
        else:
            stack.append(frame(i + 1, rest - xi, acc + gain))

    assert best_val == iqp.value(best_x)
    witness = tuple(sorted(v for mod, xi in zip(part.modules, best_x) for v in mod[:xi]))
    res = SolveResult(best_val, witness, "nd-enum",
                      {"nd": t, "compositions": total, "x": best_x})
    return verify_result(g, None, k, res)
