"""Simple undirected graphs on dense integer ids, plus edge-list I/O."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    MalformedHeader,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
    WeightLengthMismatch,
)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.  Adjacency is
    kept both as frozensets and as integer bitmasks; the bitmasks make the
    brute-force routines cheap.
    """

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(frozenset(a) for a in adj)
        self.masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    vs = list(s)
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return vs


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)
                     if v not in g.adj[u]))


def edge_count_within(g: Graph, s: Iterable[int]) -> int:
    """Number of edges of ``g`` with both endpoints in ``s``."""
    vs = set(_check_vertices(g, s))
    mask = 0
    for v in vs:
        mask |= 1 << v
    return sum((g.masks[v] & mask).bit_count() for v in vs) // 2


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` relabelled to ``0..|s|-1`` and the original ids.

    ``mapping[i]`` is the original id of new vertex ``i``; new ids follow the
    increasing order of the original ones.
    """
    mapping = tuple(sorted(set(_check_vertices(g, s))))
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(mapping), edges), mapping


def remove_vertices(g: Graph, d: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    drop = set(_check_vertices(g, d))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def check_weights(w: Sequence[int] | None, n: int) -> list[int]:
    if w is None:
        return [0] * n
    w = [int(x) for x in w]
    if len(w) != n:
        raise WeightLengthMismatch(f"{len(w)} weights for {n} vertices")
    if any(x < 0 for x in w):
        raise WeightLengthMismatch("vertex weights must be non-negative")
    return w


# -- edge-list format ------------------------------------------------------
#
#   # comment
#   n m
#   u v            (m lines)
#   weights        (optional section)
#   v w_v          (n lines)


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], count: int, lineno: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise MalformedLine(f"expected {what}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedLine(f"expected {what}", lineno) from None


def parse_instance(text: str) -> tuple[Graph, list[int]]:
    """Parse an edge-list document into a graph and its vertex weights."""
    lines = _data_lines(text)
    if not lines:
        raise MalformedHeader("missing 'n m' header", 1)
    lineno, tokens = lines[0]
    try:
        n, m = (int(t) for t in tokens) if len(tokens) == 2 else (None, None)
    except ValueError:
        n = m = None
    if n is None or n < 0 or m < 0:
        raise MalformedHeader("expected 'n m' with non-negative integers", lineno)

    body = lines[1:]
    edge_lines = body[:m]
    if len(edge_lines) < m:
        raise MalformedHeader(f"header announces {m} edges, found {len(edge_lines)}", lineno)
    seen: set[tuple[int, int]] = set()
    for ln, toks in edge_lines:
        u, v = _ints(toks, 2, ln, "'u v'")
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}", ln)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}", ln)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice", ln)
        seen.add(key)

    rest = body[m:]
    weights = [0] * n
    if rest:
        ln, toks = rest[0]
        if toks != ["weights"]:
            raise MalformedLine("unexpected data after edge list (expected 'weights')", ln)
        weights = _parse_weight_lines(rest[1:], n, ln)
    return Graph(n, seen), weights


def _parse_weight_lines(lines: list[tuple[int, list[str]]], n: int, header_line: int) -> list[int]:
    if len(lines) != n:
        raise WeightLengthMismatch(f"expected {n} weight lines, found {len(lines)}", header_line)
    weights: list[int | None] = [None] * n
    for ln, toks in lines:
        v, wv = _ints(toks, 2, ln, "'v w_v'")
        if not 0 <= v < n:
            raise VertexOutOfRange(f"weight for vertex {v} outside 0..{n - 1}", ln)
        if wv < 0:
            raise WeightLengthMismatch("vertex weights must be non-negative", ln)
        if weights[v] is not None:
            raise WeightLengthMismatch(f"weight for vertex {v} given twice", ln)
        weights[v] = wv
    return [int(x) for x in weights]  # all set: n distinct ids in range


def parse_edge_list(text: str) -> Graph:
    return parse_instance(text)[0]


def parse_weights(text: str, n: int) -> list[int]:
    """Parse a standalone weight file: optional ``weights`` line, then ``v w_v`` lines."""
    lines = _data_lines(text)
    header = 0
    if lines and lines[0][1] == ["weights"]:
        header = lines[0][0]
        lines = lines[1:]
    return _parse_weight_lines(lines, n, header)


def format_edge_list(g: Graph, weights: Sequence[int] | None = None,
                     comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    if weights is not None and any(weights):
        out.append("weights")
        out.extend(f"{v} {wv}" for v, wv in enumerate(weights))
    return "\n".join(out) + "\n"
