"""Clique-width expressions: AST, text syntax, evaluation, cograph construction.

Concrete syntax::

    expr := "i(" INT ")"                  create a vertex with a label
          | "u(" expr "," expr ")"        disjoint union
          | "e(" INT "," INT "," expr ")" join every i-vertex to every j-vertex
          | "r(" INT "," INT "," expr ")" relabel i to j

Vertices are numbered 0, 1, 2, ... in the left-to-right order of their
``i(...)`` nodes.  Parser, emitter and evaluator are iterative so long
union chains do not hit the recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union as _U

from .errors import BadLabel, ExpressionSyntaxError, JoinSameLabel, NotCograph, RelabelSameLabel
from .graph import Graph


@dataclass(frozen=True)
class Introduce:
    label: int

    def __post_init__(self):
        if self.label < 1:
            raise BadLabel(f"label {self.label} < 1")


@dataclass(frozen=True)
class Union:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: Expr

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise BadLabel(f"label {min(self.i, self.j)} < 1")
        if self.i == self.j:
            raise JoinSameLabel(f"join of label {self.i} with itself")


@dataclass(frozen=True)
class Relabel:
    i: int
    j: int
    child: Expr

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise BadLabel(f"label {min(self.i, self.j)} < 1")
        if self.i == self.j:
            raise RelabelSameLabel(f"relabel of label {self.i} to itself")


Expr = _U[Introduce, Union, Join, Relabel]


def children(e: Expr) -> tuple[Expr, ...]:
    if isinstance(e, Introduce):
        return ()
    if isinstance(e, Union):
        return (e.left, e.right)
    return (e.child,)


def postorder(e: Expr) -> list[Expr]:
    """Nodes with children first; union children left before right."""
    out: list[Expr] = []
    stack: list[tuple[Expr, bool]] = [(e, False)]
    while stack:
        node, done = stack.pop()
        if done:
            out.append(node)
            continue
        stack.append((node, True))
        for ch in reversed(children(node)):
            stack.append((ch, False))
    return out


def flatten(e: Expr) -> list[tuple[Expr, tuple[int, ...]]]:
    """Post-order node list; each entry carries the list positions of its children.

    Positions rather than object identity, so an AST that reuses one subtree
    object in two places still denotes two disjoint copies.
    """
    out: list[tuple[Expr, tuple[int, ...]]] = []
    stack: list[tuple[Expr, list[int] | None, list[int]]] = [(e, None, [])]
    while stack:
        node, slots, parent_slots = stack.pop()
        if slots is None:
            slots = []
            stack.append((node, slots, parent_slots))
            for ch in reversed(children(node)):
                stack.append((ch, None, slots))
            continue
        parent_slots.append(len(out))
        out.append((node, tuple(slots)))
    return out


def label_count(e: Expr) -> int:
    """The ``c`` of the expression: largest label it mentions."""
    c = 0
    for node in postorder(e):
        if isinstance(node, Introduce):
            c = max(c, node.label)
        elif isinstance(node, (Join, Relabel)):
            c = max(c, node.i, node.j)
    return c


def vertex_count(e: Expr) -> int:
    return sum(isinstance(x, Introduce) for x in postorder(e))


def depth(e: Expr) -> int:
    d: list[int] = []
    for _, kids in flatten(e):
        d.append(1 + max((d[c] for c in kids), default=0))
    return d[-1]


# -- text ------------------------------------------------------------------

_ARITY = {"i": ("int",), "u": ("expr", "expr"), "e": ("int", "int", "expr"), "r": ("int", "int", "expr")}


def _strip_comments(text: str) -> str:
    return "\n".join("" if ln.lstrip().startswith("#") else ln for ln in text.splitlines())


def parse_expression(text: str) -> Expr:
    text = _strip_comments(text)
    pos = 0
    n = len(text)
    # Each frame: [op, args, start position]
    frames: list[list] = []
    result: Expr | None = None

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect_next() -> str:
        frame = frames[-1]
        return _ARITY[frame[0]][len(frame[1])]

    while True:
        skip_ws()
        if result is not None and not frames:
            if pos != n:
                raise ExpressionSyntaxError("trailing input after expression", pos)
            return result
        if pos >= n:
            raise ExpressionSyntaxError("unexpected end of input", pos)
        if frames and len(frames[-1][1]) == len(_ARITY[frames[-1][0]]):
            if text[pos] != ")":
                raise ExpressionSyntaxError("expected ')'", pos)
            pos += 1
            op, args, _ = frames.pop()
            node = _build(op, args)
            if frames:
                frames[-1][1].append(node)
                skip_ws()
                if len(frames[-1][1]) < len(_ARITY[frames[-1][0]]):
                    if pos >= n or text[pos] != ",":
                        raise ExpressionSyntaxError("expected ','", pos)
                    pos += 1
            else:
                result = node
            continue
        want = expect_next() if frames else "expr"
        ch = text[pos]
        if want == "expr":
            if ch not in _ARITY:
                raise ExpressionSyntaxError(f"expected one of i, u, e, r but found {ch!r}", pos)
            start = pos
            pos += 1
            skip_ws()
            if pos >= n or text[pos] != "(":
                raise ExpressionSyntaxError("expected '('", pos)
            pos += 1
            frames.append([ch, [], start])
            continue
        # integer label
        start = pos
        if ch == "-":
            pos += 1
        while pos < n and text[pos].isdigit():
            pos += 1
        token = text[start:pos]
        if token in ("", "-"):
            raise ExpressionSyntaxError("expected a label", start)
        value = int(token)
        if value < 1:
            raise BadLabel(f"label {value} < 1 at position {start}")
        if token.startswith("0"):
            raise ExpressionSyntaxError("labels have no leading zeros", start)
        frames[-1][1].append(value)
        skip_ws()
        if len(frames[-1][1]) < len(_ARITY[frames[-1][0]]):
            if pos >= n or text[pos] != ",":
                raise ExpressionSyntaxError("expected ','", pos)
            pos += 1


def _build(op: str, args: list) -> Expr:
    if op == "i":
        return Introduce(args[0])
    if op == "u":
        return Union(args[0], args[1])
    if op == "e":
        return Join(args[0], args[1], args[2])
    return Relabel(args[0], args[1], args[2])


def emit_expression(e: Expr) -> str:
    text: list[str] = []
    for node, kids in flatten(e):
        if isinstance(node, Introduce):
            s = f"i({node.label})"
        elif isinstance(node, Union):
            s = f"u({text[kids[0]]},{text[kids[1]]})"
        elif isinstance(node, Join):
            s = f"e({node.i},{node.j},{text[kids[0]]})"
        else:
            s = f"r({node.i},{node.j},{text[kids[0]]})"
        text.append(s)
    return text[-1]


def make_irredundant(e: Expr) -> Expr:
    """Equivalent expression in which no join touches an existing edge.

    A join on labels (p, q) is redundant when some ancestor join, seen through
    the relabelings in between, connects exactly the classes p and q end up
    in: that ancestor re-creates every edge the inner join made.  Dropping
    all such joins leaves the denoted graph unchanged, and afterwards every
    join adds only new edges.
    """
    nodes = flatten(e)
    parent = [-1] * len(nodes)
    for pos, (_, kids) in enumerate(nodes):
        for ch in kids:
            parent[ch] = pos
    # Label pairs that some ancestor join will connect, in this node's labels.
    covered: list[frozenset[frozenset[int]]] = [frozenset()] * len(nodes)
    redundant = [False] * len(nodes)
    for pos in range(len(nodes) - 1, -1, -1):
        node, _ = nodes[pos]
        p = parent[pos]
        above = covered[p] if p >= 0 else frozenset()
        pnode = nodes[p][0] if p >= 0 else None
        if isinstance(pnode, Relabel):
            i, j = pnode.i, pnode.j

            def preimage(x: int) -> tuple[int, ...]:
                return (x, i) if x == j else (() if x == i else (x,))

            above = frozenset(
                frozenset((a, b)) for pair in above for x, y in [tuple(pair)]
                for a in preimage(x) for b in preimage(y) if a != b)
        elif isinstance(pnode, Join):
            above = above | {frozenset((pnode.i, pnode.j))}
        covered[pos] = above
        if isinstance(node, Join) and frozenset((node.i, node.j)) in above:
            redundant[pos] = True

    built: list[Expr] = []
    for pos, (node, kids) in enumerate(nodes):
        if isinstance(node, Introduce):
            out: Expr = node
        elif isinstance(node, Union):
            out = Union(built[kids[0]], built[kids[1]])
        elif isinstance(node, Join):
            out = built[kids[0]] if redundant[pos] else Join(node.i, node.j, built[kids[0]])
        else:
            out = Relabel(node.i, node.j, built[kids[0]])
        built.append(out)
    return built[-1]


# -- evaluation ------------------------------------------------------------

@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]


def realize(e: Expr) -> LabeledGraph:
    """Build the labelled graph an expression denotes."""
    labels: list[int] = []
    edges: set[tuple[int, int]] = set()
    # Per-node map label -> vertices currently carrying it.
    groups: dict[int, dict[int, list[int]]] = {}
    for pos, (node, kids) in enumerate(flatten(e)):
        if isinstance(node, Introduce):
            v = len(labels)
            labels.append(node.label)
            groups[pos] = {node.label: [v]}
        elif isinstance(node, Union):
            left = groups.pop(kids[0])
            for lab, vs in groups.pop(kids[1]).items():
                left.setdefault(lab, []).extend(vs)
            groups[pos] = left
        elif isinstance(node, Join):
            g = groups.pop(kids[0])
            for a in g.get(node.i, ()):
                for b in g.get(node.j, ()):
                    edges.add((a, b) if a < b else (b, a))
            groups[pos] = g
        else:
            g = groups.pop(kids[0])
            moved = g.pop(node.i, [])
            if moved:
                g.setdefault(node.j, []).extend(moved)
            groups[pos] = g
    final = groups[pos]
    for lab, vs in final.items():
        for v in vs:
            labels[v] = lab
    return LabeledGraph(Graph(len(labels), edges), tuple(labels))


# -- cographs --------------------------------------------------------------

def _components(vertices: list[int], adjacent) -> list[list[int]]:
    remaining = set(vertices)
    comps = []
    for s in vertices:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            nxt = [y for y in remaining if adjacent(x, y)]
            for y in nxt:
                remaining.discard(y)
            comp.extend(nxt)
            stack.extend(nxt)
        comps.append(sorted(comp))
    return sorted(comps)


def _chain_union(parts: list[Expr]) -> Expr:
    e = parts[0]
    for p in parts[1:]:
        e = Union(e, p)
    return e


def cograph_to_expression(g: Graph) -> tuple[Expr, tuple[int, ...]]:
    """A 2-label expression for cograph ``g`` and the vertex mapping.

    ``mapping[i]`` is the vertex of ``g`` created by the ``i``-th introduce
    node.  Every subexpression built here leaves all its vertices on label 1.
    Raises NotCograph when some induced subgraph on two or more vertices is
    connected with a connected complement (that is, ``g`` contains a P4).
    """
    if g.n == 0:
        raise NotCograph("the empty graph has no expression")
    mapping: list[int] = []

    def build(vertices: list[int]) -> Expr:
        if len(vertices) == 1:
            mapping.append(vertices[0])
            return Introduce(1)
        comps = _components(vertices, g.has_edge)
        if len(comps) > 1:
            return _chain_union([build(c) for c in comps])
        co = _components(vertices, lambda x, y: x != y and not g.has_edge(x, y))
        if len(co) == 1:
            raise NotCograph(f"induced P4 among vertices {vertices}")
        e = build(co[0])
        for part in co[1:]:
            e = Relabel(2, 1, Join(1, 2, Union(e, Relabel(1, 2, build(part)))))
        return e

    expr = build(list(range(g.n)))
    return expr, tuple(mapping)


def is_cograph(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        cograph_to_expression(g)
    except NotCograph:
        return False
    return True
