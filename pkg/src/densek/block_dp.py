"""Densest/Sparsest k-Subgraph with vertex weights on block graphs.

Dynamic programming over the block-cut tree.  Every table carries a leading
batch axis so that many weight vectors over the same graph can be solved in
one pass (the deletion framework needs one solve per guessed subset).

Internally everything maximizes ``sign * value`` with ``-inf`` as the
invalid-state sentinel; Sparsest runs with ``sign = -1``.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .blocks import BlockCutTree, blocks_are_cliques, build_block_cut_tree
from .errors import NotBlockGraph
from .graph import Graph, check_weights
from .oracle import Objective, SolveResult, check_k, verify_result

NEG = -np.inf


def _maxplus(a: np.ndarray, b: np.ndarray, cap: int) -> np.ndarray:
    """out[..., l] = max_{i+j=l} a[..., i] + b[..., j] for l <= cap.

    Output length is trimmed to what the inputs can reach.
    """
    la, lb = a.shape[-1], b.shape[-1]
    lead = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    if la > lb:
        a, b, la, lb = b, a, lb, la
    length = min(cap, la + lb - 2) + 1
    out = np.full(lead + (length,), NEG)
    for i in range(min(la, length)):
        span = min(lb, length - i)
        np.maximum(out[..., i:i + span], a[..., i:i + 1] + b[..., :span],
                   out=out[..., i:i + span])
    return out


def knapsack_merge(a: Sequence[float], b: Sequence[float], cap: int,
                   obj: Objective = Objective.DENSEST) -> np.ndarray:
    """Min/max-plus convolution of two size-indexed tables, indices 0..cap.

    Invalid entries are ``-inf`` (Densest) or ``+inf`` (Sparsest) and absorb
    any addition.
    """
    obj = Objective.parse(obj)
    s = obj.sign
    a = s * np.asarray(a, dtype=float)[: cap + 1]
    b = s * np.asarray(b, dtype=float)[: cap + 1]
    out = np.full(cap + 1, NEG)
    merged = _maxplus(a, b, cap)
    out[: merged.shape[-1]] = merged
    return s * out


def _pad(x: np.ndarray, length: int) -> np.ndarray:
    if x.shape[-1] >= length:
        return x[..., :length]
    out = np.full(x.shape[:-1] + (length,), NEG)
    out[..., : x.shape[-1]] = x
    return out


class _Trace:
    """Intermediate tables kept for witness reconstruction (batch size 1)."""

    def __init__(self):
        self.leaf_order: dict[int, list[int]] = {}
        self.steps: dict[int, list[tuple[int, np.ndarray, np.ndarray, np.ndarray]]] = {}
        self.inner: dict[int, np.ndarray] = {}
        self.cut: dict[int, list[np.ndarray]] = {}
        self.tables: dict[int, np.ndarray] = {}
        self.components: list[np.ndarray] = []
        self.roots: list[int] = []


class BlockDP:
    """Solver bound to one block graph; reusable across weights and k."""

    def __init__(self, g: Graph, tree: BlockCutTree | None = None):
        tree = tree or build_block_cut_tree(g)
        if not blocks_are_cliques(g, tree):
            raise NotBlockGraph("some block is not a clique")
        self.g = g
        self.tree = tree
        self.cut_set = set(tree.cut_vertices)
        # |V_i| per block: its own vertices plus everything hanging below it.
        size = [0] * len(tree.blocks)
        self.orders = [tree.postorder(r) for r in tree.roots]
        for order in self.orders:
            for b in order:
                size[b] = len(tree.blocks[b]) + sum(
                    size[j] - 1 for c in tree.child_cuts[b] for j in tree.child_blocks[c])
        self.size = size

    # -- forward pass ------------------------------------------------------

    def _leaf(self, i: int, v: int, W: np.ndarray, k: int, sign: int,
              trace: _Trace | None) -> np.ndarray:
        us = [u for u in self.tree.blocks[i] if u != v]
        m = len(us)
        L = min(k, m + 1)
        sw = W[:, us]
        desc = -np.sort(-sw, axis=1)
        pref = np.zeros((W.shape[0], m + 1))
        np.cumsum(desc, axis=1, out=pref[:, 1:])
        ls = np.arange(L + 1)
        clique = sign * (ls * (ls - 1) / 2)
        A = np.full((W.shape[0], 2, L + 1), NEG)
        top0 = min(m, L)
        A[:, 0, : top0 + 1] = clique[: top0 + 1] + pref[:, : top0 + 1]
        # p = 1 runs up to the whole block: v plus all m others.
        A[:, 1, 1:] = clique[1:] + pref[:, :L] + W[:, v : v + 1]
        if trace is not None:
            trace.leaf_order[i] = sorted(us, key=lambda u: (-sw[0, us.index(u)], u))
        return A

    def _cut(self, c: int, tables: dict[int, np.ndarray], W: np.ndarray, k: int,
             trace: _Trace | None) -> np.ndarray:
        kids = self.tree.child_blocks[c]
        acc = tables[kids[0]]
        history = [acc]
        for j in kids[1:]:
            Aj = tables[j]
            p0 = _maxplus(Aj[:, 0], acc[:, 0], k)
            # p = 1: c is counted in both operands, so sizes add to l + 1
            # and c's weight must be taken off once.
            p1 = _maxplus(Aj[:, 1], acc[:, 1], k + 1)[:, 1:] - W[:, c : c + 1]
            length = max(p0.shape[-1], p1.shape[-1])
            acc = np.stack([_pad(p0, length), _pad(p1, length)], axis=1)
            history.append(acc)
        if trace is not None:
            trace.cut[c] = history
        return acc

    def _block(self, i: int, v: int | None, tables: dict[int, np.ndarray],
               cut_tables: dict[int, np.ndarray], W: np.ndarray, k: int, sign: int,
               trace: _Trace | None) -> np.ndarray:
        batch = W.shape[0]
        us = [u for u in self.tree.blocks[i] if u != v]
        La = min(k, self.size[i] - (v is not None))
        a = np.full((batch, 1, 1), 0.0)
        steps = []
        for u in us:
            if u in cut_tables:
                w0, w1 = cut_tables[u][:, 0], cut_tables[u][:, 1]
            else:
                w0 = np.zeros((batch, 1))
                w1 = np.full((batch, 2), NEG)
                w1[:, 1] = W[:, u]
            alphas = min(a.shape[1] + 1, La + 1)
            new = np.full((batch, alphas, La + 1), NEG)
            c0 = _maxplus(a, w0[:, None, :], La)
            new[:, : c0.shape[1], : c0.shape[2]] = c0
            c1 = _maxplus(a[:, : alphas - 1], w1[:, None, :], La)
            np.maximum(new[:, 1 : 1 + c1.shape[1], : c1.shape[2]], c1,
                       out=new[:, 1 : 1 + c1.shape[1], : c1.shape[2]])
            if trace is not None:
                steps.append((u, w0[0], w1[0], a[0]))
            a = new
        if trace is not None:
            trace.steps[i] = steps
            trace.inner[i] = a[0]

        al = np.arange(a.shape[1])
        inside = sign * (al * (al - 1) / 2)
        best0 = (a + inside[None, :, None]).max(axis=1)
        if v is None:
            return best0
        L = min(k, self.size[i])
        A = np.full((batch, 2, L + 1), NEG)
        A[:, 0, : best0.shape[-1]] = best0
        with_v = sign * (al * (al + 1) / 2)
        best1 = (a + with_v[None, :, None]).max(axis=1) + W[:, v : v + 1]
        top = min(L, best1.shape[-1])
        A[:, 1, 1 : top + 1] = best1[:, :top]
        return A

    def _run(self, W: np.ndarray, k: int, sign: int, trace: _Trace | None) -> np.ndarray:
        tree = self.tree
        results = []
        for root, order in zip(tree.roots, self.orders):
            tables: dict[int, np.ndarray] = {}
            for i in order:
                v = tree.parent_cut[i]
                cut_tables = {c: self._cut(c, tables, W, k, trace) for c in tree.child_cuts[i]}
                if v is not None and not cut_tables:
                    tables[i] = self._leaf(i, v, W, k, sign, trace)
                else:
                    tables[i] = self._block(i, v, tables, cut_tables, W, k, sign, trace)
                for c in tree.child_cuts[i]:
                    for j in tree.child_blocks[c]:
                        if trace is None:
                            del tables[j]
            if trace is not None:
                trace.tables.update(tables)
                trace.roots.append(root)
            results.append(tables[root])
        total = np.zeros((W.shape[0], 1))
        history = [total]
        for r in results:
            total = _maxplus(total, r, k)
            history.append(total)
        if trace is not None:
            trace.components = history
        return _pad(total, k + 1)

    # -- public entry points -------------------------------------------------

    def profile(self, weights: np.ndarray, k: int, obj: Objective = Objective.DENSEST) -> np.ndarray:
        """Optimal values for every size 0..k and every row of ``weights``.

        ``weights`` has shape (batch, n).  Returns shape (batch, k+1); sizes
        that cannot be realized hold ``-inf`` (Densest) or ``+inf`` (Sparsest).
        """
        obj = Objective.parse(obj)
        W = np.atleast_2d(np.asarray(weights, dtype=float)) * obj.sign
        if W.shape[1] != self.g.n:
            raise ValueError(f"weights have {W.shape[1]} columns, graph has {self.g.n} vertices")
        return obj.sign * self._run(W, k, obj.sign, None)

    def solve(self, w: Sequence[int] | None, k: int,
              obj: Objective = Objective.DENSEST) -> SolveResult:
        obj = Objective.parse(obj)
        w = check_weights(w, self.g.n)
        check_k(k, self.g.n)
        sign = obj.sign
        W = sign * np.asarray([w], dtype=float)
        trace = _Trace()
        total = self._run(W, k, sign, trace)
        value = total[0, k]
        witness: list[int] = []
        self._take_components(k, W[0], sign, trace, witness)
        res = SolveResult(int(round(sign * value)), tuple(sorted(witness)), "block-dp")
        return verify_result(self.g, w, k, res)

    # -- witness reconstruction ---------------------------------------------

    def _take_components(self, k, W, sign, trace, out):
        hist = trace.components
        ell = k
        for idx in range(len(hist) - 1, 0, -1):
            target = hist[idx][0, ell]
            prev = hist[idx - 1][0]
            comp = trace.tables[trace.roots[idx - 1]][0]
            for take in range(min(ell, comp.shape[-1] - 1) + 1):
                rest = ell - take
                if rest < prev.shape[-1] and prev[rest] + comp[take] == target:
                    break
            else:
                raise AssertionError("component split not found")
            self._drain([(self._take_block, trace.roots[idx - 1], 0, take)], W, sign, trace, out)
            ell = rest

    @staticmethod
    def _drain(todo, W, sign, trace, out):
        # Explicit work list instead of recursion: block-cut trees can be deep.
        while todo:
            step, node, p, ell = todo.pop()
            step(node, p, ell, W, sign, trace, out, todo)

    def _take_block(self, i, p, ell, W, sign, trace, out, todo):
        if i in trace.leaf_order:
            out.extend(trace.leaf_order[i][: ell - p])
            return
        a = trace.inner[i]
        al = np.arange(a.shape[0])
        if p == 0:
            la = ell
            scores = a[:, la] + sign * (al * (al - 1) / 2)
        else:
            la = ell - 1
            scores = a[:, la] + sign * (al * (al + 1) / 2)
        alpha = int(np.argmax(scores))
        for u, w0, w1, old in reversed(trace.steps[i]):
            target = a[alpha, la]
            choice, part = self._find_step(old, w0, w1, alpha, la, target)
            if u in trace.cut:
                todo.append((self._take_cut, u, choice, part))
            elif choice:
                out.append(u)
            alpha -= choice
            la -= part
            a = old

    @staticmethod
    def _find_step(old, w0, w1, alpha, la, target):
        for choice, wt in ((0, w0), (1, w1)):
            prev_alpha = alpha - choice
            if prev_alpha < 0 or prev_alpha >= old.shape[0]:
                continue
            for part in range(min(la, wt.shape[-1] - 1) + 1):
                rest = la - part
                if rest < old.shape[1] and old[prev_alpha, rest] + wt[part] == target:
                    return choice, part
        raise AssertionError("block step not found")

    def _take_cut(self, c, p, ell, W, sign, trace, out, todo):
        if p:
            out.append(c)
        kids = self.tree.child_blocks[c]
        history = trace.cut[c]
        for s in range(len(kids) - 1, 0, -1):
            target = history[s][0, p, ell]
            prev = history[s - 1][0, p]
            Aj = trace.tables[kids[s]][0, p]
            for part in range(min(ell + p, Aj.shape[-1] - 1) + 1):
                rest = ell - part + p
                if 0 <= rest < prev.shape[-1] and Aj[part] + prev[rest] - p * W[c] == target:
                    break
            else:
                raise AssertionError("cut split not found")
            todo.append((self._take_block, kids[s], p, part))
            ell = rest
        todo.append((self._take_block, kids[0], p, ell))


def solve_block_weighted(g: Graph, w: Sequence[int] | None, k: int,
                         obj: Objective = Objective.DENSEST) -> SolveResult:
    return BlockDP(g).solve(w, k, obj)
