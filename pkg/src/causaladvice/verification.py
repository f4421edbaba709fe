"""Verifying sets and verification numbers.

An atomic intervention set verifies a DAG exactly when it is a vertex cover of
the DAG's covered edges, so the verification number ``nu1`` is a minimum vertex
cover of a forest and can be computed exactly by tree dynamic programming.
Bounded-size verifying sets pack such a cover into batches of at most ``k``
nodes with a separating labelling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import CapExceededError
from .graph import Dag, Node, sort_nodes
from .mec import CoveredForest, covered_edges
from .oracle import InterventionSet

_INF = float("inf")


class _ForestDP:
    """Min-weight vertex cover on a forest with per-node in/out constraints."""

    def __init__(self, adj: Dict[Node, set], weight: Dict[Node, int]):
        self.weight = weight
        self.order = []  # postorder
        self.kids: Dict[Node, list] = {}
        seen = set()
        for root in sort_nodes(adj):
            if root in seen:
                continue
            seen.add(root)
            stack = [(root, False)]
            while stack:
                v, done = stack.pop()
                if done:
                    self.order.append(v)
                    continue
                stack.append((v, True))
                kids = [w for w in sort_nodes(adj[v]) if w not in seen]
                seen.update(kids)
                self.kids[v] = kids
                stack.extend((w, False) for w in kids)

    def best(self, force: Dict[Node, bool]) -> float:
        inc, exc = {}, {}
        total = 0
        roots = set(self.order)
        for v in self.order:
            kids = self.kids[v]
            roots.difference_update(kids)
            i = self.weight[v] + sum(min(inc[c], exc[c]) for c in kids)
            e = sum(inc[c] for c in kids)
            f = force.get(v)
            if f is True:
                e = _INF
            elif f is False:
                i = _INF
            inc[v], exc[v] = i, e
        for r in roots:
            total += min(inc[r], exc[r])
        return total


def _forest_dp(f: CoveredForest, leaf_penalty: bool):
    adj = f.adjacency()
    big = len(adj) + 1 if leaf_penalty else 1
    weight = {v: big + (1 if leaf_penalty and len(adj[v]) == 1 else 0) for v in adj}
    return adj, _ForestDP(adj, weight)


def min_vertex_cover_forest(f: CoveredForest) -> FrozenSet[Node]:
    """Exact minimum vertex cover of a covered-edge forest.

    Among minimum covers, prefer those using fewest forest leaves, then the
    lexicographically smallest sorted node list.
    """
    adj, dp = _forest_dp(f, leaf_penalty=True)
    if not adj:
        return frozenset()
    target = dp.best({})
    force: Dict[Node, bool] = {}
    for v in sort_nodes(adj):
        force[v] = True
        if dp.best(force) != target:
            force[v] = False
    cover = frozenset(v for v, x in force.items() if x)
    assert all(u in cover or w in cover for u, w in f.arcs)
    return cover


def enumerate_min_covers(f: CoveredForest, cap: int = 10_000) -> List[FrozenSet[Node]]:
    """Every minimum-cardinality vertex cover of the forest, in lexicographic order."""
    adj, dp = _forest_dp(f, leaf_penalty=False)
    if not adj:
        return [frozenset()]
    target = dp.best({})
    nodes = sort_nodes(adj)
    out: List[FrozenSet[Node]] = []
    force: Dict[Node, bool] = {}

    def rec(i):
        if i == len(nodes):
            out.append(frozenset(v for v in nodes if force[v]))
            if len(out) > cap:
                raise CapExceededError(len(out), cap, "too many minimum covers; use psi_proxy")
            return
        v = nodes[i]
        for choice in (True, False):
            force[v] = choice
            if dp.best(force) == target:
                rec(i + 1)
        del force[v]

    rec(0)
    return out


def verifying_set_atomic(g: Dag) -> FrozenSet[Node]:
    return min_vertex_cover_forest(covered_edges(g))


def nu1(g: Dag) -> int:
    return len(verifying_set_atomic(g))


@dataclass(frozen=True)
class LabelTable:
    labels: Tuple[Tuple[int, ...], ...]  # labels[i] for element i of range(n)
    n: int
    k: int
    a: int
    ell: int

    def group(self, digit: int, letter: int) -> List[int]:
        return [i for i, lab in enumerate(self.labels) if lab[digit] == letter]


def _ceil_log(n: int, a: int) -> int:
    ell, p = 0, 1
    while p < n:
        p *= a
        ell += 1
    return ell


def separating_labels(n: int, k: int, a: int) -> LabelTable:
    """Distinct length-``ceil(log_a n)`` labels over letters ``1..a``.

    Element ``i`` with base-``a`` digits ``d_0, d_1, ...`` gets letter
    ``d_0 + 1`` in position 0 and ``(d_x + d_0) mod a + 1`` in position ``x``.
    Consecutive runs of ``a`` elements then cover every letter once per
    position, so each letter appears at most ``ceil(n/a)`` times per position.
    Letter 0 is never used, so every element lands in some batch.
    """
    if n < 2 or k < 1 or 2 * k > n:
        raise ValueError(f"need n >= 2 and 1 <= k <= n/2 (got n={n}, k={k})")
    if a < 2:
        raise ValueError("alphabet size a must be at least 2")
    ell = _ceil_log(n, a)
    labels = []
    for i in range(n):
        digits = []
        x = i
        for _ in range(ell):
            digits.append(x % a)
            x //= a
        lab = [digits[0] + 1] + [(d + digits[0]) % a + 1 for d in digits[1:]]
        labels.append(tuple(lab))
    return LabelTable(tuple(labels), n, k, a, ell)


def bounded_batches(nodes, k: int) -> List[FrozenSet[Node]]:
    """Split ``nodes`` into interventions of size <= k separating every pair."""
    nodes = sort_nodes(nodes)
    if k == 1 or len(nodes) <= 1:
        return [frozenset([v]) for v in nodes]
    kk = max(1, min(k, len(nodes) // 2))
    a = math.ceil(len(nodes) / kk)
    table = separating_labels(len(nodes), kk, a)
    batches = []
    for x in range(table.ell):
        for y in range(1, a + 1):
            s = frozenset(nodes[i] for i in table.group(x, y))
            if s:
                batches.append(s)
    return batches


def verifying_set_bounded(g: Dag, k: int) -> InterventionSet:
    if k < 1:
        raise ValueError("k must be positive")
    return InterventionSet(bounded_batches(verifying_set_atomic(g), k), k)


def separates(batches: Sequence[FrozenSet[Node]], u, v) -> bool:
    """Some batch contains exactly one of ``u``, ``v``."""
    return any((u in s) != (v in s) for s in batches)
