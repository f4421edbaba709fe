"""Chordality testing, perfect elimination orderings and clique separators."""

from __future__ import annotations

import math
from collections import deque
from typing import FrozenSet, List, Optional

from .errors import GraphError, NotChordalError
from .graph import Node, Pdag, chain_components, connected_components, sort_nodes


def mcs_order(g: Pdag, rng=None) -> List[Node]:
    """Maximum cardinality search visit order.

    Ties go to the smallest node, or are broken uniformly at random when a
    numpy ``Generator`` is supplied.
    """
    weight = {v: 0 for v in g.nodes}
    order = []
    unvisited = set(g.nodes)
    while unvisited:
        best = max(weight[v] for v in unvisited)
        ties = sort_nodes(v for v in unvisited if weight[v] == best)
        v = ties[int(rng.integers(len(ties)))] if rng is not None else ties[0]
        order.append(v)
        unvisited.discard(v)
        for w in g.adjacent(v):
            if w in unvisited:
                weight[w] += 1
    return order


def is_perfect_elimination(g: Pdag, order: List[Node]) -> bool:
    """Each vertex's neighbours that come later in ``order`` form a clique."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adjacent(v) if pos[w] > pos[v]]
        if not later:
            continue
        # enough to check that the earliest later neighbour sees all the others
        first = min(later, key=pos.__getitem__)
        adj = g.adjacent(first)
        if any(w != first and w not in adj for w in later):
            return False
    return True


def chordless_cycle(g: Pdag) -> Optional[List[Node]]:
    """A chordless cycle of length >= 4, or None if the graph is chordal."""
    for v in sort_nodes(g.nodes):
        nb = sort_nodes(g.adjacent(v))
        closed = set(nb) | {v}
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if g.is_adjacent(u, w):
                    continue
                # shortest u..w path avoiding v's other neighbours is induced
                allowed = lambda x: x in (u, w) or x not in closed
                prev = {u: None}
                queue = deque([u])
                while queue and w not in prev:
                    x = queue.popleft()
                    for y in sort_nodes(g.adjacent(x)):
                        if y not in prev and allowed(y):
                            prev[y] = x
                            queue.append(y)
                if w in prev:
                    path = [w]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return [v] + path[::-1]
    return None


def peo_mcs(g: Pdag) -> List[Node]:
    """Perfect elimination ordering (reversed MCS order).

    Raises :class:`NotChordalError` carrying a chordless cycle otherwise.
    """
    order = mcs_order(g)[::-1]
    if not is_perfect_elimination(g, order):
        raise NotChordalError(chordless_cycle(g))
    return order


def is_chordal(g: Pdag) -> bool:
    return is_perfect_elimination(g, mcs_order(g)[::-1])


def maximal_cliques(g: Pdag) -> List[FrozenSet[Node]]:
    """Maximal cliques of a chordal graph, read off a perfect elimination ordering."""
    order = peo_mcs(g)
    pos = {v: i for i, v in enumerate(order)}
    cands = []
    for v in order:
        cands.append(frozenset([v] + [w for w in g.adjacent(v) if pos[w] > pos[v]]))
    cands.sort(key=len, reverse=True)
    out: List[FrozenSet[Node]] = []
    for c in cands:
        if not any(c <= k for k in out):
            out.append(c)
    out.sort(key=lambda c: sort_nodes(map(str, c)))
    return out


def _largest_component(g: Pdag, removed) -> int:
    rest = g.nodes - removed
    return max((len(c) for c in connected_components(g, rest)), default=0)


def is_clique(g: Pdag, nodes) -> bool:
    nodes = list(nodes)
    return all(g.is_adjacent(u, w) for i, u in enumerate(nodes) for w in nodes[i + 1:])


def half_clique_separator(g: Pdag) -> FrozenSet[Node]:
    """Clique whose removal leaves components of at most ``ceil(n/2)`` nodes.

    Candidates are the maximal cliques and each of them minus one vertex; the
    smallest valid candidate wins, then the most balanced, then node order.
    """
    n = len(g.nodes)
    if n < 2:
        raise GraphError("separator needs at least two nodes")
    if len(connected_components(g)) != 1:
        raise GraphError("separator input must be connected")
    cliques = maximal_cliques(g)
    limit = math.ceil(n / 2)
    best = None
    seen = set()
    for k in cliques:
        for cand in [k] + [k - {v} for v in sort_nodes(k)]:
            if not cand or cand in seen:
                continue
            seen.add(cand)
            big = _largest_component(g, cand)
            if big > limit:
                continue
            key = (len(cand), big, sort_nodes(map(str, cand)))
            if best is None or key < best[0]:
                best = (key, cand)
    if best is None:  # pragma: no cover - excluded by the separator theorem
        raise GraphError("no balanced clique separator found")
    sep = best[1]
    assert is_clique(g, sep) and _largest_component(g, sep) <= limit
    return sep


def chain_components_chordal(g: Pdag) -> bool:
    """Every chain component (undirected part) of ``g`` is chordal."""
    und = Pdag(g.nodes, edges=g.edges)
    return all(is_chordal(und.induced_subgraph(c)) for c in chain_components(g) if len(c) > 3)
