"""Markov equivalence machinery.

Essential graphs, brute-force enumeration of equivalence classes, covered
edges and the covered-edge reversal tools used to move around inside a class:
Chickering's transformation sequence and the conditional-root-greedy matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

from .errors import CapExceededError, GraphError
from .graph import (
    Arc,
    Dag,
    Node,
    Pdag,
    direct_children,
    is_valid_order,
    pair_sort_key,
    topological_order,
    v_structures,
)
from .meek import meek_closure


def essential_graph(g: Dag) -> Pdag:
    """Skeleton with v-structures oriented, closed under Meek rules."""
    arcs = set()
    for u, v, w in v_structures(g):
        arcs.add((u, v))
        arcs.add((w, v))
    return meek_closure(Pdag(g.nodes, arcs, g.pairs() - {_pair(a) for a in arcs}))


def _pair(arc):
    u, v = arc
    return (u, v) if str(u) <= str(v) else (v, u)


def same_mec(g1: Dag, g2: Dag) -> bool:
    if g1.nodes != g2.nodes:
        raise GraphError("graphs have different node sets")
    return g1.pairs() == g2.pairs() and v_structures(g1) == v_structures(g2)


def enumerate_mec(e: Pdag, cap: int = 100_000) -> List[Dag]:
    """All consistent extensions of ``e`` that create no new v-structure.

    Backtracks over the undirected edges in node order, pruning on directed
    cycles and on new colliders.  Output is sorted by arc set.
    """
    edges = sorted(e.edges, key=pair_sort_key)
    pa = {v: set(e.parents(v)) for v in e.nodes}
    ch = {v: set(e.children(v)) for v in e.nodes}
    adj = {v: e.adjacent(v) for v in e.nodes}
    out: List[Dag] = []

    def reaches(src, dst):
        stack, seen = [src], {src}
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for y in ch[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def ok(a, b):
        # a -> b must not close a cycle nor form a fresh collider at b
        if reaches(b, a):
            return False
        return all(w in adj[a] for w in pa[b])

    def rec(i):
        if i == len(edges):
            out.append(Dag(e.nodes, [(u, v) for u in e.nodes for v in ch[u]]))
            if len(out) > cap:
                raise CapExceededError(len(out), cap, "member count exceeds cap")
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if ok(a, b):
                ch[a].add(b)
                pa[b].add(a)
                rec(i + 1)
                ch[a].discard(b)
                pa[b].discard(a)

    rec(0)
    out.sort(key=lambda d: sorted((str(u), str(v)) for u, v in d.arcs))
    return out


@dataclass(frozen=True)
class CoveredForest:
    """Covered edges of a DAG.  The edge-induced subgraph is a forest."""

    arcs: FrozenSet[Arc]

    @property
    def nodes(self) -> FrozenSet[Node]:
        return frozenset(x for a in self.arcs for x in a)

    def adjacency(self) -> Dict[Node, set]:
        adj: Dict[Node, set] = {}
        for u, v in self.arcs:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    def __iter__(self):
        return iter(sorted(self.arcs, key=pair_sort_key))

    def __len__(self):
        return len(self.arcs)

    def __contains__(self, arc):
        return arc in self.arcs


def is_covered(g: Dag, u, v) -> bool:
    return (u, v) in g.arcs and g.parents(u) == g.parents(v) - {u}


def covered_edges(g: Dag) -> CoveredForest:
    return CoveredForest(frozenset(a for a in g.arcs if is_covered(g, *a)))


def reverse_covered_edge(g: Dag, arc: Arc) -> Dag:
    x, y = arc
    if not is_covered(g, x, y):
        raise GraphError(f"{x}->{y} is not a covered edge; reversing it leaves the equivalence class")
    return g.reverse_arc(x, y)


def chickering_sequence(gs: Dag, gt: Dag) -> List[Arc]:
    """Covered-edge reversals turning ``gs`` into ``gt``.

    Each step takes the lowest-ranked node ``y`` with a parent along a differing
    arc and reverses the arc from its highest-ranked such parent ``x``.  Ranks
    come from :func:`topological_order` of the current graph.
    """
    if not same_mec(gs, gt):
        raise GraphError("graphs are not Markov equivalent")
    seq: List[Arc] = []
    cur = gs
    while cur.arcs != gt.arcs:
        pi = topological_order(cur)
        diff = cur.arcs - gt.arcs
        heads: Dict[Node, set] = {}
        for u, v in diff:
            heads.setdefault(v, set()).add(u)
        y = min(heads, key=pi.__getitem__)
        x = max(heads[y], key=pi.__getitem__)
        seq.append((x, y))
        cur = reverse_covered_edge(cur, (x, y))
    return seq


def crg_matching(g: Dag, pi: Dict[Node, int], s=frozenset()) -> FrozenSet[Arc]:
    """Conditional-root-greedy maximal matching on the covered edges.

    Repeatedly take the remaining covered arc whose tail has the smallest rank;
    among that tail's arcs choose the head minimising
    ``rank + n**2 * [arc in s]`` (arcs outside ``s`` are favoured).
    """
    if not is_valid_order(g, pi):
        raise GraphError("ordering is not valid for the graph")
    n2 = len(g.nodes) ** 2
    s = frozenset(s)
    remaining = set(covered_edges(g).arcs)
    matching = set()
    while remaining:
        x = min((u for u, _ in remaining), key=pi.__getitem__)
        y = min((v for u, v in remaining if u == x), key=lambda z: pi[z] + (n2 if (x, z) in s else 0))
        matching.add((x, y))
        remaining = {(u, v) for u, v in remaining if not {u, v} & {x, y}}
    return frozenset(matching)


def reorder_after_reversal(g: Dag, pi: Dict[Node, int], arc: Arc) -> Dict[Node, int]:
    """Rank update accompanying the reversal of covered edge ``x -> y``.

    With ``u`` the lowest-ranked direct child of ``x``: ``y`` takes the rank of
    ``x``, ``x`` takes the rank of ``u`` and ``u`` takes the rank of ``y``.
    When ``u == y`` this is a plain swap.
    """
    x, y = arc
    u = min(direct_children(g, x), key=pi.__getitem__)
    new = dict(pi)
    new[y] = pi[x]
    new[x] = pi[u]
    if u != y:
        new[u] = pi[y]
    return new


def covered_forest_ok(f: CoveredForest, g: Optional[Dag] = None) -> bool:
    """Check the forest, unique-head and direct-child properties."""
    heads = [v for _, v in f.arcs]
    if len(heads) != len(set(heads)):
        return False
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for u, v in f.arcs:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    if g is not None:
        return all(v in direct_children(g, u) for u, v in f.arcs)
    return True
