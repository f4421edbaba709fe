"""Closure of a partially directed graph under Meek's orientation rules R1-R4.

Rules, for an undirected edge ``a - b`` (``~`` is adjacency of any kind,
``-`` an undirected edge):

* R1: orient ``a -> b`` if some ``c -> a`` with ``c`` not adjacent to ``b``.
* R2: orient ``a -> b`` if ``a -> c -> b``.
* R3: orient ``a -> b`` if ``d - a - c``, ``d -> b <- c`` and ``c``, ``d`` non-adjacent.
* R4: orient ``a -> b`` if ``d ~ a ~ c``, ``d -> c -> b`` and ``b``, ``d`` non-adjacent.

R3 is Meek's original form.  Allowing ``d -> a <- c`` there is unsound, and
the other arrangements are already covered by R1 and R2.

The closure is a worklist fixpoint.  Edges are examined in node order, so the
sequence of rule firings (see :func:`rule_trace`) is reproducible.
"""

from __future__ import annotations

import heapq
from typing import Iterable, List, Tuple

from .errors import InconsistentGraphError
from .graph import Arc, Pdag, edge_key

RuleFiring = Tuple[str, Arc]


class _Closure:
    def __init__(self, g: Pdag):
        self.pa = {v: set(g.parents(v)) for v in g.nodes}
        self.ch = {v: set(g.children(v)) for v in g.nodes}
        self.und = {v: set(g.neighbors(v)) for v in g.nodes}
        self.adj = {v: set(g.adjacent(v)) for v in g.nodes}
        self.nodes = g.nodes
        self.heap = []
        self.queued = set()
        self.trace: List[RuleFiring] = []

    def push(self, u, v):
        k = edge_key(u, v)
        if k not in self.queued:
            self.queued.add(k)
            heapq.heappush(self.heap, (str(k[0]), str(k[1]), k))

    def push_around(self, nodes):
        for x in nodes:
            for y in self.und[x]:
                self.push(x, y)

    def orient(self, a, b):
        if b in self.und[a]:
            self.und[a].discard(b)
            self.und[b].discard(a)
        elif a in self.pa[b]:
            return False
        else:
            raise InconsistentGraphError(f"{a}->{b} conflicts with existing arc {b}->{a}")
        self.ch[a].add(b)
        self.pa[b].add(a)
        return True

    def rule(self, a, b):
        """First rule (R1..R4) forcing ``a -> b``, or None."""
        adj, pa, ch = self.adj, self.pa, self.ch
        adj_b = adj[b]
        for c in pa[a]:
            if c not in adj_b:
                return "R1"
        if ch[a] & pa[b]:
            return "R2"
        # R3 needs a - c and a - d undirected; with d -> a <- c it would fire both ways
        cand = [c for c in self.und[a] if c in pa[b]]
        if len(cand) >= 2:
            for i, c in enumerate(cand):
                for d in cand[i + 1:]:
                    if d not in adj[c]:
                        return "R3"
        adj_a = adj[a]
        for c in pa[b]:
            if c in adj_a:
                for d in pa[c]:
                    if d in adj_a and d not in adj_b and d != b:
                        return "R4"
        return None

    def run(self):
        while self.heap:
            _, _, (u, v) = heapq.heappop(self.heap)
            self.queued.discard((u, v))
            if v not in self.und[u]:
                continue
            fwd = self.rule(u, v)
            bwd = self.rule(v, u)
            if fwd and bwd:
                raise InconsistentGraphError(
                    f"edge {u}-{v} forced both ways ({fwd} and {bwd}); no consistent extension"
                )
            if not (fwd or bwd):
                continue
            a, b, rid = (u, v, fwd) if fwd else (v, u, bwd)
            self.orient(a, b)
            self.trace.append((rid, (a, b)))
            self.push_around({a, b} | self.adj[a] | self.adj[b])

    def result(self) -> Pdag:
        arcs = [(u, v) for u in self.nodes for v in self.ch[u]]
        edges = [(u, v) for u in self.nodes for v in self.und[u] if str(u) <= str(v)]
        return Pdag(self.nodes, arcs, edges)


def _closure(g: Pdag, new_arcs: Iterable[Arc] = (), full: bool = True) -> _Closure:
    st = _Closure(g)
    touched = set()
    for a, b in new_arcs:
        if st.orient(a, b):
            touched.update((a, b))
    if full:
        for u in g.nodes:
            for w in st.und[u]:
                st.push(u, w)
    else:
        around = set(touched)
        for x in touched:
            around |= st.adj[x]
        st.push_around(around)
    st.run()
    return st


def meek_closure(g: Pdag) -> Pdag:
    """Orient every edge forced by R1-R4; result is the unique fixpoint.

    Raises :class:`InconsistentGraphError` if some edge is forced both ways,
    which means ``g`` had no consistent DAG extension.
    """
    return _closure(g).result()


def rule_trace(g: Pdag) -> List[RuleFiring]:
    """Sequence of ``(rule, arc)`` firings performed by :func:`meek_closure`."""
    return _closure(g).trace


def add_and_close(g: Pdag, arcs: Iterable[Arc]) -> Pdag:
    """Orient ``arcs`` in an already closed graph and re-close incrementally.

    Only edges near the newly oriented ones are re-examined, which is what
    keeps repeated interventions cheap on long paths.
    """
    return _closure(g, arcs, full=False).result()
