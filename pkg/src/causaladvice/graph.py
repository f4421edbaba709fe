"""Partially directed graphs and the basic queries on them.

A single immutable carrier, :class:`Pdag`, holds a node set, directed arcs and
undirected edges.  :class:`Dag` and :class:`UGraph` are the fully oriented and
fully unoriented special cases.  Nodes are any hashable tokens; everywhere a
choice between nodes has to be made the smallest ``str(node)`` wins, which makes
every algorithm in the package deterministic.
"""

from __future__ import annotations

import heapq
import json
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Tuple

from .errors import CycleError, GraphError

Node = Hashable
Arc = Tuple[Node, Node]


def node_key(v) -> str:
    return str(v)


def sort_nodes(nodes: Iterable[Node]) -> List[Node]:
    return sorted(nodes, key=str)


def edge_key(u, v) -> Tuple[Node, Node]:
    """Canonical (low, high) form of an unordered pair."""
    return (u, v) if str(u) <= str(v) else (v, u)


def pair_sort_key(pair):
    return (str(pair[0]), str(pair[1]))


class Pdag:
    """Immutable partially directed graph.

    Parameters
    ----------
    nodes:
        Node tokens.  Endpoints of ``arcs``/``edges`` are added automatically.
    arcs:
        Ordered pairs ``(tail, head)``.
    edges:
        Unordered pairs; stored as ``(low, high)`` under the node order.
    """

    __slots__ = ("nodes", "arcs", "edges", "_adj")

    def __init__(self, nodes: Iterable[Node] = (), arcs: Iterable[Arc] = (), edges: Iterable[Arc] = ()):
        arcs = frozenset((u, v) for u, v in arcs)
        edges = frozenset(edge_key(u, v) for u, v in edges)
        node_set = set(nodes)
        seen = set()
        for u, v in arcs:
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            k = edge_key(u, v)
            if k in seen:
                raise GraphError(f"duplicate pair {k[0]!r}-{k[1]!r}")
            seen.add(k)
            node_set.update((u, v))
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            if (u, v) in seen:
                raise GraphError(f"duplicate pair {u!r}-{v!r}")
            node_set.update((u, v))
        self.nodes: FrozenSet[Node] = frozenset(node_set)
        self.arcs: FrozenSet[Arc] = arcs
        self.edges: FrozenSet[Arc] = edges
        self._adj = None

    # adjacency bookkeeping is built on first use
    def _build(self):
        pa = {v: set() for v in self.nodes}
        ch = {v: set() for v in self.nodes}
        nb = {v: set() for v in self.nodes}
        for u, v in self.arcs:
            ch[u].add(v)
            pa[v].add(u)
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        adj = {v: pa[v] | ch[v] | nb[v] for v in self.nodes}
        self._adj = (pa, ch, nb, adj)
        return self._adj

    @property
    def _tables(self):
        return self._adj if self._adj is not None else self._build()

    def parents(self, v) -> set:
        return self._tables[0][v]

    def children(self, v) -> set:
        return self._tables[1][v]

    def neighbors(self, v) -> set:
        """Nodes joined to ``v`` by an undirected edge."""
        return self._tables[2][v]

    def adjacent(self, v) -> set:
        return self._tables[3][v]

    def is_adjacent(self, u, v) -> bool:
        return v in self._tables[3][u]

    def has_arc(self, u, v) -> bool:
        return (u, v) in self.arcs

    def has_edge(self, u, v) -> bool:
        return edge_key(u, v) in self.edges

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    def pairs(self) -> FrozenSet[Arc]:
        """All adjacencies as canonical unordered pairs."""
        return frozenset(edge_key(u, v) for u, v in self.arcs) | self.edges

    def is_fully_oriented(self) -> bool:
        return not self.edges

    def induced_subgraph(self, nodes: Iterable[Node]) -> "Pdag":
        keep = frozenset(nodes)
        return Pdag(
            keep,
            [(u, v) for u, v in self.arcs if u in keep and v in keep],
            [(u, v) for u, v in self.edges if u in keep and v in keep],
        )

    def with_orientations(self, arcs: Iterable[Arc]) -> "Pdag":
        """Copy with the given undirected edges replaced by arcs."""
        arcs = set(arcs)
        drop = {edge_key(u, v) for u, v in arcs}
        return Pdag(self.nodes, self.arcs | arcs, self.edges - drop)

    def __eq__(self, other):
        if not isinstance(other, Pdag):
            return NotImplemented
        return self.nodes == other.nodes and self.arcs == other.arcs and self.edges == other.edges

    def __hash__(self):
        return hash((self.nodes, self.arcs, self.edges))

    def __repr__(self):
        arcs = ", ".join(f"{u}->{v}" for u, v in sorted(self.arcs, key=pair_sort_key))
        edges = ", ".join(f"{u}-{v}" for u, v in sorted(self.edges, key=pair_sort_key))
        return f"{type(self).__name__}(n={len(self.nodes)}, arcs=[{arcs}], edges=[{edges}])"


class Dag(Pdag):
    """Fully oriented acyclic graph.  Construction fails on a directed cycle."""

    __slots__ = ()

    def __init__(self, nodes: Iterable[Node] = (), arcs: Iterable[Arc] = ()):
        super().__init__(nodes, arcs, ())
        topological_order(self)

    @classmethod
    def from_pdag(cls, g: Pdag) -> "Dag":
        if g.edges:
            raise GraphError("graph still has undirected edges")
        return cls(g.nodes, g.arcs)

    def reverse_arc(self, u, v) -> "Dag":
        return Dag(self.nodes, (self.arcs - {(u, v)}) | {(v, u)})


class UGraph(Pdag):
    """Undirected graph."""

    __slots__ = ()

    def __init__(self, nodes: Iterable[Node] = (), edges: Iterable[Arc] = ()):
        super().__init__(nodes, (), edges)


def as_dag(g: Pdag) -> Dag:
    return g if isinstance(g, Dag) else Dag.from_pdag(g)


# -- queries -----------------------------------------------------------------

def skeleton(g: Pdag) -> UGraph:
    return UGraph(g.nodes, g.pairs())


def v_structures(g: Pdag) -> FrozenSet[Tuple[Node, Node, Node]]:
    """Colliders ``u -> v <- w`` with ``u``, ``w`` non-adjacent, as ``(u, v, w)`` with u < w.

    Only directed arcs are considered, so on a partially directed graph this
    returns the v-structures its arcs already commit to.
    """
    out = set()
    for v in g.nodes:
        pa = sort_nodes(g.parents(v))
        for i, u in enumerate(pa):
            for w in pa[i + 1:]:
                if not g.is_adjacent(u, w):
                    out.add((u, v, w))
    return frozenset(out)


def topological_order(g: Pdag) -> Dict[Node, int]:
    """Kahn's algorithm over the arcs with the smallest available node first.

    Returns ranks ``1..n``.  Undirected edges are ignored.  Raises
    :class:`CycleError` naming one directed cycle.
    """
    indeg = {v: len(g.parents(v)) for v in g.nodes}
    heap = [(str(v), v) for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    rank = {}
    while heap:
        _, v = heapq.heappop(heap)
        rank[v] = len(rank) + 1
        for w in g.children(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, (str(w), w))
    if len(rank) < len(g.nodes):
        raise CycleError(_find_cycle(g, [v for v in g.nodes if v not in rank]))
    return rank


def _find_cycle(g: Pdag, remaining) -> List[Node]:
    rest = set(remaining)
    # every remaining node has a remaining parent; walk parents until a repeat
    v = sort_nodes(rest)[0]
    path, pos = [], {}
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = sort_nodes(p for p in g.parents(v) if p in rest)[0]
    cycle = path[pos[v]:]
    cycle.reverse()
    return cycle


def is_acyclic(g: Pdag) -> bool:
    try:
        topological_order(g)
    except CycleError:
        return False
    return True


def order_list(rank: Dict[Node, int]) -> List[Node]:
    return sorted(rank, key=rank.__getitem__)


def is_valid_order(g: Pdag, rank: Dict[Node, int]) -> bool:
    if set(rank) != set(g.nodes) or sorted(rank.values()) != list(range(1, len(rank) + 1)):
        return False
    return all(rank[u] < rank[v] for u, v in g.arcs)


def chain_components(g: Pdag) -> List[FrozenSet[Node]]:
    """Connected components over undirected edges, ordered by smallest member."""
    seen = set()
    comps = []
    for s in sort_nodes(g.nodes):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def connected_components(g: Pdag, nodes: Iterable[Node] = None) -> List[FrozenSet[Node]]:
    """Components of the skeleton (optionally restricted to ``nodes``)."""
    allowed = set(g.nodes if nodes is None else nodes)
    seen = set()
    comps = []
    for s in sort_nodes(allowed):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.adjacent(u):
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def hop_distances(g: Pdag, seed: Iterable[Node]) -> Dict[Node, int]:
    """BFS distance from the seed set over the skeleton; unreachable nodes omitted."""
    seed = set(seed)
    missing = seed - g.nodes
    if missing:
        raise GraphError(f"seed nodes not in graph: {sort_nodes(missing)}")
    dist = {v: 0 for v in seed}
    queue = deque(seed)
    while queue:
        u = queue.popleft()
        for w in g.adjacent(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def hop_neighborhood(g: Pdag, seed: Iterable[Node], r: int) -> FrozenSet[Node]:
    """``N^r(seed)``: nodes within ``r`` hops of some seed node."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    return frozenset(v for v, d in hop_distances(g, seed).items() if d <= r)


@dataclass(frozen=True)
class Ancestry:
    parents: FrozenSet[Node]
    children: FrozenSet[Node]  # direct children only
    ancestors: FrozenSet[Node]
    descendants: FrozenSet[Node]


def _reach(start, step) -> set:
    seen = set()
    stack = list(step(start))
    while stack:
        u = stack.pop()
        if u not in seen:
            seen.add(u)
            stack.extend(step(u))
    return seen


def ancestry(g: Pdag, v) -> Ancestry:
    if v not in g.nodes:
        raise GraphError(f"unknown node {v!r}")
    anc = _reach(v, g.parents)
    des = _reach(v, g.children)
    direct = set()
    for w in g.children(v):
        # w is a direct child unless some other child of v is an ancestor of w
        if not any(z != w and z in des and w in _reach(z, g.children) for z in g.children(v)):
            direct.add(w)
    return Ancestry(frozenset(g.parents(v)), frozenset(direct), frozenset(anc), frozenset(des))


def direct_children(g: Pdag, v) -> FrozenSet[Node]:
    return ancestry(g, v).children


# -- JSON format -------------------------------------------------------------

def save_graph(g: Pdag) -> str:
    """Canonical JSON text: sorted nodes, sorted pairs, undirected pairs low-high."""
    doc = {
        "nodes": [str(v) for v in sort_nodes(g.nodes)],
        "directed": [[str(u), str(v)] for u, v in sorted(g.arcs, key=pair_sort_key)],
        "undirected": [[str(u), str(v)] for u, v in sorted(g.edges, key=pair_sort_key)],
    }
    return json.dumps(doc, separators=(",", ":"))


def load_graph(text) -> Pdag:
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise GraphError("parse error: top level must be an object")
    nodes = doc.get("nodes")
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise GraphError("field 'nodes': expected a list of strings")
    if len(set(nodes)) != len(nodes):
        raise GraphError("field 'nodes': duplicate node")
    node_set = set(nodes)
    pairs = {}
    for field in ("directed", "undirected"):
        raw = doc.get(field, [])
        if not isinstance(raw, list):
            raise GraphError(f"field '{field}': expected a list of pairs")
        out = []
        for i, p in enumerate(raw):
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p)):
                raise GraphError(f"field '{field}'[{i}]: expected a pair of node names")
            u, v = p
            for x in (u, v):
                if x not in node_set:
                    raise GraphError(f"field '{field}'[{i}]: unknown endpoint {x!r}")
            k = edge_key(u, v)
            if k in pairs:
                raise GraphError(f"field '{field}'[{i}]: duplicate pair {k[0]}-{k[1]}")
            pairs[k] = field
            out.append((u, v))
        doc[field] = out
    g = Pdag(nodes, doc["directed"], doc["undirected"])
    return g
