"""Simulated ideal interventions against a hidden ground-truth DAG.

Intervening on a set ``S`` reveals the true orientation of every edge with
exactly one endpoint in ``S``.  The resulting interventional essential graph is
the Meek closure of those orientations together with the observational one.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, FrozenSet, Iterable, Iterator, Optional

from .errors import GraphError
from .graph import Arc, Dag, Node, Pdag, sort_nodes
from .mec import essential_graph
from .meek import add_and_close, meek_closure


class InterventionSet:
    """Ordered sequence of node subsets, each of size at most ``k``."""

    __slots__ = ("sets", "k")

    def __init__(self, sets: Iterable[Iterable[Node]] = (), k: Optional[int] = None):
        self.sets = tuple(frozenset(s) for s in sets)
        if k is None:
            k = max([1] + [len(s) for s in self.sets])
        if k < 1:
            raise ValueError("intervention bound k must be positive")
        self.k = k
        for s in self.sets:
            if len(s) > k:
                raise GraphError(f"intervention of size {len(s)} exceeds bound k={k}")

    @classmethod
    def atomic(cls, nodes: Iterable[Node]) -> "InterventionSet":
        return cls([[v] for v in sort_nodes(nodes)], 1)

    def nodes(self) -> FrozenSet[Node]:
        return frozenset().union(*self.sets) if self.sets else frozenset()

    def __iter__(self) -> Iterator[FrozenSet[Node]]:
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __add__(self, other):
        other = _as_set(other)
        return InterventionSet(self.sets + other.sets, max(self.k, other.k))

    def __eq__(self, other):
        return isinstance(other, InterventionSet) and self.sets == other.sets and self.k == other.k

    def __repr__(self):
        body = ", ".join("{" + ",".join(sorted(map(str, s))) + "}" for s in self.sets)
        return f"InterventionSet([{body}], k={self.k})"


def _as_set(batch) -> InterventionSet:
    return batch if isinstance(batch, InterventionSet) else InterventionSet(batch)


def cut_arcs(truth: Dag, batch: Iterable[Iterable[Node]]) -> set:
    """True orientations of every edge cut by some set in ``batch``."""
    out = set()
    for s in batch:
        s = set(s)
        for u, v in truth.arcs:
            if (u in s) != (v in s):
                out.add((u, v))
    return out


def interventional_essential_graph(g: Dag, interventions) -> Pdag:
    arcs = cut_arcs(g, _as_set(interventions))
    base = essential_graph(g)
    if not arcs:
        return base
    return meek_closure(base.with_orientations(arcs))


def revealed(g: Dag, interventions) -> FrozenSet[Arc]:
    """Arcs of the interventional essential graph."""
    return interventional_essential_graph(g, interventions).arcs


def residual_dag(g: Dag, interventions) -> Dag:
    """Sub-DAG of ``g`` on the arcs left unoriented by ``interventions``."""
    e = interventional_essential_graph(g, interventions)
    return Dag(g.nodes, [a for a in g.arcs if a not in e.arcs])


def relevant_in(g: Pdag, subset) -> FrozenSet[Node]:
    """Nodes of ``subset`` touching an undirected edge inside ``subset``."""
    subset = set(subset)
    return frozenset(v for v in subset if g.neighbors(v) & subset)


class Oracle:
    """Adaptive access to a hidden DAG.

    Search code sees the current interventional essential graph and may ask
    for more interventions; the truth itself stays private.
    """

    def __init__(self, truth: Dag, observer: Optional[Callable[[FrozenSet[Node], Pdag], None]] = None):
        if not isinstance(truth, Dag):
            truth = Dag.from_pdag(truth)
        self._truth = truth
        self._observer = observer
        self.essential = essential_graph(truth)
        self.current = self.essential
        self.applied: list = []
        self.attribution: Counter = Counter()

    @property
    def nodes(self):
        return self.current.nodes

    @property
    def count(self) -> int:
        return len(self.applied)

    def intervene(self, batch, tag: str = "") -> Pdag:
        batch = _as_set(batch)
        for s in batch:
            unknown = s - self.current.nodes
            if unknown:
                raise GraphError(f"unknown node(s) in intervention: {sorted(map(str, unknown))}")
        for s in batch:
            new = [a for a in cut_arcs(self._truth, [s]) if a not in self.current.arcs]
            if new:
                self.current = add_and_close(self.current, new)
            self.applied.append(s)
            self.attribution[tag] += 1
            if self._observer is not None:
                self._observer(s, self.current)
        return self.current

    def revealed_arcs(self) -> FrozenSet[Arc]:
        return self.current.arcs

    def is_fully_oriented(self) -> bool:
        return self.current.is_fully_oriented()

    def relevant_nodes(self, subset=None) -> FrozenSet[Node]:
        return relevant_in(self.current, self.current.nodes if subset is None else subset)

    def interventions(self) -> InterventionSet:
        return InterventionSet(self.applied)
