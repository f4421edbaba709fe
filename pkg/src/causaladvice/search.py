"""Adaptive search strategies run against an :class:`Oracle`.

``subset_search`` orients every edge inside a target node set using balanced
clique separators; ``full_search`` is the special case of all nodes.
``advice_search`` first intervenes on a verifying set of an advice DAG and
then calls ``subset_search`` on growing hop neighbourhoods of that set, only
when the number of relevant nodes has at least squared since the last call.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import FrozenSet, List, Optional

from .chordal import half_clique_separator
from .errors import AdviceError
from .graph import Dag, Node, Pdag, UGraph, connected_components, hop_distances, v_structures
from .mec import covered_edges
from .oracle import InterventionSet, Oracle
from .verification import bounded_batches, verifying_set_atomic


@dataclass(frozen=True)
class RoundRecord:
    i: int
    r: int
    n_i: int
    c: int  # interventions spent on N^(r-1)
    c_prime: int  # interventions spent on N^r
    forced: bool = False  # saturation fallback rather than a trigger


@dataclass
class SearchReport:
    interventions: InterventionSet
    count: int
    final: Pdag
    rounds: List[RoundRecord] = field(default_factory=list)
    initial: int = 0  # size of the advice-derived first batch
    phases: int = 0  # separator rounds performed by subset searches

    def summary(self) -> dict:
        return {
            "count": self.count,
            "initial": self.initial,
            "phases": self.phases,
            "rounds": [asdict(r) for r in self.rounds],
            "fully_oriented": self.final.is_fully_oriented(),
        }


def _report(oracle: Oracle, start: int, k: int, **kw) -> SearchReport:
    sets = oracle.applied[start:]
    return SearchReport(InterventionSet(sets, max(k, 1)), len(sets), oracle.current, **kw)


def _subset_rounds(oracle: Oracle, target, k: int, tag: str) -> int:
    target = frozenset(target)
    rounds = 0
    while True:
        cur = oracle.current
        # undirected edges with both ends in the target
        h = UGraph(target, [(u, v) for u, v in cur.edges if u in target and v in target])
        comps = [c for c in connected_components(h) if len(c) > 1]
        if not comps:
            return rounds
        rounds += 1
        for comp in sorted(comps, key=lambda c: min(map(str, c))):
            sep = half_clique_separator(h.induced_subgraph(comp))
            oracle.intervene(bounded_batches(sep, k), tag)


def subset_search(oracle: Oracle, target, k: int = 1, tag: str = "subset") -> SearchReport:
    """Orient every edge with both endpoints in ``target``.

    Each round splits every nontrivial connected component of the undirected
    part induced on ``target`` with a balanced clique separator and intervenes
    on the separator (one node at a time when ``k == 1``, otherwise in
    separating batches of at most ``k`` nodes).
    """
    if k < 1:
        raise ValueError("k must be positive")
    start = oracle.count
    phases = _subset_rounds(oracle, target, k, tag)
    return _report(oracle, start, k, phases=phases)


def full_search(oracle: Oracle, k: int = 1) -> SearchReport:
    rep = subset_search(oracle, oracle.nodes, k, tag="full")
    assert oracle.is_fully_oriented()
    return rep


def check_advice(essential: Pdag, advice: Dag) -> None:
    if advice.nodes != essential.nodes:
        raise AdviceError("advice node set differs from the observational graph")
    if advice.pairs() != essential.pairs():
        raise AdviceError("advice skeleton differs from the observational essential graph")
    if v_structures(advice) != v_structures(essential):
        raise AdviceError("advice v-structures differ from the observational essential graph")
    bad = [a for a in essential.arcs if a not in advice.arcs]
    if bad:
        u, v = sorted(bad, key=lambda a: (str(a[0]), str(a[1])))[0]
        raise AdviceError(f"advice reverses compelled arc {u}->{v}")


def advice_search(
    oracle: Oracle,
    advice: Dag,
    k: int = 1,
    vtilde: Optional[FrozenSet[Node]] = None,
) -> SearchReport:
    """Search guided by an advice DAG from the true equivalence class.

    ``vtilde`` overrides the verifying set derived from ``advice``; it must
    cover every covered edge of ``advice``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    check_advice(oracle.essential, advice)
    if vtilde is None:
        vt = verifying_set_atomic(advice)
    else:
        vt = frozenset(vtilde)
        if any(u not in vt and v not in vt for u, v in covered_edges(advice).arcs):
            raise AdviceError("vtilde does not verify the advice DAG")
    start = oracle.count
    oracle.intervene(bounded_batches(vt, k), "initial")
    initial = oracle.count - start

    dist = hop_distances(oracle.essential, vt) if vt else {}

    def ball(r):
        return frozenset(v for v, d in dist.items() if d <= r)

    r, i, n_i = 0, 0, 2
    rounds: List[RoundRecord] = []
    phases = 0
    while not oracle.is_fully_oriented():
        nr = ball(r)
        rho = len(oracle.relevant_nodes(nr))
        if rho >= n_i * n_i:
            assert r >= 1, "trigger at radius 0 is impossible after the first batch"
            i += 1
            n_i = rho
            c0 = oracle.count
            phases += _subset_rounds(oracle, ball(r - 1), k, "inner")
            c1 = oracle.count
            if not oracle.is_fully_oriented():
                phases += _subset_rounds(oracle, nr, k, "outer")
            rounds.append(RoundRecord(i, r, n_i, c1 - c0, oracle.count - c1))
        elif ball(r + 1) == nr:
            # neighbourhood saturated below the trigger threshold
            c0 = oracle.count
            phases += _subset_rounds(oracle, oracle.nodes, k, "fallback")
            rounds.append(RoundRecord(i + 1, r, rho, 0, oracle.count - c0, forced=True))
            break
        r += 1
    assert oracle.is_fully_oriented()
    return _report(oracle, start, k, rounds=rounds, initial=initial, phases=phases)


def advice_search_mpdag(oracle: Oracle, mpdag: Pdag, k: int = 1) -> SearchReport:
    from .advice import extend_mpdag

    return advice_search(oracle, extend_mpdag(mpdag), k)
