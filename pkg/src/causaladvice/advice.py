"""Measures of advice quality and completion of partially oriented advice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import GraphError, InconsistentGraphError
from .graph import Dag, Node, Pdag, hop_distances, pair_sort_key, v_structures
from .mec import covered_edges, essential_graph, same_mec
from .meek import add_and_close, meek_closure
from .oracle import InterventionSet, Oracle
from .verification import enumerate_min_covers, verifying_set_atomic


@dataclass(frozen=True)
class AdviceQuality:
    h: int
    psi: int
    rho_by_radius: Tuple[Tuple[int, int], ...]
    vtilde: FrozenSet[Node] = frozenset()


def min_hop_coverage(truth: Dag, vtilde: Iterable[Node]) -> int:
    """Fewest hops from ``vtilde`` reaching both endpoints of every covered edge."""
    cov = covered_edges(truth).nodes
    if not cov:
        return 0
    vtilde = frozenset(vtilde)
    if not vtilde:
        raise GraphError("empty vtilde cannot reach the covered edges")
    dist = hop_distances(essential_graph(truth), vtilde)
    far = [v for v in cov if v not in dist]
    if far:
        raise GraphError(f"covered-edge endpoint {far[0]} is unreachable from vtilde")
    return max(dist[v] for v in cov)


def psi_proxy(truth: Dag, vtilde: Iterable[Node]) -> AdviceQuality:
    """Relevant nodes within ``h`` hops of ``vtilde`` after intervening on it."""
    vtilde = frozenset(vtilde)
    h = min_hop_coverage(truth, vtilde)
    oracle = Oracle(truth)
    oracle.intervene(InterventionSet.atomic(vtilde))
    dist = hop_distances(oracle.essential, vtilde) if vtilde else {}
    rho = []
    for r in range(h + 1):
        ball = [v for v, d in dist.items() if d <= r]
        rho.append((r, len(oracle.relevant_nodes(ball))))
    psi = rho[-1][1] if rho else 0
    return AdviceQuality(h, psi, tuple(rho), vtilde)


def psi_of_advice(truth: Dag, advice: Dag) -> AdviceQuality:
    return psi_proxy(truth, verifying_set_atomic(advice))


def psi_full(truth: Dag, advice: Dag, cap: int = 10_000) -> int:
    """Worst case of :func:`psi_proxy` over every minimum verifying set of ``advice``."""
    if not same_mec(truth, advice):
        raise GraphError("advice is not in the equivalence class of the truth")
    return max(psi_proxy(truth, c).psi for c in enumerate_min_covers(covered_edges(advice), cap))


def extend_mpdag(mpdag: Pdag) -> Dag:
    """Orient the remaining edges one at a time, closing under Meek rules.

    The smallest undirected pair goes low to high when that stays consistent,
    otherwise high to low.
    """
    try:
        g = meek_closure(mpdag)
    except InconsistentGraphError as exc:
        raise InconsistentGraphError(f"partial advice has no consistent extension: {exc}") from None
    while g.edges:
        u, v = min(g.edges, key=pair_sort_key)
        try:
            g = add_and_close(g, [(u, v)])
        except InconsistentGraphError:
            try:
                g = add_and_close(g, [(v, u)])
            except InconsistentGraphError:
                raise InconsistentGraphError(f"partial advice has no consistent extension at {u}-{v}") from None
    try:
        dag = Dag.from_pdag(g)
    except GraphError as exc:
        raise InconsistentGraphError(f"partial advice has no consistent extension: {exc}") from None
    if v_structures(dag) != v_structures(mpdag):
        raise InconsistentGraphError("partial advice has no extension without new v-structures")
    return dag
