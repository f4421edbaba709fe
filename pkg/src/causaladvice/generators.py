"""Random chordal skeletons, moral DAGs and samples from an equivalence class.

Every function takes an explicit seed or numpy ``Generator`` so results are
reproducible.  Trial ``t`` of a seeded batch uses ``default_rng(seed ^ t)``.
"""

from __future__ import annotations

import numpy as np

from .advice import extend_mpdag
from .chordal import is_chordal, mcs_order, peo_mcs
from .errors import CapExceededError, GraphError
from .graph import Dag, Pdag, UGraph, connected_components
from .mec import covered_edges, enumerate_mec

KINDS = ("tree", "thickened", "interval")


def node_names(n: int):
    width = len(str(n))
    return [f"v{i:0{width}d}" for i in range(1, n + 1)]


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _prufer_tree(n: int, rng) -> list:
    if n == 2:
        return [(0, 1)]
    seq = [int(x) for x in rng.integers(n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return edges


def _fill_in(n: int, edges, order) -> set:
    """Eliminate vertices in ``order``, joining each one's remaining neighbours."""
    adj = {i: set() for i in range(n)}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    out = {tuple(sorted(e)) for e in edges}
    done = set()
    for v in order:
        nb = sorted(adj[v] - done)
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                    out.add((a, b))
        done.add(v)
    return out


def _intervals(n: int, rng) -> list:
    # starts increase; each interval reaches the next start so the graph stays connected
    starts = np.cumsum(rng.uniform(0.0, 1.0, size=n))
    ends = []
    for i in range(n):
        reach = starts[i + 1] if i + 1 < n else starts[i]
        ends.append(max(reach, starts[i] + rng.exponential(1.5)))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if starts[j] <= ends[i]:
                edges.append((i, j))
    return edges


def gen_chordal(kind: str, n: int, seed, extra: float = 0.1) -> UGraph:
    """Connected chordal graph on ``n`` nodes.

    ``tree`` is a uniform labelled tree.  ``thickened`` adds roughly
    ``extra * n`` random edges to a tree and then the fill-in of a random
    elimination order.  ``interval`` is the intersection graph of random
    overlapping intervals.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    rng = _rng(seed)
    if kind == "interval":
        edges = _intervals(n, rng)
    else:
        edges = _prufer_tree(n, rng)
        if kind == "thickened":
            for _ in range(max(1, int(round(extra * n)))):
                u, w = (int(x) for x in rng.choice(n, size=2, replace=False))
                edges.append((u, w))
            edges = _fill_in(n, edges, [int(x) for x in rng.permutation(n)])
    names = node_names(n)
    g = UGraph(names, {tuple(sorted((names[u], names[w]))) for u, w in edges})
    assert len(connected_components(g)) == 1 and is_chordal(g)
    return g


def random_moral_dag(skel: Pdag, seed) -> Dag:
    """Orient a chordal skeleton along a random MCS order; no v-structures arise."""
    peo_mcs(skel)  # raises with a chordless cycle when not chordal
    order = mcs_order(skel, _rng(seed))
    pos = {v: i for i, v in enumerate(order)}
    return Dag(skel.nodes, [(u, w) if pos[u] < pos[w] else (w, u) for u, w in skel.pairs()])


def random_walk(start: Dag, steps: int, rng) -> Dag:
    g = start
    for _ in range(steps):
        arcs = sorted(covered_edges(g).arcs, key=lambda a: (str(a[0]), str(a[1])))
        if not arcs:
            break
        u, w = arcs[int(rng.integers(len(arcs)))]
        g = g.reverse_arc(u, w)
    return g


def sample_mec_dags(skel: Pdag, m: int, seed: int, mode: str = "exhaustive", cap: int = 100_000):
    """``m`` members of the equivalence class whose essential graph is ``skel``.

    ``exhaustive`` enumerates the class and draws uniformly with replacement.
    ``walk`` runs ``10 n`` random covered-edge reversals per sample, which is
    only approximately uniform.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if mode not in ("exhaustive", "walk"):
        raise ValueError("mode must be 'exhaustive' or 'walk'")
    und = Pdag(skel.nodes, edges=skel.pairs())
    if not is_chordal(und):
        raise GraphError("skeleton must be chordal")
    if mode == "exhaustive":
        try:
            members = enumerate_mec(und, cap)
        except CapExceededError as exc:
            raise CapExceededError(exc.count, cap, "class too large; use --mode walk") from None
        return [members[int(np.random.default_rng(seed ^ t).integers(len(members)))] for t in range(m)]
    start = extend_mpdag(und)
    steps = 10 * len(und.nodes)
    return [random_walk(start, steps, np.random.default_rng(seed ^ t)) for t in range(m)]
