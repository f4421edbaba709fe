"""Random instances and brute-force oracles shared by the test modules."""

import itertools

import numpy as np

from causaladvice.generators import KINDS, gen_chordal, random_moral_dag, random_walk
from causaladvice.graph import Dag, Pdag
from causaladvice.oracle import interventional_essential_graph


def random_skeleton(seed, n_min=2, n_max=7, kind=None):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_min, n_max + 1))
    kind = kind or KINDS[int(rng.integers(len(KINDS)))]
    return gen_chordal(kind, n, rng), rng


def random_moral(seed, n_min=2, n_max=7):
    skel, rng = random_skeleton(seed, n_min, n_max)
    return random_moral_dag(skel, rng), rng


def random_pair(seed, n_min=2, n_max=8):
    """Two random members of one equivalence class."""
    g, rng = random_moral(seed, n_min, n_max)
    return random_walk(g, 5 * len(g.nodes), rng), random_walk(g, 5 * len(g.nodes), rng), rng


def all_orientations(skel):
    """Every acyclic orientation of ``skel`` as a frozenset of arcs (via node orders)."""
    pairs = sorted(skel.pairs())
    out = set()
    for perm in itertools.permutations(sorted(skel.nodes)):
        pos = {v: i for i, v in enumerate(perm)}
        out.add(frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in pairs))
    return out


def no_v_structures(skel, arcs):
    pa = {}
    for u, v in arcs:
        pa.setdefault(v, []).append(u)
    return all(skel.is_adjacent(a, b) for ps in pa.values() for a, b in itertools.combinations(ps, 2))


def brute_mec(skel):
    """All moral DAGs on a chordal skeleton, without using Meek rules."""
    return [Dag(skel.nodes, a) for a in all_orientations(skel) if no_v_structures(skel, a)]


def brute_nu1(g: Dag) -> int:
    """Smallest atomic intervention set fully orienting ``g``, by exhaustive search."""
    nodes = sorted(g.nodes)
    for size in range(len(nodes) + 1):
        for sub in itertools.combinations(nodes, size):
            if interventional_essential_graph(g, [[v] for v in sub]).is_fully_oriented():
                return size
    raise AssertionError("intervening on every node must orient everything")


def undirected(skel):
    return Pdag(skel.nodes, edges=skel.pairs())
