"""Small named graphs used by the tests, demos and the CLI."""

from __future__ import annotations

from .graph import Dag, Pdag, UGraph


def six_node_example() -> Dag:
    """Six-node DAG with one v-structure (C -> E <- D) and a four-node chain component."""
    return Dag("ABCDEF", [("A", "B"), ("A", "C"), ("A", "D"), ("B", "D"), ("C", "E"),
                          ("D", "E"), ("D", "F"), ("E", "F")])


def six_node_partial_advice() -> Pdag:
    """Essential graph of :func:`six_node_example` plus background arcs B -> A and B -> D."""
    return Pdag("ABCDEF", [("B", "A"), ("B", "D"), ("A", "C"), ("C", "E"), ("D", "E"),
                           ("D", "F"), ("E", "F")], [("A", "D")])


def tight_pair():
    """Two equivalent DAGs whose verification numbers differ by a factor of two."""
    g1 = Dag("abcd", [("b", "a"), ("c", "a"), ("c", "b"), ("c", "d")])
    g2 = Dag("abcd", [("b", "a"), ("c", "a"), ("b", "c"), ("c", "d")])
    return g1, g2


def tail_example(z: int = 4):
    """Truth and advice that disagree along a directed tail ``z1 .. z{z}``.

    Returns ``(truth, advice, vtilde)`` where ``vtilde`` is the verifying set of
    the advice used in the worked example.
    """
    zs = [f"z{i}" for i in range(1, z + 1)]
    core = [("c", "a"), ("c", "b"), ("b", "a")]
    truth = Dag(["a", "b", "c", "d", "e"] + zs,
                core + [("e", "d"), ("e", "c"), ("d", "c"), ("c", zs[-1])]
                + [(zs[i], zs[i - 1]) for i in range(z - 1, 0, -1)])
    advice = Dag(truth.nodes,
                 core + [("c", "d"), ("c", "e"), ("e", "d"), (zs[-1], "c")]
                 + [(zs[i], zs[i + 1]) for i in range(z - 1)])
    return truth, advice, frozenset({"a", "e", zs[1]})


def star_example(n: int = 8):
    """Truth ``v2 -> v1, v2 -> v3 -> {v4..vn}`` and advice rooted at ``v1``."""
    v = [f"v{i}" for i in range(1, n + 1)]
    leaves = [(v[2], x) for x in v[3:]]
    truth = Dag(v, [(v[1], v[0]), (v[1], v[2])] + leaves)
    advice = Dag(v, [(v[0], v[1]), (v[1], v[2])] + leaves)
    return truth, advice


def path_dag(n: int, root: int = 0) -> Dag:
    """Path ``v1 - ... - vn`` oriented away from node index ``root`` (0-based)."""
    names = [f"v{i + 1:0{len(str(n))}d}" for i in range(n)]
    arcs = []
    for i in range(n - 1):
        arcs.append((names[i], names[i + 1]) if i >= root else (names[i + 1], names[i]))
    return Dag(names, arcs)


def path_graph(n: int) -> UGraph:
    names = [f"v{i + 1:0{len(str(n))}d}" for i in range(n)]
    return UGraph(names, zip(names, names[1:]))


def rank_example():
    """Five-node DAG with a ranking and conditioning set for matching checks."""
    g = Dag("axyub", [("a", "x"), ("a", "y"), ("a", "u"), ("a", "b"), ("x", "b"),
                      ("x", "y"), ("x", "u"), ("y", "b")])
    pi = {"a": 1, "x": 2, "u": 3, "y": 4, "b": 5}
    s = {("a", "b"), ("a", "x"), ("a", "y"), ("a", "u"), ("x", "b"), ("x", "u"), ("y", "b")}
    return g, pi, frozenset(s)
