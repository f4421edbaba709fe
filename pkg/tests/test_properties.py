import itertools
import math

from hypothesis import given, settings, strategies as st

from causaladvice.chordal import half_clique_separator, is_clique
from causaladvice.generators import KINDS, gen_chordal, random_moral_dag, random_walk
from causaladvice.graph import connected_components, load_graph, save_graph
from causaladvice.mec import covered_edges, covered_forest_ok, essential_graph, same_mec
from causaladvice.meek import meek_closure
from causaladvice.oracle import Oracle
from causaladvice.search import advice_search
from causaladvice.verification import bounded_batches, separates, separating_labels

import numpy as np

seeds = st.integers(0, 2**32 - 1)
kinds = st.sampled_from(KINDS)


def _moral(kind, n, seed):
    return random_moral_dag(gen_chordal(kind, n, seed), seed)


@settings(max_examples=60, deadline=None)
@given(kinds, st.integers(2, 14), seeds)
def test_closure_is_idempotent(kind, n, seed):
    e = essential_graph(_moral(kind, n, seed))
    assert meek_closure(e) == e


@settings(max_examples=60, deadline=None)
@given(kinds, st.integers(2, 14), seeds)
def test_covered_edges_form_a_forest(kind, n, seed):
    g = _moral(kind, n, seed)
    assert covered_forest_ok(covered_edges(g), g)


@settings(max_examples=60, deadline=None)
@given(kinds, st.integers(2, 20), seeds)
def test_separator_is_a_balanced_clique(kind, n, seed):
    g = gen_chordal(kind, n, seed)
    sep = half_clique_separator(g)
    assert sep and is_clique(g, sep)
    assert all(len(c) <= math.ceil(n / 2) for c in connected_components(g, g.nodes - sep))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 60), st.integers(1, 10))
def test_labels_distinct(n, k):
    k = min(k, n // 2) or 1
    if 2 * k > n:
        return
    table = separating_labels(n, k, max(2, math.ceil(n / k)))
    assert len(set(table.labels)) == n


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(1, 8))
def test_bounded_batches_separate(size, k):
    nodes = [f"n{i:02d}" for i in range(size)]
    batches = bounded_batches(nodes, k)
    assert all(len(b) <= k for b in batches)
    assert all(separates(batches, u, v) for u, v in itertools.combinations(nodes, 2))


@settings(max_examples=40, deadline=None)
@given(kinds, st.integers(2, 12), seeds)
def test_json_round_trip(kind, n, seed):
    e = essential_graph(_moral(kind, n, seed))
    assert load_graph(save_graph(e)) == e


@settings(max_examples=40, deadline=None)
@given(kinds, st.integers(2, 16), seeds, st.sampled_from([1, 2, 3]))
def test_advice_search_always_recovers_truth(kind, n, seed, k):
    truth = _moral(kind, n, seed)
    adv = random_walk(truth, 3 * n, np.random.default_rng(seed + 1))
    assert same_mec(truth, adv)
    o = Oracle(truth)
    rep = advice_search(o, adv, k)
    assert rep.final.arcs == truth.arcs and rep.count == o.count
    assert all(len(s) <= k for s in rep.interventions)
