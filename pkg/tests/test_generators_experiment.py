import math
from collections import Counter

import pytest

from causaladvice.chordal import is_chordal
from causaladvice.errors import CapExceededError, GraphError
from causaladvice.experiment import HEADER, run_experiment, tv_epsilon
from causaladvice.fixtures import path_graph
from causaladvice.generators import KINDS, gen_chordal, node_names, random_moral_dag, sample_mec_dags
from causaladvice.graph import UGraph, connected_components, v_structures
from causaladvice.mec import same_mec

# upper 0.001 quantile of chi-square with two degrees of freedom
CHI2_DF2_999 = 13.816


@pytest.mark.parametrize("kind", KINDS)
def test_generators_are_deterministic_connected_and_chordal(kind):
    for n in (2, 7, 30):
        a, b = gen_chordal(kind, n, 5), gen_chordal(kind, n, 5)
        assert a == b
        assert a.nodes == set(node_names(n))
        assert is_chordal(a) and len(connected_components(a)) == 1


def test_interval_example():
    g = gen_chordal("interval", 16, 7)
    assert len(g.nodes) == 16 and is_chordal(g)


def test_node_names_sort_numerically():
    names = node_names(12)
    assert names == sorted(names) and names[0] == "v01" and names[-1] == "v12"


def test_unknown_kind_and_bad_size():
    with pytest.raises(ValueError):
        gen_chordal("grid", 5, 0)
    with pytest.raises(ValueError):
        gen_chordal("tree", 1, 0)


def test_random_moral_dag_has_no_v_structures():
    for seed in range(20):
        skel = gen_chordal(KINDS[seed % 3], 12, seed)
        assert not v_structures(random_moral_dag(skel, seed))


def test_random_moral_dag_rejects_non_chordal():
    c4 = UGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    with pytest.raises(GraphError):
        random_moral_dag(c4, 0)


def test_exhaustive_sampling_is_uniform_on_p3():
    samples = sample_mec_dags(path_graph(3), 300, 17)
    freq = Counter(frozenset(d.arcs) for d in samples)
    assert len(freq) == 3
    chi2 = sum((c - 100) ** 2 / 100 for c in freq.values())
    assert chi2 < CHI2_DF2_999


def test_walk_samples_stay_in_class():
    skel = gen_chordal("thickened", 10, 3)
    samples = sample_mec_dags(skel, 20, 1, mode="walk")
    assert all(same_mec(samples[0], d) for d in samples)
    assert not v_structures(samples[0])


def test_sampling_cap_and_arguments():
    with pytest.raises(CapExceededError, match="walk"):
        sample_mec_dags(path_graph(10), 5, 0, cap=4)
    with pytest.raises(ValueError):
        sample_mec_dags(path_graph(3), 0, 0)
    with pytest.raises(ValueError):
        sample_mec_dags(path_graph(3), 1, 0, mode="mcmc")


def test_tv_epsilon():
    assert round(tv_epsilon(16, 1000, 0.01), 6) == 0.126491
    # the confidence term wins when n is small
    assert tv_epsilon(1, 100, 0.01) == pytest.approx(math.sqrt(0.02 * math.log(200)))


def test_single_trial_experiment():
    res = run_experiment(path_graph(4), 1, 0.05, seed=3)
    assert len(res.rows) == 1
    row = res.rows[0]
    assert row.trials == 1 and row.ecdf == 1.0 and row.psi == 0
    assert res.to_csv().splitlines()[0] == ",".join(HEADER)


def test_experiment_rows():
    res = run_experiment(gen_chordal("tree", 9, 2), 60, 0.1, seed=5)
    assert sum(r.trials for r in res.rows) == 60
    assert [r.psi for r in res.rows] == sorted({r.psi for r in res.rows})
    ecdf = [r.ecdf for r in res.rows]
    assert ecdf == sorted(ecdf) and ecdf[-1] == 1.0
    assert all(r.mean_advice >= r.nu1 for r in res.rows)
    assert res.meta["uniform"] is True


def test_experiment_walk_mode_metadata_and_reproducibility():
    skel = gen_chordal("interval", 12, 4)
    a = run_experiment(skel, 30, 0.1, seed=9, mode="walk")
    b = run_experiment(skel, 30, 0.1, seed=9, mode="walk")
    assert a.to_csv() == b.to_csv()
    assert a.meta["uniform"] is False and "not exactly uniform" in a.meta["note"]


def test_experiment_rejects_bad_input():
    with pytest.raises(ValueError):
        run_experiment(path_graph(3), 5, 1.5)
    c4 = UGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    with pytest.raises(GraphError):
        run_experiment(c4, 5, 0.1)
