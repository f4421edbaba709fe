import json
import subprocess
import sys

import pytest

from causaladvice.cli import main
from causaladvice.fixtures import path_dag, path_graph, six_node_example, six_node_partial_advice
from causaladvice.graph import Dag, load_graph, save_graph


@pytest.fixture
def files(tmp_path):
    def put(name, g):
        p = tmp_path / name
        p.write_text(save_graph(g))
        return str(p)
    return put


def test_gen_is_reproducible(tmp_path, capsys):
    assert main(["gen", "--kind", "interval", "--n", "10", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--kind", "interval", "--n", "10", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first
    g = load_graph(first)
    assert len(g.nodes) == 10 and not g.arcs


def test_gen_orient_writes_file(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "--n", "8", "--orient", "-o", str(out)]) == 0
    g = load_graph(out.read_text())
    assert g.is_fully_oriented() and len(g.arcs) == 7


def test_verify(files, capsys):
    path = files("six.json", six_node_example())
    assert main(["verify", "-i", path]) == 0
    assert "nu1 = 2" in capsys.readouterr().out
    assert main(["verify", "-i", path, "--json", "--k", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["nu1"] == 2 and doc["verifying_set"] == ["A", "B"]
    assert all(len(b) <= 2 for b in doc["batches"])


def test_essential(files, capsys):
    assert main(["essential", "-i", files("six.json", six_node_example())]) == 0
    e = load_graph(capsys.readouterr().out)
    assert len(e.edges) == 4 and len(e.arcs) == 4


def test_search_with_and_without_advice(files, capsys):
    truth = files("p.json", path_dag(16))
    assert main(["search", "--truth", truth, "--json"]) == 0
    blind = json.loads(capsys.readouterr().out)
    assert blind["count"] == len(blind["interventions"])
    assert main(["search", "--truth", truth, "--advice", truth, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 1
    assert main(["search", "-i", truth, "--advice", files("q.json", path_dag(16, 15))]) == 0
    assert "interventions:" in capsys.readouterr().out


def test_search_with_partial_advice(files, capsys):
    truth = files("six.json", six_node_example())
    assert main(["search", "--truth", truth, "--advice", files("mp.json", six_node_partial_advice())]) == 0


def test_advice_from_another_class_exits_2(files, capsys):
    truth = files("p.json", path_dag(3))
    other = files("c.json", Dag(["v1", "v2", "v3"], [("v1", "v2"), ("v3", "v2")]))
    assert main(["search", "--truth", truth, "--advice", other]) == 2
    assert main(["psi", "--truth", truth, "--advice", other]) == 2
    assert "error:" in capsys.readouterr().err


def test_psi(files, capsys):
    truth = files("p.json", path_dag(9))
    adv = files("q.json", path_dag(9, 8))
    assert main(["psi", "--truth", truth, "--advice", adv, "--json", "--full"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["psi"] >= 1 and doc["psi_full"] >= doc["psi"] and doc["vtilde"] in (["v8"], ["v9"])


def test_mec_enum(files, capsys):
    assert main(["mec-enum", "-i", files("u.json", path_graph(4)), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 4
    assert main(["mec-enum", "-i", files("u.json", path_graph(8)), "--cap", "3"]) == 2


def test_experiment_writes_csv_and_sidecar(files, tmp_path):
    skel = files("s.json", path_graph(5))
    out = tmp_path / "r.csv"
    assert main(["experiment", "--skeleton", skel, "--m", "20", "--seed", "1", "-o", str(out)]) == 0
    assert out.read_text().startswith("psi,trials,")
    meta = json.loads((tmp_path / "r.csv.meta.json").read_text())
    assert meta["uniform"] is True and meta["m"] == 20


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["gen"]) == 1
    assert main(["verify", "-i", "x.json", "--k", "0"]) == 1
    assert main(["gen", "--n", "5", "--kind", "grid"]) == 1


def test_data_errors_exit_2(tmp_path, capsys):
    assert main(["verify", "-i", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"nodes": ["a"], "directed": [["a", "z"]]}')
    assert main(["verify", "-i", str(bad)]) == 2
    assert "unknown endpoint" in capsys.readouterr().err
    und = tmp_path / "u.json"
    und.write_text(save_graph(path_graph(3)))
    assert main(["verify", "-i", str(und)]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "causaladvice", "gen", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and load_graph(proc.stdout).nodes
