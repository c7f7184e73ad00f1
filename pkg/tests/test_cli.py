import io
import json
import subprocess
import sys

import pytest

from splitnull.cli import read_graph, run
from splitnull.gallery import complete_graph, support_in_s_example, full_support_example, path_graph
from splitnull.graphs import write_edge_list, write_graph6


def call(argv, stdin_text=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def gfile(tmp_path):
    def write(graph, fmt="graph6"):
        path = tmp_path / ("g.g6" if fmt == "graph6" else "g.txt")
        path.write_text(write_graph6(graph) + "\n" if fmt == "graph6" else write_edge_list(graph))
        return str(path)
    return write


def test_read_graph_autodetect():
    assert read_graph("Bw\n") == complete_graph(3)
    assert read_graph("3\n0 1\n1 2\n") == path_graph(3)
    assert read_graph("0\n") == read_graph("?")


def test_nullity_full_support(gfile):
    code, out, _ = call(["nullity", "--input", gfile(full_support_example().split.graph)])
    data = json.loads(out)
    assert code == 0
    assert (data["nullity"], data["nul_R"], data["cliqueker_dim"]) == (1, 0, 1)
    assert data["generator"] == ["1", "1", "-2", "-1", "-1", "-1"]


def test_recognize_c4_edges(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = call(["recognize", "--input", str(path), "--format", "edges"])
    assert code == 1 and out.strip() == "not split"
    code, out, _ = call(["recognize", "--input", str(path), "--json"])
    assert code == 1 and json.loads(out) == {"split": False}


def test_recognize_split(gfile):
    code, out, _ = call(["recognize", "--input", gfile(path_graph(4))])
    assert code == 0 and out.strip() == "split K=[1, 2] S=[0, 3]"


def test_det_k3(gfile):
    code, out, _ = call(["det", "--input", gfile(complete_graph(3), "edges")])
    assert code == 0
    assert json.loads(out) == {"formula": "2", "oracle": "2", "agree": True}


def test_kernel_fraction_strings(gfile):
    code, out, _ = call(["kernel", "--input", gfile(support_in_s_example().split.graph)])
    data = json.loads(out)
    assert code == 0 and data["nullity"] == 2
    for vec in data["vectors"]:
        assert vec["kind"] == "independent"
        assert all(isinstance(x, str) and "." not in x for x in vec["entries"])


def test_support_and_partitions(gfile):
    code, out, _ = call(["support", "--input", gfile(support_in_s_example().split.graph)])
    data = json.loads(out)
    assert code == 0 and data["support"] == [4, 5, 6, 7, 8]
    assert data["ones_not_in_image_yet_support_in_S"] is True
    code, out, _ = call(["partitions", "--input", gfile(path_graph(3))])
    data = json.loads(out)
    assert data["classification"] == "independent_set" and len(data["partitions"]) == 3


def test_stdin_input(monkeypatch):
    code, out, _ = call(["nullity"], "Bg\n", monkeypatch)
    assert code == 0 and json.loads(out)["nullity"] == 1


def test_clique_override(gfile):
    path = gfile(path_graph(3))
    code, out, _ = call(["nullity", "--input", path, "--clique", "1,2"])
    assert code == 0 and json.loads(out)["partition"] == {"K": [1, 2], "S": [0]}
    code, _, err = call(["nullity", "--input", path, "--clique", "0,2"])
    assert code == 3 and "s-partition" in err


def test_compose(tmp_path, gfile):
    left = tmp_path / "p4.g6"
    left.write_text(write_graph6(path_graph(4)))
    right = tmp_path / "c4.txt"
    right.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = call(["compose", "--left", str(left), "--right", str(right)])
    data = json.loads(out)
    assert code == 0 and data["n"] == 8 and data["edges"] == 15
    assert data["embedded_kernel_vectors"] == []


def test_census_small():
    code, out, _ = call(["census", "--n-max", "3", "--random", "5", "--seed", "1"])
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["random_split_graphs"] == 5


def test_verify(gfile):
    code, out, _ = call(["verify", "--input", gfile(full_support_example().split.graph)])
    assert code == 0 and json.loads(out)["ok"]


def test_quiet(gfile):
    code, out, _ = call(["det", "--quiet", "--input", gfile(complete_graph(3))])
    assert code == 0 and out == ""


@pytest.mark.parametrize("argv", [["bogus"], [], ["census", "--n-max", "x"]])
def test_usage_errors(argv):
    code, _, err = call(argv)
    assert code == 2 and err


def test_parse_error(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 0\n")
    code, _, err = call(["nullity", "--input", str(path)])
    assert code == 2 and "self-loop" in err


def test_missing_file():
    code, _, err = call(["nullity", "--input", "/nonexistent/graph.g6"])
    assert code == 2


def test_domain_errors(gfile):
    code, _, err = call(["nullity", "--input", gfile(path_graph(5))])
    assert code == 3 and "not split" in err
    code, _, err = call(["det", "--input", gfile(path_graph(2)), "--clique", "0"])
    assert code == 3 and "|K| >= 2" in err
    code, _, err = call(["census", "--n-max", "9"])
    assert code == 3


def test_module_entry_point(gfile):
    proc = subprocess.run([sys.executable, "-m", "splitnull", "det", "--input", gfile(complete_graph(3))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["agree"] is True
