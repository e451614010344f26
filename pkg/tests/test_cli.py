import json

import pytest

from app.cli import run
from app.cli.options import EXIT_BUDGET, EXIT_DISCREPANCY, EXIT_ERROR, EXIT_OK


@pytest.fixture
def graph_file(tmp_path, repository):
    def write(name):
        path = tmp_path / f"{name}.g"
        path.write_text(repository.format_graph(repository.fixture(name)), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.g"
    path.write_text("6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4\n", encoding="utf-8")
    return str(path)


def run_json(capsys, *argv):
    code = run([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


# h1

def test_h1_definitional_json(capsys, graph_file):
    code, report = run_json(capsys, "h1", graph_file("c4"), "--method", "definitional")
    assert code == EXIT_OK
    assert report["schema"] == 1
    assert report["command"] == "h1"
    assert report["homology"] == {"rank": 1, "torsion": []}
    assert report["discrepancies"] == []


def test_h1_reduced_is_default(capsys, graph_file):
    code, report = run_json(capsys, "h1", graph_file("pinched"))
    assert code == EXIT_OK
    assert report["method"] == "reduced"
    assert report["homology"]["rank"] == 1


def test_h1_basis(capsys, graph_file):
    code, report = run_json(capsys, "h1", graph_file("k4"), "--method", "basis")
    assert code == EXIT_OK
    assert report["basis"]["rank_claim"] == 0
    assert report["basis"]["includes_hamiltonian"] is False
    assert report["graph"]["diagonals"] == [[1, 3], [2, 4]]


def test_h1_text_output(capsys, graph_file):
    assert run(["h1", graph_file("c4")]) == EXIT_OK
    assert "H1 = " in capsys.readouterr().out


def test_h1_budget_exit(capsys, graph_file):
    code = run(["h1", graph_file("k4"), "--method", "definitional", "--max-simplices", "1000"])
    assert code == EXIT_BUDGET
    assert "error:" in capsys.readouterr().err


def test_h1_strict_discrepancy(capsys, hexagon_file):
    assert run(["h1", hexagon_file, "--method", "basis"]) == EXIT_OK
    capsys.readouterr()
    code, report = run_json(capsys, "h1", hexagon_file, "--method", "basis", "--strict")
    assert code == EXIT_DISCREPANCY
    assert report["basis"]["isolated_chords"] == [[1, 4]]
    assert report["discrepancies"]


def test_h1_dump_matrices(capsys, graph_file, tmp_path):
    out = tmp_path / "matrices"
    assert run(["h1", graph_file("c4"), "--method", "definitional", "--dump-matrices", str(out)]) == EXIT_OK
    assert sorted(p.name for p in out.iterdir()) == ["d1.txt", "d2.txt"]


def test_missing_file(capsys, tmp_path):
    assert run(["h1", str(tmp_path / "absent.g")]) == EXIT_ERROR
    assert "Cannot read graph file" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["h1"],
    ["h1", "x.g", "--method", "spectral"],
    ["h1", "x.g", "--type", "5"],
    ["corpus", "--workers", "0"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == EXIT_ERROR


# check-trivial

def test_check_trivial_with_skipped_oracle(capsys, graph_file):
    code, report = run_json(capsys, "check-trivial", graph_file("pinched"), "13576421", "--max-simplices", "1000")
    assert code == EXIT_OK
    assert report["walk"] == "13576421"
    assert report["reduced"]["trivial"] is True
    assert report["reduced"]["certificate"]
    assert report["definitional"]["skipped"]
    assert "agree" not in report


@pytest.mark.parametrize("walk,trivial", [("12341", False), ("121", True)])
def test_check_trivial_on_c4(capsys, graph_file, walk, trivial):
    code, report = run_json(capsys, "check-trivial", graph_file("c4"), walk)
    assert code == EXIT_OK
    assert report["reduced"]["trivial"] is trivial
    assert report["definitional"]["trivial"] is trivial
    assert report["agree"] is True


def test_check_trivial_rejects_walks_off_the_graph(capsys, graph_file):
    assert run(["check-trivial", graph_file("c4"), "1231"]) == EXIT_ERROR


# corpus

def test_corpus_empty(capsys):
    code, report = run_json(capsys, "corpus", "--count", "0")
    assert code == EXIT_OK
    assert report["summary"]["graphs"] == 0


def test_corpus_exhaustive(capsys):
    code, report = run_json(capsys, "corpus", "--nmax", "4", "--exhaustive", "--no-oracle")
    assert code == EXIT_OK
    assert len(report["entries"]) == 4
    assert report["summary"]["definitional_checked"] == 0
    assert all(e["definitional_skipped"] == "oracle not requested" for e in report["entries"])


@pytest.mark.parametrize("nmax", ["3", "11"])
def test_corpus_rejects_out_of_range_nmax(capsys, nmax):
    assert run(["corpus", "--nmax", nmax]) == EXIT_ERROR


def test_corpus_is_deterministic(capsys):
    argv = ["corpus", "--nmax", "5", "--count", "6", "--seed", "3", "--no-oracle"]
    _, first = run_json(capsys, *argv)
    _, second = run_json(capsys, *argv)
    assert first["entries"] == second["entries"]
