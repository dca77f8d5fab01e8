import json
import subprocess
import sys

import pytest

from graphqss import cli
from graphqss.graphs import family, serialize_graph

C5_TEXT = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n"


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.el"
    path.write_text(C5_TEXT)
    return str(path)


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestClassify:
    def test_accessing_three_set(self, capsys, c5_file):
        code, doc = run_json(capsys, ["classify", "--graph", c5_file, "--B", "0,1,2"])
        assert code == 0
        assert doc["q_verdict"] == "QAccessing"
        assert doc["c_verdict"] == "Accessing"
        assert doc["witness_D"] == [1]
        assert doc["rank_residual"] == 1

    def test_blind_pair_negative_exit(self, capsys, c5_file):
        code, doc = run_json(capsys, ["classify", "--graph", c5_file, "--B", "0,1"])
        assert code == 1
        assert doc["q_verdict"] == "QBlind"
        assert doc["witness_C"] == [2, 4]

    def test_family_source(self, capsys):
        code, doc = run_json(
            capsys, ["classify", "--family", "cycle", "--n", "5", "--B", "0,1,2"]
        )
        assert code == 0 and doc["q_verdict"] == "QAccessing"


class TestWitness:
    def test_witness_pair(self, capsys, c5_file):
        code, doc = run_json(capsys, ["witness", "--graph", c5_file, "--B", "0,1,2"])
        assert code == 0
        assert doc["D"] == [1] and doc["C"] == [0, 2]

    def test_no_witness(self, capsys):
        code, doc = run_json(
            capsys, ["witness", "--family", "complete", "--n", "3", "--B", "0,1"]
        )
        assert code == 1 and doc["q_accessing"] is False


class TestThreshold:
    def test_c5(self, capsys, c5_file):
        code, doc = run_json(capsys, ["threshold", "--graph", c5_file])
        assert code == 0
        assert doc["k_star"] == 3
        assert doc["certificate_fail"] == [0, 1]

    def test_c5pow_family(self, capsys):
        code, doc = run_json(capsys, ["threshold", "--family", "c5pow", "--i", "1"])
        assert code == 0 and doc["k_star"] == 3

    def test_limit_resource_error(self, capsys):
        code = cli.run(
            ["threshold", "--family", "cycle", "--n", "30"]
        )
        err = capsys.readouterr().err
        assert code == 3 and "limit" in err


class TestProductAndBound:
    def test_product(self, capsys):
        code, doc = run_json(
            capsys, ["product", "--n1", "5", "--k1", "3", "--n2", "5", "--k2", "3"]
        )
        assert code == 0 and (doc["n"], doc["k"]) == (25, 17)

    def test_bound_holds(self, capsys):
        code, doc = run_json(capsys, ["bound", "--n", "5", "--k", "3"])
        assert code == 0 and doc["lhs"] == 10 and doc["rhs"] == 30

    def test_bound_violated(self, capsys):
        code, doc = run_json(capsys, ["bound", "--n", "7", "--k", "7"])
        assert code == 1 and doc["holds"] is False

    def test_min_k(self, capsys):
        code, doc = run_json(capsys, ["bound", "--min-k", "--n", "100"])
        assert code == 0 and doc["min_feasible_k"] == 52

    def test_pure_qss(self, capsys):
        code, doc = run_json(capsys, ["bound", "--pure-qss", "--max-k", "40"])
        assert code == 0
        assert doc["chain_k_max"] == 39 and doc["chain_n_max"] == 77
        assert doc["stated_cutoff_n"] == 79


class TestFamilyAndSimulate:
    def test_family_output(self, capsys):
        code, doc = run_json(capsys, ["family", "--family", "cycle", "--n", "5"])
        assert code == 0
        assert doc["graph6"] == "Dhc"
        assert doc["edgelist"] == "5\n0 1\n0 4\n1 2\n2 3\n3 4\n"

    def test_family_random_deterministic(self, capsys):
        argv = ["family", "--family", "random", "--n", "8", "--p", "0.5", "--seed", "7"]
        code1 = cli.run(argv)
        out1 = capsys.readouterr().out
        code2 = cli.run(argv)
        out2 = capsys.readouterr().out
        assert code1 == code2 == 0 and out1 == out2

    def test_simulate_accessing(self, capsys, c5_file):
        code, doc = run_json(capsys, ["simulate", "--graph", c5_file, "--B", "0,1,2"])
        assert code == 0
        assert doc["oracle_verdict"] == "Accessing" and doc["overlap"] < 1e-10

    def test_simulate_blind(self, capsys, c5_file):
        code, doc = run_json(capsys, ["simulate", "--graph", c5_file, "--B", "0,1"])
        assert code == 1
        assert doc["oracle_verdict"] == "Blind" and doc["trace_distance"] < 1e-10

    def test_simulate_qubit_limit(self, capsys, monkeypatch):
        code = cli.run(["simulate", "--family", "cycle", "--n", "13", "--B", "0,1"])
        assert code == 3
        monkeypatch.setenv("QSS_MAX_QUBITS", "13")
        code, doc = run_json(
            capsys, ["simulate", "--family", "cycle", "--n", "13", "--B", "0,1"]
        )
        assert code == 1 and doc["oracle_verdict"] == "Blind"


class TestProtocolRun:
    def test_happy_path(self, capsys, c5_file):
        code, doc = run_json(
            capsys,
            [
                "protocol-run",
                "--graph",
                c5_file,
                "--k",
                "3",
                "--coalition",
                "0,1,2",
                "--seed",
                "4",
            ],
        )
        assert code == 0
        assert doc["fidelity"] == pytest.approx(1.0, abs=1e-9)
        assert doc["pad"] in ([0, 0], [0, 1], [1, 0], [1, 1])

    def test_insufficient_coalition(self, capsys, c5_file):
        code, doc = run_json(
            capsys,
            ["protocol-run", "--graph", c5_file, "--k", "3", "--coalition", "0,1"],
        )
        assert code == 1 and "error" in doc

    def test_byte_identical_output(self, capsys, c5_file):
        argv = [
            "protocol-run",
            "--graph",
            c5_file,
            "--k",
            "3",
            "--c",
            "2",
            "--coalition",
            "0,2,3,5,6",
            "--seed",
            "12",
        ]
        cli.run(argv)
        out1 = capsys.readouterr().out
        cli.run(argv)
        out2 = capsys.readouterr().out
        assert out1 == out2 and json.loads(out1)["fidelity"] == pytest.approx(1.0, abs=1e-9)


class TestSearch:
    def test_n4(self, capsys):
        code, doc = run_json(capsys, ["search", "--n", "4"])
        assert code == 0
        assert doc["graphs"] == 64
        assert doc["min_k_star"] == 3  # no-cloning forbids k <= 2 on 4 players
        assert doc["attainer_count"] == len(doc["attainers_graph6"])

    def test_resource_cap(self, capsys):
        assert cli.run(["search", "--n", "8"]) == 3


class TestErrorsAndFormats:
    def test_unreadable_file(self, capsys):
        code = cli.run(["classify", "--graph", "/nonexistent.el", "--B", "0"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_parse_failure(self, capsys, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("2\n0 0\n")
        code = cli.run(["classify", "--graph", str(bad), "--B", "0"])
        assert code == 2
        assert "self-loop" in capsys.readouterr().err

    def test_usage_error(self, capsys):
        assert cli.run(["classify", "--B", "0,1", "--bogus"]) == 2

    def test_missing_required(self, capsys):
        assert cli.run(["classify", "--family", "cycle", "--n", "5"]) == 2

    def test_graph6_input(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(serialize_graph(family("cycle", 5), "graph6"))
        code, doc = run_json(
            capsys,
            ["classify", "--graph", str(path), "--format", "graph6", "--B", "0,1,2"],
        )
        assert code == 0 and doc["q_verdict"] == "QAccessing"

    def test_compact_json_flag(self, capsys):
        code = cli.run(["--json", "product", "--n1", "5", "--k1", "3", "--n2", "5", "--k2", "3"])
        out = capsys.readouterr().out
        assert code == 0 and out.count("\n") == 1 and json.loads(out)["k"] == 17

    def test_console_entry_point(self, c5_file):
        proc = subprocess.run(
            [sys.executable, "-m", "graphqss.cli", "classify", "--graph", c5_file, "--B", "0,1,2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["q_verdict"] == "QAccessing"
