import json

import pytest

from monochrome import cli
from monochrome.graphs import ContractViolation
from monochrome.tools.converters import read_coloring, read_graph, read_graph_archive
from monochrome.tools.records import read_records


def run(*argv):
    return cli.main([str(a) for a in argv])


class TestBound:
    def test_regular(self, tmp_path):
        out = tmp_path / "bound.json"
        assert run("bound", "--model", "regular", "--r", 2, "--n", 10 ** 6, "--out", out) == 0
        report = json.loads(out.read_text())
        assert (report["c1"], report["c2"], report["d"]) == (1.25, 1.125, 5)
        assert report["gamma_n"] < 0
        assert report["hypothesis_holds"] is False

    def test_csv(self, tmp_path):
        out = tmp_path / "bound.csv"
        assert run("bound", "--model", "kout", "--r", 3, "--n", 100, "--format", "csv",
                   "--out", out) == 0
        header, row = out.read_text().splitlines()
        assert header.split(",")[:3] == ["model", "r", "n"]
        assert row.startswith("kout,3,100,")

    def test_bad_r(self):
        assert run("bound", "--model", "regular", "--r", 1, "--n", 100) == 2


class TestGenerateAndAudit:
    def test_pairing_graph_then_audit(self, tmp_path):
        graph = tmp_path / "g.txt"
        assert run("generate", "--model", "pairing", "--r", 2, "--n", 50, "--out", graph) == 0
        g = read_graph(graph)
        assert (g.n, g.m) == (50, 125)
        report = tmp_path / "audit.json"
        assert run("audit", "--graph", graph, "--c", 1.125, "--smax", 4, "--reduce",
                   "--out", report) == 0
        audit = json.loads(report.read_text())
        assert audit["smax"] == 4 and audit["c"] == 1.125
        assert isinstance(audit["passed"], bool)

    def test_seeded(self, tmp_path):
        for name, seed in (("a", 1), ("b", 1), ("c", 2)):
            run("generate", "--model", "kout", "--r", 2, "--n", 40, "--seed", seed,
                "--out", tmp_path / f"{name}.txt")
        text = {name: (tmp_path / f"{name}.txt").read_text() for name in "abc"}
        assert text["a"] == text["b"]
        assert text["a"] != text["c"]

    def test_archive(self, tmp_path):
        out = tmp_path / "graphs.h5"
        assert run("generate", "--model", "hamilton-sum", "--r", 2, "--n", 30, "--trials", 3,
                   "--out", out) == 0
        graphs = read_graph_archive(out)
        assert len(graphs) == 3
        assert len({g.edges.tobytes() for g, _ in graphs}) == 3

    def test_many_graphs_need_an_archive(self, tmp_path):
        assert run("generate", "--n", 30, "--trials", 2, "--out", tmp_path / "g.txt") == 2

    def test_odd_point_count(self, tmp_path):
        assert run("generate", "--model", "pairing", "--r", 2, "--n", 51,
                   "--out", tmp_path / "g.txt") == 2

    def test_budget_refusal(self, tmp_path):
        graph = tmp_path / "g.txt"
        run("generate", "--model", "pairing", "--r", 2, "--n", 50, "--out", graph)
        assert run("audit", "--graph", graph, "--c", 1.125, "--smax", 6, "--budget", 5) == 1


class TestColor:
    def test_hamilton_sidecar(self, tmp_path):
        out = tmp_path / "coloring.txt"
        assert run("color", "--model", "hamilton-sum", "--r", 2, "--n", 500, "--out", out) == 0
        assert len(read_coloring(out)) == 1000
        sidecar = json.loads(out.with_suffix(".json").read_text())
        assert sum(sidecar["block_sizes"]) == 500
        assert len(sidecar["max_components"]) == 2
        assert "path_ok" in sidecar and "estar" in sidecar

    def test_kout(self, tmp_path):
        out = tmp_path / "coloring.txt"
        assert run("color", "--model", "kout", "--r", 2, "--n", 2000, "--out", out) == 0
        sidecar = json.loads(out.with_suffix(".json").read_text())
        assert sidecar["estar_size"] == len(sidecar["estar"])
        assert "class_max_order" in sidecar

    def test_graph_file_with_strategy(self, tmp_path):
        graph, coloring = tmp_path / "g.txt", tmp_path / "c.txt"
        run("generate", "--model", "pairing", "--r", 2, "--n", 40, "--out", graph)
        assert run("color", "--graph", graph, "--out", coloring) == 2
        assert run("color", "--graph", graph, "--strategy", "uniform-random", "--r", 2,
                   "--out", coloring) == 0
        assert len(read_coloring(coloring)) == 100
        sidecar = json.loads(coloring.with_suffix(".json").read_text())
        assert sidecar["strategy_used"] == "uniform-random"
        report = tmp_path / "majority.json"
        assert run("audit", "--graph", graph, "--coloring", coloring, "--c", 1.125,
                   "--smax", 3, "--out", report) == 0

    def test_kout_needs_k_equal_r(self, tmp_path):
        assert run("color", "--model", "kout", "--r", 2, "--k", 3, "--n", 100,
                   "--out", tmp_path / "c.txt") == 2


class TestRuns:
    def test_experiment(self, tmp_path, capsys):
        out = tmp_path / "exp"
        assert run("experiment", "--model", "hamilton-sum", "--r", 2, "--n-grid", 200, 400,
                   "--trials", 2, "--out", out) == 0
        assert len(read_records(out / "records.jsonl")) == 4
        assert (out / "summary.csv").exists()
        assert "hamilton-sum r=2: exponent" in capsys.readouterr().out

    @pytest.mark.parametrize("command", ["experiment", "adversarial"])
    def test_reruns_are_byte_identical(self, tmp_path, command):
        if command == "experiment":
            extra = ["--model", "kout"]
        else:
            extra = ["--model", "pairing", "--smax", 4]
        outs = [tmp_path / "first", tmp_path / "second"]
        for out in outs:
            assert run(command, *extra, "--r", 2, "--n-grid", 60, 120, "--trials", 2,
                       "--seed", 9, "--out", out) == 0
        for name in ("records.jsonl", "summary.csv"):
            assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()

    def test_experiment_from_config_file(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("model = kout\nr = 2\nn_grid = 1000,\ntrials = 1\nformat = json\n")
        out = tmp_path / "exp"
        assert run("experiment", "--config", config, "--trials", 2, "--out", out) == 0
        records = read_records(out / "records.jsonl")
        assert [rec.trial for rec in records] == [0, 1]
        assert (out / "summary.json").exists()

    def test_adversarial(self, tmp_path):
        out = tmp_path / "adv"
        assert run("adversarial", "--model", "pairing", "--r", 2, "--n-grid", 60,
                   "--trials", 1, "--smax", 4, "--out", out) == 0
        records = read_records(out / "records.jsonl")
        assert len(records) == 3
        assert all(rec.kind == "adversarial" for rec in records)

    def test_adversarial_rejects_hamilton_sum(self, tmp_path):
        assert run("adversarial", "--model", "hamilton-sum", "--n-grid", 60,
                   "--out", tmp_path) == 2

    def test_unknown_config_key(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("colours = 3\n")
        assert run("experiment", "--config", config, "--out", tmp_path) == 2


class TestExitCodes:
    def test_contract_violation(self, monkeypatch):
        def broken(args):
            raise ContractViolation("E* escaped its blocks")

        monkeypatch.setitem(cli.COMMANDS, "bound", broken)
        assert run("bound", "--model", "regular", "--r", 2, "--n", 10) == 3

    def test_usage_errors_exit_through_argparse(self):
        with pytest.raises(SystemExit):
            cli.main(["bound", "--model", "regular"])
