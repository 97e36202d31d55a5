import json
import subprocess
import sys

import pytest

from conftest import complete, path
from layoutgap.cli import main
from layoutgap.graph import make_graph, read_graph, write_graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k4_file(tmp_path):
    f = tmp_path / "k4.txt"
    write_graph(complete(4), f)
    return f


class TestSample:
    def test_complete_ugraph(self, capsys, tmp_path):
        out_file = tmp_path / "g.txt"
        code, out, _ = run(capsys, "sample", "--kind", "ugraph", "--n", 5, "--p", 1.0,
                           "--seed", 1, "--out", out_file)
        assert code == 0 and out == "n=5 m=10 p=1.0\n"
        assert read_graph(out_file).m == 10

    def test_complete_dag(self, capsys, tmp_path):
        out_file = tmp_path / "d.txt"
        code, _, _ = run(capsys, "sample", "--kind", "dag", "--n", 4, "--p", 1.0,
                         "--seed", 1, "--out", out_file)
        d = read_graph(out_file)
        assert code == 0 and d.directed and d.m == 6 and all(u < v for u, v in d.edges)

    def test_schedule(self, capsys, tmp_path):
        code, out, _ = run(capsys, "sample", "--kind", "ugraph", "--n", 100, "--c", 0.5,
                           "--seed", 1, "--out", tmp_path / "g.txt")
        assert code == 0 and out.endswith("p=0.1\n")

    @pytest.mark.parametrize("extra", [
        ["--p", "0.5", "--c", "0.5"],
        ["--p", "0.5", "--K", "2"],
        [],
        ["--p", "1.5"],
    ])
    def test_usage_errors(self, capsys, tmp_path, extra):
        code, _, err = run(capsys, "sample", "--kind", "ugraph", "--n", 5, "--seed", 1,
                           "--out", tmp_path / "g.txt", *extra)
        assert code == 1 and "error" in err

    def test_seed_required(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sample", "--kind", "ugraph", "--n", 5, "--p", 0.5,
                         "--out", tmp_path / "g.txt")
        assert code == 1

    def test_unwritable(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sample", "--kind", "ugraph", "--n", 5, "--p", 0.5, "--seed", 1,
                         "--out", tmp_path / "missing" / "g.txt")
        assert code == 2


class TestSolveAndGap:
    def test_gap_k4(self, capsys, k4_file):
        code, out, _ = run(capsys, "gap", "--problem", "cutwidth", "--in", k4_file)
        assert code == 0 and out == "min=4 max=4 gap=1.000000\n"

    def test_solve_path(self, capsys, tmp_path):
        f = tmp_path / "p5.txt"
        write_graph(path(5), f)
        code, out, _ = run(capsys, "solve", "--problem", "vertsep", "--objective", "min", "--in", f)
        lines = out.splitlines()
        assert code == 0 and lines[0] == "cost=1"
        assert sorted(map(int, lines[1].removeprefix("order=").split())) == list(range(5))

    def test_directed_inferred(self, capsys, tmp_path):
        f = tmp_path / "chain.txt"
        f.write_text("dag 3 2\n0 1\n1 2\n")
        code, out, _ = run(capsys, "solve", "--problem", "cutwidth", "--objective", "max", "--in", f)
        assert code == 0 and out == "cost=1\norder=0 1 2\n"

    def test_gap_json(self, capsys, tmp_path):
        f = tmp_path / "two.txt"
        write_graph(make_graph(4, [(0, 1), (2, 3)]), f)
        code, out, _ = run(capsys, "gap", "--problem", "vertbis", "--in", f, "--json")
        data = json.loads(out)
        assert code == 0 and data["min_cost"] == 0 and data["gap"] == "inf"
        code, plain, _ = run(capsys, "gap", "--problem", "vertbis", "--in", f)
        assert plain == f"min={data['min_cost']} max={data['max_cost']} gap=inf\n"

    def test_limit_exit_code(self, capsys, tmp_path):
        f = tmp_path / "big.txt"
        write_graph(make_graph(30, [(0, 1)]), f)
        code, _, err = run(capsys, "gap", "--problem", "cutwidth", "--in", f)
        assert code == 2 and "n <= 24" in err

    def test_limit_override(self, capsys, k4_file):
        code, _, _ = run(capsys, "gap", "--problem", "cutwidth", "--in", k4_file, "--limit", 3)
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "gap", "--problem", "cutwidth", "--in", tmp_path / "nope")
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("dag 2 2\n0 1\n1 0\n")
        code, _, _ = run(capsys, "gap", "--problem", "cutwidth", "--in", f)
        assert code == 2

    def test_unknown_flag(self, capsys, k4_file):
        code, _, _ = run(capsys, "gap", "--problem", "cutwidth", "--in", k4_file, "--verbose")
        assert code == 1


class TestBounds:
    def test_cutwidth(self, capsys):
        code, out, _ = run(capsys, "bounds", "--problem", "cutwidth", "--n", 20, "--p", 0.5,
                           "--delta", 0.4)
        assert code == 0 and out.splitlines()[0] == "lower=30 upper=70"

    def test_vertsep(self, capsys):
        code, out, _ = run(capsys, "bounds", "--problem", "vertsep", "--n", 30, "--delta", 0.3)
        assert code == 0 and out.splitlines()[0] == "lower=20 upper=29"

    def test_edge_needs_p(self, capsys):
        code, _, _ = run(capsys, "bounds", "--problem", "edgebis", "--n", 20, "--delta", 0.4)
        assert code == 1

    def test_bad_exponent(self, capsys):
        code, _, _ = run(capsys, "bounds", "--problem", "cutwidth", "--n", 20, "--p", 0.5,
                         "--delta", 0.4, "--c", 0.7)
        assert code == 1


class TestExperiment:
    def write_config(self, tmp_path, **over):
        cfg = dict(kind="edgebis", n_values=[6], p=0.5, trials=3, master_seed=4, delta_target=0.5)
        cfg.update(over)
        f = tmp_path / "cfg.json"
        f.write_text(json.dumps(cfg))
        return f

    def test_csv(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path)
        code, _, _ = run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "a.csv")
        assert code == 0
        text = (tmp_path / "a.csv").read_text()
        assert text.startswith("problem,model,n,p,seed,trial,") and len(text.splitlines()) == 4

    def test_byte_identical(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path)
        run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "a.csv")
        run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_json(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path)
        code, _, _ = run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "a.json",
                         "--format", "json")
        assert code == 0 and len(json.loads((tmp_path / "a.json").read_text())["rows"]) == 3

    def test_trials_zero(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path, trials=0)
        code, _, err = run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "a.csv")
        assert code == 1 and "trials" in err

    def test_errors_listed_per_field(self, capsys, tmp_path):
        cfg = self.write_config(tmp_path, trials=0, master_seed=-1)
        code, _, err = run(capsys, "experiment", "--config", cfg, "--out", tmp_path / "a.csv")
        assert code == 1 and "trials" in err and "master_seed" in err

    def test_invalid_json(self, capsys, tmp_path):
        f = tmp_path / "cfg.json"
        f.write_text("{not json")
        code, _, _ = run(capsys, "experiment", "--config", f, "--out", tmp_path / "a.csv")
        assert code == 1


def test_module_entry_point_is_byte_identical(tmp_path):
    argv = [sys.executable, "-m", "layoutgap", "sample", "--kind", "dag", "--n", "12",
            "--p", "0.3", "--seed", "77", "--out"]
    a = subprocess.run(argv + [str(tmp_path / "a.txt")], capture_output=True, text=True, check=True)
    b = subprocess.run(argv + [str(tmp_path / "b.txt")], capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
