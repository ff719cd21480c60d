import json
import subprocess
import sys

import pytest

from quivercount.cli import main


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({
        "vertices": ["1", "2", "3"],
        "arrows": [{"src": 0, "dst": 1}, {"src": 1, "dst": 2}, {"src": 2, "dst": 0}],
        "multiplicities": [1, 1, 1],
    }))
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps({
        "vertices": ["1", "2"],
        "arrows": [{"src": 0, "dst": 1}],
        "multiplicities": [1, 1],
    }))
    return str(path)


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "quivercount.cli"] + args,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


class TestCommands:
    def test_kac(self, c3_file):
        code, out, _ = run_cli(["kac", "--quiver", c3_file, "--alpha", "1"])
        assert code == 0 and out.strip() == "q + 2"
        code, out, _ = run_cli(["kac", "--quiver", c3_file, "--alpha", "1",
                                "--method", "tree"])
        assert code == 0 and out.strip() == "q + 2"

    def test_kac_gloop(self):
        code, out, _ = run_cli(["kac-gloop", "--g", "1", "--alpha", "3", "--rank", "3"])
        assert code == 0
        assert out.strip() == "q^7 + q^6 + 3q^5 + 2q^4 + 2q^3"

    def test_limits(self, c3_file):
        code, out, _ = run_cli(["limits", "--quiver", c3_file])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "A: (q^2 + 4q + 1) / (q^2 - 2q + 1)"
        assert lines[1] == "B: (q^2 + 4q + 1) / (q^2)"

    def test_kronecker_with_pipeline(self):
        code, out, _ = run_cli(["kac-kronecker", "--r", "3", "--alpha", "1",
                                "--via-zeta"])
        assert code == 0 and out.strip() == "q^3 + 2q^2 + 2q + 1"

    def test_jet_series_json(self, c3_file, tmp_path):
        out_file = tmp_path / "jets.json"
        code, _, _ = run_cli(["--format", "json", "--out", str(out_file),
                              "jet-series", "--quiver", c3_file, "--q", "2",
                              "--n-max", "2"])
        assert code == 0
        data = json.loads(out_file.read_text())
        assert data["counts"] == [28, 592]

    def test_fiber_count_symbolic(self, a2_file):
        code, out, _ = run_cli(["fiber-count", "--quiver", a2_file,
                                "--alpha", "1", "--symbolic"])
        assert code == 0 and out.strip() == "2q - 1"

    def test_fiber_count_deformed(self, a2_file):
        code, out, _ = run_cli(["fiber-count", "--quiver", a2_file,
                                "--alpha", "1", "--rank", "1,1", "--q", "3",
                                "--lam", "1,-1"])
        assert code == 0 and out.strip() == "2"

    def test_ask(self, tmp_path):
        theta = tmp_path / "theta.json"
        theta.write_text("[[[1]]]")
        code, out, _ = run_cli(["ask", "--theta", str(theta), "--q", "2",
                                "--n-max", "2"])
        assert code == 0 and out.strip() == "3/2 2"

    def test_hilbert(self, c3_file):
        code, out, _ = run_cli(["hilbert", "--quiver", c3_file])
        assert code == 0
        assert out.strip() == "(q^2 + 4q + 1) / (q^2 - 2q + 1)"

    def test_hall(self):
        code, out, _ = run_cli(["hall", "--alpha", "1", "--q", "2",
                                "--rank1", "1,0", "--rank2", "0,1"])
        assert code == 0
        data = json.loads(out)
        assert data == {"[0]*[0]": {"[0]": "1", "[1]": "1"}}


class TestDeterminism:
    def test_jobs_do_not_change_output(self, c3_file):
        runs = []
        for jobs in ("1", "2"):
            code, out, _ = run_cli(["--jobs", jobs, "jet-series", "--quiver",
                                    c3_file, "--rank", "1,1,1", "--q", "2",
                                    "--n-max", "2"])
            assert code == 0
            runs.append(out)
        assert runs[0] == runs[1]

    def test_repeat_runs_identical(self, c3_file):
        outs = {run_cli(["kac", "--quiver", c3_file, "--alpha", "2"])[1]
                for _ in range(2)}
        assert len(outs) == 1


class TestErrorPaths:
    def test_bad_quiver_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run_cli(["kac", "--quiver", str(bad), "--alpha", "1"])
        assert code == 2 and "cannot read quiver" in err

    def test_disconnected_kac(self, tmp_path):
        path = tmp_path / "disc.json"
        path.write_text(json.dumps({"vertices": ["1", "2"], "arrows": [],
                                    "multiplicities": [1, 1]}))
        code, _, err = run_cli(["kac", "--quiver", str(path), "--alpha", "1"])
        assert code == 2 and "connected" in err

    def test_not_two_connected_limits(self, a2_file):
        code, _, err = run_cli(["limits", "--quiver", a2_file])
        assert code == 2 and "2-connected" in err

    def test_cap_exceeded(self, c3_file):
        code, _, err = run_cli(["--max-space-log2", "2", "jet-series",
                                "--quiver", c3_file, "--q", "2", "--n-max", "2"])
        assert code == 3 and "cap" in err.lower()

    def test_usage_error(self):
        code, _, _ = run_cli(["kac"])
        assert code == 2
