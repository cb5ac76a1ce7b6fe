import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from pqbezier.cli import main

CUBIC = {"kind": "curve", "p": 0.8, "q": 0.5, "points": [[0, 0], [1, 3], [3, 3], [4, 0]]}
QUAD = {"kind": "curve", "p": 0.9, "q": 0.6, "points": [[0, 0], [1, 2], [2, 0]]}
NET = {
    "kind": "surface", "p": 0.9, "q": 0.6, "p2": 1.2, "q2": 0.7,
    "points": [[[0, 0, 0], [0, 1, 1], [0, 2, 0]], [[1, 0, 1], [1, 1, 2], [1, 2, 1]]],
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def table(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array(rows[1:], dtype=float)


@pytest.fixture
def doc(tmp_path):
    def write(obj, name="doc.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return path

    return write


class TestBasis:
    def test_sum_column(self):
        code, out, _ = run("basis", "--n", 3, "--p", 0.8, "--q", 0.7)
        header, data = table(out)
        assert code == 0
        assert header == ["t", "b0", "b1", "b2", "b3", "sum"]
        assert data.shape == (101, 6)
        np.testing.assert_allclose(data[:, -1], 1.0, atol=1e-12)

    def test_degree_zero(self):
        _, out, _ = run("basis", "--n", 0, "--p", 2, "--q", 3, "--grid", 5)
        _, data = table(out)
        assert np.all(data[:, 1] == 1.0)

    def test_wide_parameters(self):
        _, out, _ = run("basis", "--n", 3, "--p", 10, "--q", 5)
        _, data = table(out)
        assert np.all(np.isfinite(data)) and data[:, 1:5].min() >= 0

    @pytest.mark.parametrize("argv", [
        ["basis", "--n", "3", "--p", "0", "--q", "1"],
        ["basis", "--n", "-1", "--p", "1", "--q", "1"],
        ["basis", "--n", "3", "--p", "1"],
        ["basis", "--n", "3", "--p", "1", "--q", "1", "--grid", "1"],
        ["frobnicate"],
        [],
    ])
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2


class TestCurve:
    def test_eval_endpoint_is_verbatim(self, doc):
        assert run("curve", "eval", doc(CUBIC), "--t", 0)[1] == "0.0,0.0\n"
        assert run("curve", "eval", doc(CUBIC), "--t", 1)[1] == "4.0,0.0\n"

    def test_sample(self, doc):
        header, data = table(run("curve", "sample", doc(CUBIC), "--samples", 11)[1])
        assert header == ["t", "x", "y"] and data.shape == (11, 3)

    def test_sample_uses_style(self, doc):
        _, data = table(run("curve", "sample", doc({**CUBIC, "style": {"samples": 7}}))[1])
        assert data.shape == (7, 3)

    def test_elevate_twice(self, doc, tmp_path):
        out = tmp_path / "up.json"
        assert run("curve", "elevate", doc(QUAD), "--times", 2, "--out", out)[0] == 0
        up = json.loads(out.read_text())
        assert len(up["points"]) == 5
        _, before = table(run("curve", "sample", doc(QUAD))[1])
        _, after = table(run("curve", "sample", out)[1])
        np.testing.assert_allclose(after, before, atol=1e-9)

    def test_elevate_to_stdout(self, doc):
        code, out, _ = run("curve", "elevate", doc(QUAD))
        assert code == 0 and len(json.loads(out)["points"]) == 4

    def test_casteljau_triangle(self, doc):
        lines = run("curve", "casteljau", doc(QUAD), "--t", 0.5)[1].splitlines()
        assert len(lines) == 3
        assert [line.count("(") for line in lines] == [3, 2, 1]
        assert lines[0].startswith("(0.0, 0.0)") and lines[2].startswith("    (")

    def test_data_errors(self, doc, tmp_path):
        code, _, err = run("curve", "eval", doc({**CUBIC, "q": -2}))
        assert code == 1 and "p/q" in err
        assert run("curve", "eval", doc(NET))[0] == 1
        assert run("curve", "eval", tmp_path / "nope.json")[0] == 1

    def test_flag_errors(self, doc):
        assert run("curve", "eval", doc(CUBIC), "--t", 2)[0] == 2
        assert run("curve", "spin", doc(CUBIC))[0] == 2
        assert run("curve", "elevate", doc(CUBIC), "--times", 0)[0] == 2


class TestSurface:
    def test_eval_corner(self, doc):
        assert run("surface", "eval", doc(NET), "--u", 0, "--v", 0)[1] == "0.0,0.0,0.0\n"

    def test_iso_boundary(self, doc):
        code, out, _ = run("surface", "iso", doc(NET), "--v", 0)
        curve = json.loads(out)
        assert code == 0 and curve["kind"] == "curve"
        assert curve["points"] == [[0.0, 0.0, 0.0], [1.0, 0.0, 1.0]]
        assert (curve["p"], curve["q"]) == (0.9, 0.6)

    def test_sample_constant(self, doc):
        flat = {**NET, "points": [[[1, 2, 3]] * 3] * 2}
        header, data = table(run("surface", "sample", doc(flat))[1])
        assert header == ["u", "v", "x", "y", "z"] and data.shape == (441, 5)
        np.testing.assert_allclose(data[:, 2:], np.tile([1, 2, 3], (441, 1)), atol=1e-14)

    def test_elevate(self, doc):
        up = json.loads(run("surface", "elevate", doc(NET), "--times", 2)[1])
        assert len(up["points"]) == 4 and len(up["points"][0]) == 5

    def test_usage(self, doc):
        assert run("surface", "eval", doc(NET), "--u", 0.5)[0] == 2
        assert run("surface", "iso", doc(NET))[0] == 2
        assert run("surface", "iso", doc(NET), "--u", 0.1, "--v", 0.2)[0] == 2

    def test_wrong_kind(self, doc):
        assert run("surface", "eval", doc(CUBIC), "--u", 0, "--v", 0)[0] == 1


class TestOperator:
    def test_linear_exact(self):
        header, data = table(run("operator", "--f", "t", "--schedule", "reference")[1])
        assert header == ["n", "p_n", "q_n", "sup_error"]
        assert np.all(data[:, 3] <= 1e-12)

    def test_reference_schedule(self):
        _, data = table(run("operator", "--f", "t2", "--schedule", "reference")[1])
        np.testing.assert_array_equal(data[:, 0], [8, 16, 32, 64])
        assert data[-1, 3] < data[0, 3]

    def test_fixed_plateau(self):
        _, data = table(run("operator", "--f", "t2", "--p", 0.9, "--q", 0.5, "--n", 8, 32, 128)[1])
        assert np.all(data[:, 3] > 1e-3)

    @pytest.mark.parametrize("argv", [
        ["--f", "cosh", "--schedule", "reference"],
        ["--f", "t2"],
        ["--f", "t2", "--p", "0.9"],
        ["--f", "t2", "--schedule", "reference", "--p", "0.9", "--q", "0.5"],
        ["--f", "t2", "--schedule", "reference", "--n", "16", "8"],
    ])
    def test_usage(self, argv):
        assert run("operator", *argv)[0] == 2


class TestRender:
    def test_deterministic(self, doc, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run("render", doc(CUBIC), "--out", a, "--show-hull")[0] == 0
        assert run("render", doc(CUBIC), "--out", b, "--show-hull")[0] == 0
        assert a.read_bytes() == b.read_bytes()
        text = a.read_text()
        assert text.startswith("<?xml") and 'class="hull"' in text
        assert "stroke-dasharray" in text

    def test_endpoints_on_markers(self, doc, tmp_path):
        out = tmp_path / "c.svg"
        run("render", doc(CUBIC), "--out", out, "--samples", 50)
        lines = out.read_text().splitlines()
        circles = [line for line in lines if "<circle" in line]
        curve = next(line for line in lines if 'class="curve"' in line)
        coords = curve.split('points="')[1].split('"')[0].split()
        assert len(coords) == 50
        first = circles[0].split('cx="')[1].split('"')[0] + "," + circles[0].split('cy="')[1].split('"')[0]
        last = circles[-1].split('cx="')[1].split('"')[0] + "," + circles[-1].split('cy="')[1].split('"')[0]
        assert coords[0] == first and coords[-1] == last

    def test_no_hull_by_default(self, doc, tmp_path):
        out = tmp_path / "d.svg"
        run("render", doc(CUBIC), "--out", out)
        assert 'class="hull"' not in out.read_text()

    def test_three_dimensional_input(self, doc, tmp_path):
        code, _, err = run("render", doc({**CUBIC, "points": [[0, 0, 0], [1, 1, 1]]}), "--out", tmp_path / "x.svg")
        assert code == 1 and "2D" in err

    def test_out_required(self, doc):
        assert run("render", doc(CUBIC))[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "pqbezier", "basis", "--n", "2", "--p", "1", "--q", "1", "--grid", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[2] == "0.5,0.25,0.5,0.25,1.0"
