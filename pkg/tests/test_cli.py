import io
import json
import re

import pytest

from reliab.cli import main
from reliab.graph import load_graph, serialize_graph

C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.g"
    path.write_text(C5)
    return str(path)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eval(c5_file):
    assert run("eval", "-g", c5_file, "-p", "1/2") == (0, "3/16\n")
    for strategy in ("brute_force", "subset_dp"):
        assert run("eval", "-g", c5_file, "-p", "1/3", "--strategy", strategy, "--no-sp") == (0, "112/243\n")


def test_eval_weighted(tmp_path):
    path = tmp_path / "p.g"
    path.write_text("3 2\n0 1 1/2\n1 2 1/4\n")
    assert run("eval-weighted", "-g", str(path)) == (0, "3/8\n")


def test_coeffs(c5_file):
    assert run("coeffs", "-g", c5_file, "--basis", "p") == (0, "1 0 -10 20 -15 4\n")
    assert run("coeffs", "-g", c5_file) == (0, "0 0 0 0 5 1\n")


def test_count_and_trees(c5_file):
    assert run("count", "-g", c5_file) == (0, "6\n")
    assert run("trees", "-g", c5_file) == (0, "5\n")


def test_shift():
    assert run("shift", "--bounce", "2", "--w", "7") == (0, "w_S = 7/2, C_S = 14\n")
    assert run("shift", "--bounce", "2,2", "--w", "12") == (0, "w_S = 16/3, C_S = 746496\n")


def test_family():
    code, out = run("family", "-m", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[0].startswith("2,2\tw_S = 77/26")


@pytest.mark.parametrize(
    "flags, n, m",
    [(["--bounce", "3,2,3,2"], 5 + 5 * 17, 5 * 24), (["--stretch", "2"], 10, 10), (["--thicken", "3"], 5, 15)],
)
def test_inflate(c5_file, tmp_path, flags, n, m):
    out = tmp_path / "out.g"
    assert run("inflate", "-g", c5_file, *flags, "-o", str(out))[0] == 0
    g = load_graph(str(out))
    assert (g.n, g.m) == (n, m)


def test_inflate_weighted_roundtrip(c5_file, tmp_path):
    out = tmp_path / "out.g"
    run("inflate", "-g", c5_file, "--stretch", "2", "--weight", "3/2", "-o", str(out))
    text = out.read_text()
    assert serialize_graph(load_graph(str(out))) == text
    assert "3/2" in text


def test_reduce_demo(c5_file):
    code, out = run("reduce-demo", "-g", c5_file, "-p", "1/2")
    report = json.loads(out)
    assert code == 0
    assert report["verdict"] == "PASS"
    assert report["recovered_p"] == "1 0 -10 20 -15 4"
    assert report["lift"]["k"] == 5


def test_outputs_are_exact(c5_file):
    code, out = run("reduce-demo", "-g", c5_file, "-p", "1/8")
    report = json.loads(out)
    for rec in report["sequences"]:
        for key in ("w_S", "C_S", "value", "point"):
            assert RATIONAL.match(rec[key])
    assert all(RATIONAL.match(c) for c in report["recovered_w"].split())


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "-g", "/nonexistent/file", "-p", "1/2"],
        ["eval", "-p", "1/2"],
        ["frobnicate"],
        ["shift", "--bounce", "2,1", "--w", "7"],
        ["shift", "--bounce", "2", "--w", "0"],
        ["shift", "--bounce", "2", "--w", "0.5"],
        ["family", "-m", "0"],
    ],
)
def test_input_errors(argv, capsys):
    assert run(*argv)[0] == 1
    assert "error" in capsys.readouterr().err


def test_bad_graph_file(tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("2 1\n0 5\n")
    assert run("trees", "-g", str(bad))[0] == 1


def test_disconnected_graph(tmp_path, capsys):
    g = tmp_path / "d.g"
    g.write_text("3 1\n0 1\n")
    assert run("eval", "-g", str(g), "-p", "1/2")[0] == 1
    assert "connected" in capsys.readouterr().err


def test_cap_error(c5_file, monkeypatch):
    monkeypatch.setenv("RELIAB_BRUTE_CAP", "4")
    assert run("coeffs", "-g", c5_file)[0] == 2
    assert run("eval", "-g", c5_file, "-p", "1/2", "--strategy", "subset_dp")[0] == 0

