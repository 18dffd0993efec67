import csv
import io
import json
import subprocess
import sys

import pytest

from palstream.cli import main
from palstream.runner import RunParams, bound_satisfied, parse_grid, ParameterError

REPORT_KEYS = {"mode", "n", "length", "start", "exact", "space_words", "max_ops_per_push", "config"}


def cli(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def text(tmp_path):
    p = tmp_path / "in.txt"
    p.write_bytes(b"xyzabacabaq")
    return str(p)


@pytest.mark.parametrize(
    "flags",
    [
        ["--mode", "additive", "--error", "2"],
        ["--mode", "multiplicative", "--epsilon", "0.5"],
        ["--mode", "multiplicative", "--epsilon", "9"],
        ["--mode", "exact", "--window", "20"],
        ["--mode", "combined", "--epsilon", "1", "--window", "4"],
    ],
)
def test_run_and_verify_schema(capsys, text, flags):
    rc, out, _ = cli(capsys, "run", *flags, "--input", text)
    assert rc == 0
    rep = json.loads(out)
    assert REPORT_KEYS <= rep.keys() and "oracle_len" not in rep
    assert rep["n"] == 11 and rep["length"] <= 7
    rc, out, _ = cli(capsys, "verify", *flags, "--input", text, "--seed", "5")
    rep = json.loads(out)
    assert rc == 0 and rep["oracle_len"] == 7 and rep["bound_satisfied"] is True
    assert rep["config"]["seed"] in (5, None)


def test_run_exact_answer(capsys, text):
    rep = json.loads(cli(capsys, "run", "--mode", "exact", "--window", "8", "--input", text)[1])
    assert (rep["start"], rep["length"], rep["exact"]) == (4, 7, True)
    assert rep["config"]["window"] == 8 and rep["config"]["prime"] is None


def test_run_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "palstream.cli", "run", "--mode", "additive", "--error", "2", "--strip-newline"],
        input=b"abba\n",
        capture_output=True,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["n"] == 4 and rep["length"] == 4


def test_strip_newline_crlf(capsys, tmp_path):
    p = tmp_path / "x"
    p.write_bytes(b"ab" * 50000 + b"\r\n")
    rep = json.loads(cli(capsys, "run", "--mode", "exact", "--window", "5", "--input", str(p), "--strip-newline")[1])
    assert rep["n"] == 100000


def test_complement_verify(capsys, tmp_path):
    p = tmp_path / "dna"
    p.write_bytes(b"TTACGAATTCGTAA")
    rep = json.loads(cli(capsys, "verify", "--mode", "additive", "--error", "2", "--complement", "--input", str(p))[1])
    assert rep["oracle_len"] == 14 and rep["bound_satisfied"]


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--mode", "additive"],
        ["run", "--mode", "additive", "--error", "1"],
        ["run", "--mode", "multiplicative", "--epsilon", "0"],
        ["run", "--mode", "exact", "--window", "0"],
        ["run", "--mode", "combined", "--epsilon", "1"],
        ["run", "--mode", "exact", "--window", "4", "--complement"],
        ["run", "--mode", "bogus"],
        ["run", "--mode", "additive", "--error", "two"],
        ["gen", "planted", "--length", "10", "--out", "x"],
        ["gen", "random", "--length", "10", "--sigma", "1", "--out", "x"],
        ["bench", "--grid", "additive:n=10:E=1", "--out", "-"],
        ["bench", "--grid", "nope:n=10", "--out", "-"],
        ["bench", "--grid", "exact:n=10:q=3", "--out", "-"],
        [],
    ],
)
def test_parameter_errors_exit_2(capsys, text, argv):
    if argv and argv[0] == "run":
        argv = argv + ["--input", text]
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 2


def test_io_errors_exit_1(capsys, tmp_path):
    missing = str(tmp_path / "missing")
    assert cli(capsys, "run", "--mode", "additive", "--error", "2", "--input", missing)[0] == 1
    assert cli(capsys, "gen", "nu", "--length", "5", "--out", str(tmp_path / "no" / "dir"))[0] == 1
    dna = tmp_path / "dna"
    dna.write_bytes(b"ACGN")
    assert cli(capsys, "run", "--mode", "additive", "--error", "2", "--complement", "--input", str(dna))[0] == 1


def test_gen(capsys, tmp_path):
    out = tmp_path / "g"
    assert cli(capsys, "gen", "nu", "--length", "6", "--out", str(out))[0] == 0
    assert out.read_bytes() == b"010011"
    assert cli(capsys, "gen", "random", "--length", "50", "--sigma", "3", "--seed", "2", "--out", str(out))[0] == 0
    data = out.read_bytes()
    assert len(data) == 50 and set(data) <= set(b"abc")
    assert cli(capsys, "gen", "planted", "--length", "200", "--sigma", "4", "--planted-len", "31", "--out", str(out))[0] == 0
    rep = json.loads(cli(capsys, "verify", "--mode", "exact", "--window", "100", "--input", str(out))[1])
    assert rep["length"] >= 31 and rep["bound_satisfied"]


def test_bench_csv(capsys, tmp_path):
    out = tmp_path / "b.csv"
    grid = "additive:n=500:E=2,8;multiplicative:n=300:eps=1,8;exact:n=300:m=4;combined:n=200:eps=0.5:m=6"
    assert cli(capsys, "bench", "--grid", grid, "--out", str(out))[0] == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert out.read_text().splitlines()[0].startswith("mode,n,param,space_words,ns_per_symbol,achieved_error")
    assert [r["mode"] for r in rows] == ["additive", "additive", "multiplicative", "multiplicative", "exact", "combined"]
    assert [r["param"] for r in rows[:2]] == ["2", "8"]
    assert all(float(r["ns_per_symbol"]) > 0 and int(r["space_words"]) > 0 for r in rows)


def test_bench_grid_file(capsys, tmp_path):
    g = tmp_path / "grid.txt"
    g.write_text("# sizes\nexact:n=100,200:m=8\n\nadditive:n=100:E=4\n")
    rc, out, _ = cli(capsys, "bench", "--grid", str(g), "--out", "-")
    assert rc == 0 and len(out.strip().splitlines()) == 4


def test_parse_grid_expands_product():
    cells = parse_grid("additive:n=1e3,2e3:E=2,4:sigma=2")
    assert [(c.n, c.params.error, c.sigma) for c in cells] == [(1000, 2, 2), (1000, 4, 2), (2000, 2, 2), (2000, 4, 2)]
    with pytest.raises(ParameterError):
        parse_grid(" ; ")


@pytest.mark.parametrize(
    "mode, params, length, L, exact, ok",
    [
        ("additive", RunParams(error=2), 5, 7, False, True),
        ("additive", RunParams(error=2), 4, 7, False, False),
        ("multiplicative", RunParams(epsilon=0.5), 5, 7, False, True),
        ("multiplicative", RunParams(epsilon=0.5), 4, 7, False, False),
        ("exact", RunParams(window=8), 7, 7, True, True),
        ("exact", RunParams(window=8), 6, 7, True, False),
        ("exact", RunParams(window=4), 5, 7, False, True),
        ("exact", RunParams(window=4), 3, 7, False, False),
        ("combined", RunParams(epsilon=1, window=4), 4, 7, False, True),
        ("combined", RunParams(epsilon=1, window=4), 3, 7, False, False),
        ("combined", RunParams(epsilon=1, window=9), 4, 7, False, False),
        ("additive", RunParams(error=2), 8, 7, False, False),
    ],
)
def test_bound_satisfied(mode, params, length, L, exact, ok):
    assert bound_satisfied(mode, params, length, L, exact) is ok
