"""Command-line interface: instance generation, Hamiltonicity checking,
experiment runs, plotting, and the documented exit codes (0 success,
1 input error, 2 capability error)."""

from __future__ import annotations

import json
import os
import subprocess
import sys
from itertools import combinations

import pytest

from weakham import Hypergraph, dump_hypergraph, load_hypergraph, load_table
from weakham.cli import main


def run_cli(*argv):
    return main(list(argv))


@pytest.fixture
def tri_file(tmp_path):
    path = os.fspath(tmp_path / "tri.txt")
    dump_hypergraph(Hypergraph.from_edges(3, 3, [(0, 1, 2)]), path)
    return path


@pytest.fixture
def big_file(tmp_path):
    chain = [tuple(range(i, i + 3)) for i in range(19)]
    path = os.fspath(tmp_path / "big.txt")
    dump_hypergraph(Hypergraph.from_edges(21, 3, chain), path)
    return path


# ------------------------------------------------------------------------ gen


def test_gen_gnp_with_c(tmp_path, capsys):
    out = os.fspath(tmp_path / "h.txt")
    rc = run_cli("gen", "--n", "30", "--d", "3", "--model", "gnp",
                 "--c", "0", "--seed", "7", "--out", out)
    assert rc == 0
    assert capsys.readouterr().out.startswith(f"wrote {out}: n=30 d=3 m=")
    H = load_hypergraph(out)
    assert H.n == 30 and H.d == 3


def test_gen_gnm_with_m(tmp_path):
    out = os.fspath(tmp_path / "h.txt")
    rc = run_cli("gen", "--n", "12", "--d", "3", "--model", "gnm",
                 "--m", "10", "--seed", "1", "--out", out)
    assert rc == 0
    assert load_hypergraph(out).m == 10


def test_gen_is_deterministic(tmp_path):
    a = os.fspath(tmp_path / "a.txt")
    b = os.fspath(tmp_path / "b.txt")
    for out in (a, b):
        assert run_cli("gen", "--n", "20", "--d", "4", "--model", "gnp",
                       "--p", "0.05", "--seed", "3", "--out", out) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_gen_rejects_ambiguous_density(tmp_path, capsys):
    out = os.fspath(tmp_path / "h.txt")
    rc = run_cli("gen", "--n", "10", "--d", "3", "--model", "gnp",
                 "--p", "0.1", "--c", "0", "--out", out)
    assert rc == 1
    assert "exactly one of --p or --c" in capsys.readouterr().err
    rc = run_cli("gen", "--n", "10", "--d", "3", "--model", "gnp", "--out", out)
    assert rc == 1
    rc = run_cli("gen", "--n", "10", "--d", "3", "--model", "gnm",
                 "--m", "4", "--p", "0.1", "--out", out)
    assert rc == 1
    assert "--p applies to gnp only" in capsys.readouterr().err


def test_gen_rejects_bad_flags(capsys):
    assert run_cli("gen", "--n", "10", "--model", "gnp") == 1  # missing --d
    assert run_cli("frobnicate") == 1
    capsys.readouterr()


# ---------------------------------------------------------------------- check


def test_check_exact_yes(tri_file, capsys):
    rc = run_cli("check", "--in", tri_file)
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["answer"] == "yes"
    assert doc["method"] == "dp"


def test_check_exact_above_cutoff_is_capability_exit(big_file, capsys):
    rc = run_cli("check", "--in", big_file, "--mode", "exact")
    assert rc == 2
    assert "capability error:" in capsys.readouterr().err


def test_check_heuristic_complete(tmp_path, capsys):
    path = os.fspath(tmp_path / "k6.txt")
    dump_hypergraph(
        Hypergraph.from_edges(6, 3, list(combinations(range(6), 3))), path
    )
    rc = run_cli("check", "--in", path, "--mode", "heuristic", "--seed", "5")
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["answer"] == "yes"
    assert doc["method"] == "heuristic"
    assert doc["witness"]["kind"] == "cycle"
    assert doc["rotations"] >= 0


def test_check_heuristic_isolated_vertex(tmp_path, capsys):
    path = os.fspath(tmp_path / "iso.txt")
    dump_hypergraph(Hypergraph.from_edges(5, 3, [(0, 1, 2)]), path)
    rc = run_cli("check", "--in", path, "--mode", "heuristic")
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["answer"] == "no"
    assert "is isolated" in doc["note"]


def test_check_heuristic_big_instance_is_answerable(big_file, capsys):
    # the heuristic path has no size cap, unlike exact mode
    rc = run_cli("check", "--in", big_file, "--mode", "heuristic", "--seed", "1")
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["answer"] in ("yes", "no", "unknown")


def test_check_missing_file(tmp_path, capsys):
    rc = run_cli("check", "--in", os.fspath(tmp_path / "absent.txt"))
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_check_malformed_file(tmp_path, capsys):
    path = os.fspath(tmp_path / "junk.txt")
    with open(path, "w") as f:
        f.write("not a hypergraph\n")
    rc = run_cli("check", "--in", path)
    assert rc == 1
    capsys.readouterr()


# ------------------------------------------------------------------------ exp


def test_exp_threshold_with_negative_c_grid(tmp_path, capsys):
    out = os.fspath(tmp_path / "t.csv")
    rc = run_cli("exp", "threshold", "--n", "12", "--trials", "5",
                 "--c-grid=-1,0,1", "--seed", "2", "--out", out)
    assert rc == 0
    assert capsys.readouterr().out == f"wrote {out}: 3 rows\n"
    tab = load_table(out)
    assert tab.kind == "threshold"
    assert [float(x) for x in tab.column("c")] == [-1.0, 0.0, 1.0]


def test_exp_config_file_with_flag_override(tmp_path):
    cfgfile = os.fspath(tmp_path / "exp.cfg")
    with open(cfgfile, "w") as f:
        f.write("# tiny run\nn = 12\ntrials = 4\nc_grid = 0\nseed = 5\n")
    out1 = os.fspath(tmp_path / "a.csv")
    out2 = os.fspath(tmp_path / "b.csv")
    assert run_cli("exp", "threshold", "--config", cfgfile, "--out", out1) == 0
    assert run_cli("exp", "threshold", "--config", cfgfile, "--trials", "4",
                   "--out", out2) == 0
    assert open(out1).read() == open(out2).read()
    assert load_table(out1).column("trials") == ["4"]


def test_exp_out_defaults_into_cwd(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    rc = run_cli("exp", "process", "--n", "6", "--trials", "2", "--seed", "1")
    assert rc == 0
    assert capsys.readouterr().out == "wrote process.csv: 2 rows\n"
    assert load_table("process.csv").kind == "process"


def test_exp_pab_grid(tmp_path):
    out = os.fspath(tmp_path / "p.csv")
    rc = run_cli("exp", "pab", "--a-grid", "4", "--b-grid", "1,2",
                 "--p-grid", "0.001", "--trials", "100", "--seed", "3",
                 "--out", out)
    assert rc == 0
    tab = load_table(out)
    assert tab.kind == "pab"
    assert len(tab.rows) == 2


def test_exp_rejects_bad_config(tmp_path, capsys):
    out = os.fspath(tmp_path / "x.csv")
    assert run_cli("exp", "threshold", "--out", out) == 1  # no n / c_grid
    assert run_cli("exp", "wibble", "--out", out) == 1
    cfgfile = os.fspath(tmp_path / "bad.cfg")
    with open(cfgfile, "w") as f:
        f.write("nonsense line\n")
    assert run_cli("exp", "threshold", "--config", cfgfile, "--out", out) == 1
    capsys.readouterr()


# ----------------------------------------------------------------------- plot


def test_plot_command(tmp_path, capsys):
    csv_in = os.path.join(os.path.dirname(__file__), "data", "threshold_gold.csv")
    out = os.fspath(tmp_path / "plot.svg")
    rc = run_cli("plot", "--in", csv_in, "--out", out)
    assert rc == 0
    assert capsys.readouterr().out == f"wrote {out}\n"
    with open(out) as f:
        assert f.read().startswith("<svg ")


def test_plot_wrong_schema(tmp_path, capsys):
    out = os.fspath(tmp_path / "p.csv")
    assert run_cli("exp", "process", "--n", "6", "--trials", "2",
                   "--seed", "1", "--out", out) == 0
    rc = run_cli("plot", "--in", out, "--out", os.fspath(tmp_path / "p.svg"))
    assert rc == 1
    assert "expects a threshold or gnm table" in capsys.readouterr().err


def test_plot_missing_input(tmp_path, capsys):
    rc = run_cli("plot", "--in", os.fspath(tmp_path / "absent.csv"),
                 "--out", os.fspath(tmp_path / "x.svg"))
    assert rc == 1
    capsys.readouterr()


# ------------------------------------------------------------------ module run


def test_module_entry_point(tmp_path):
    out = os.fspath(tmp_path / "h.txt")
    proc = subprocess.run(
        [sys.executable, "-m", "weakham", "gen", "--n", "10", "--d", "3",
         "--model", "gnp", "--c", "0", "--seed", "1", "--out", out],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith(f"wrote {out}")
    assert load_hypergraph(out).n == 10
