"""Experiment harness: Wilson intervals, config parsing and validation, the
canonical CSV table form, deterministic parallel execution, and the six
experiment runners on small inputs."""

from __future__ import annotations

import math
import os

import pytest

from weakham import (
    InputError,
    Table,
    estimate_mindeg_probability,
    limiting_probability,
    load_table,
    m_from_c,
    make_config,
    p_from_c,
    parse_config_text,
    read_table,
    run_experiment,
    wilson_interval,
)

Z95 = 1.959963984540054


# ------------------------------------------------------------------ intervals


def test_wilson_interval_frozen_values():
    lo, hi = wilson_interval(8, 10)
    assert lo == pytest.approx(0.49016247153664183, rel=1e-12)
    assert hi == pytest.approx(0.9433178485456247, rel=1e-12)


def test_wilson_interval_extremes():
    lo0, hi0 = wilson_interval(0, 10)
    assert lo0 == 0.0
    assert 0.2 < hi0 < 0.35
    lo1, hi1 = wilson_interval(10, 10)
    assert 0.65 < lo1 < 0.8
    assert hi1 <= 1.0


def test_wilson_interval_contains_point_estimate():
    for s, t in ((1, 7), (3, 9), (50, 100), (999, 1000)):
        lo, hi = wilson_interval(s, t)
        assert 0.0 <= lo <= s / t <= hi <= 1.0


def test_wilson_interval_narrows_with_trials():
    w100 = wilson_interval(50, 100)
    w1000 = wilson_interval(500, 1000)
    assert w1000[1] - w1000[0] < w100[1] - w100[0]


def test_wilson_interval_custom_z():
    lo95, hi95 = wilson_interval(5, 10)
    lo99, hi99 = wilson_interval(5, 10, z=2.5758293035489004)
    assert lo99 < lo95 and hi99 > hi95


# -------------------------------------------------------------------- configs


def test_parse_config_text():
    text = "# comment\n\nn = 100\ntrials=7\nc_grid = -1,0,1\n"
    assert parse_config_text(text) == {
        "n": "100",
        "trials": "7",
        "c_grid": "-1,0,1",
    }


def test_parse_config_text_rejects_bad_lines():
    with pytest.raises(InputError, match="config line 1.*key = value"):
        parse_config_text("just words\n")
    with pytest.raises(InputError, match="empty key"):
        parse_config_text("= 3\n")


def test_make_config_parses_types():
    cfg = make_config(
        "threshold",
        {"n": "20", "trials": "9", "c_grid": "-1,0,1", "seed": "4",
         "workers": "2"},
    )
    assert cfg.experiment == "threshold"
    assert cfg.n == 20
    assert cfg.trials == 9
    assert cfg.c_grid == (-1.0, 0.0, 1.0)
    assert cfg.seed == 4
    assert cfg.workers == 2


def test_make_config_budget_zero_means_default():
    base = {"n": "10", "c_grid": "0"}
    cfg = make_config("threshold", dict(base, budget="0"))
    assert cfg.budget is None
    cfg = make_config("threshold", dict(base, budget="50"))
    assert cfg.budget == 50


def test_make_config_rejections():
    with pytest.raises(InputError, match="unknown config key 'c-grid'"):
        make_config("threshold", {"c-grid": "0"})
    with pytest.raises(InputError, match="expected integer"):
        make_config("threshold", {"n": "ten"})
    with pytest.raises(InputError, match="unknown experiment"):
        make_config("sprinkle", {})
    with pytest.raises(InputError, match="says experiment='gnm'"):
        make_config("threshold", {"experiment": "gnm"})


# --------------------------------------------------------------------- tables


def _tiny_threshold():
    cfg = make_config(
        "threshold", {"n": "12", "trials": "6", "c_grid": "0", "seed": "3"}
    )
    return run_experiment(cfg)


def test_table_csv_magic_and_shape():
    tab = _tiny_threshold()
    text = tab.to_csv_text()
    lines = text.splitlines()
    assert lines[0] == "# weak-ham-lab v1 threshold"
    assert lines[1].startswith("c,n,d,p,trials,")
    assert len(lines) == 2 + len(tab.rows)
    assert text.endswith("\n")
    assert "\r" not in text


def test_table_reemission_is_byte_identical():
    tab = _tiny_threshold()
    text = tab.to_csv_text()
    assert read_table(text).to_csv_text() == text


def test_table_save_and_load(tmp_path):
    tab = _tiny_threshold()
    path = os.fspath(tmp_path / "out.csv")
    tab.save(path)
    raw = open(path, "rb").read()
    assert raw.startswith(b"# weak-ham-lab v1 threshold\n")
    assert b"\r" not in raw
    assert load_table(path).to_csv_text() == tab.to_csv_text()


def test_table_column_lookup():
    tab = _tiny_threshold()
    assert [float(x) for x in tab.column("c")] == [0.0]
    with pytest.raises(InputError, match="no column"):
        tab.column("nope")


def test_read_table_rejects_foreign_csv():
    with pytest.raises(InputError, match="missing '# weak-ham-lab v1"):
        read_table("a,b\n1,2\n")
    with pytest.raises(InputError, match="unrecognized CSV schema kind"):
        read_table("# weak-ham-lab v1 wibble\na,b\n")
    with pytest.raises(InputError, match="row width"):
        read_table("# weak-ham-lab v1 threshold\na,b\n1,2,3\n")


# ------------------------------------------------------------------ execution


def test_rerun_is_byte_identical():
    a = _tiny_threshold().to_csv_text()
    b = _tiny_threshold().to_csv_text()
    assert a == b


def test_workers_do_not_change_output():
    base = {"n": "14", "trials": "20", "c_grid": "-1,0,1", "seed": "9"}
    one = run_experiment(make_config("threshold", dict(base, workers="1")))
    two = run_experiment(make_config("threshold", dict(base, workers="2")))
    assert one.to_csv_text() == two.to_csv_text()


def test_estimate_mindeg_probability_deterministic_across_workers():
    a = estimate_mindeg_probability(60, 3, 0.0, trials=200, seed=11, workers=1)
    b = estimate_mindeg_probability(60, 3, 0.0, trials=200, seed=11, workers=2)
    assert a == b
    assert 0.0 <= a <= 1.0


# ------------------------------------------------------------- experiment runs


def _col(tab, name):
    return [float(x) for x in tab.column(name)]


def test_threshold_run_invariants():
    cfg = make_config(
        "threshold",
        {"n": "12", "trials": "15", "c_grid": "-1,0,8", "seed": "5"},
    )
    tab = run_experiment(cfg)
    assert tab.kind == "threshold"
    assert len(tab.rows) == 3
    for c, p, pm, ph, th, unk in zip(
        _col(tab, "c"), _col(tab, "p"), _col(tab, "phat_mindeg"),
        _col(tab, "phat_ham"), _col(tab, "theory"), _col(tab, "unknown_rate")
    ):
        assert p == p_from_c(12, 3, c)
        assert ph <= pm  # min degree 1 is necessary for a weak Hamilton cycle
        assert th == pytest.approx(limiting_probability(c), rel=1e-12)
        assert unk == 0.0  # n=12 is within exact-oracle range
    # denser graphs succeed far more often than sparse ones
    ham = _col(tab, "phat_ham")
    assert ham[2] >= 0.8
    assert ham[2] >= ham[0]


def test_gnm_run_matches_m_formula():
    cfg = make_config(
        "gnm", {"n": "12", "trials": "6", "c_grid": "0,1", "seed": "3"}
    )
    tab = run_experiment(cfg)
    assert tab.kind == "gnm"
    assert [int(x) for x in tab.column("m")] == [
        m_from_c(12, 3, 0.0), m_from_c(12, 3, 1.0)
    ]
    for pm, ph in zip(_col(tab, "phat_mindeg"), _col(tab, "phat_ham")):
        assert ph <= pm


def test_poisson_run_distribution_shape():
    cfg = make_config(
        "poisson", {"n": "30", "trials": "40", "c_grid": "0", "seed": "3"}
    )
    tab = run_experiment(cfg)
    assert tab.kind == "poisson"
    ks = [int(x) for x in tab.column("k")]
    assert ks == sorted(ks)
    counts = [int(x) for x in tab.column("count")]
    assert sum(counts) == 40
    phats = _col(tab, "phat")
    assert all(
        ph == pytest.approx(cnt / 40, abs=1e-12)
        for ph, cnt in zip(phats, counts)
    )
    # per-c summary columns are constant across the k rows
    for name in ("tv", "mean_hat", "mean_theory", "mean_sigma"):
        assert len(set(tab.column(name))) == 1
    tv = _col(tab, "tv")[0]
    assert 0.0 <= tv <= 1.0
    mean_th = _col(tab, "mean_theory")[0]
    assert mean_th == pytest.approx(math.exp(0.0), rel=1e-12)


def test_process_run_necessary_condition_never_violated():
    cfg = make_config("process", {"n": "8", "trials": "10", "seed": "3"})
    tab = run_experiment(cfg)
    assert tab.kind == "process"
    assert len(tab.rows) == 10
    taus = [int(x) for x in tab.column("tau")]
    tham = [int(x) for x in tab.column("t_ham")]
    gaps = [int(x) for x in tab.column("gap")]
    equal = [x == "True" for x in (str(v) for v in tab.column("equal"))]
    for a, b, g, e in zip(taus, tham, gaps, equal):
        assert 1 <= a <= b  # cover time never exceeds the cycle hitting time
        assert g == b - a
        assert e == (a == b)


def test_process_tiny_universe_is_degenerate():
    # n = 3, d = 3: the single possible edge makes the process hit both
    # targets simultaneously at the first step
    cfg = make_config("process", {"n": "3", "trials": "4", "seed": "1"})
    tab = run_experiment(cfg)
    for row_tau, row_t in zip(tab.column("tau"), tab.column("t_ham")):
        assert int(row_tau) == int(row_t) == 1


def test_expansion_run_reports():
    cfg = make_config(
        "expansion",
        {"n": "14", "trials": "5", "c_grid": "0", "seed": "3", "samples": "50"},
    )
    tab = run_experiment(cfg)
    assert tab.kind == "expansion"
    assert len(tab.rows) == 5
    for r in tab.rows:
        row = dict(zip(tab.columns, r))
        assert row["u_exhaustive"] is True
        assert 1 <= int(row["u"]) <= int(row["v1_size"]) // 3 + 1
        assert row["nontrivial_components"] >= 1


def test_pab_run_zero_violations_on_tiny_grid():
    cfg = make_config(
        "pab",
        {"a_grid": "4", "b_grid": "1,2", "p_grid": "0.001", "trials": "200",
         "seed": "3"},
    )
    tab = run_experiment(cfg)
    assert tab.kind == "pab"
    assert len(tab.rows) == 2
    for r in tab.rows:
        row = dict(zip(tab.columns, r))
        assert row["violation_exact"] is False
        assert row["violation_simple"] is False
        assert row["phat"] <= row["bound_exact"] + 3 * max(row["stderr"], 1e-9)


def test_pab_run_derives_b_grid_when_empty():
    cfg = make_config(
        "pab", {"a_grid": "4", "p_grid": "0.001", "trials": "50", "seed": "1"}
    )
    tab = run_experiment(cfg)
    bs = sorted({int(x) for x in tab.column("b")})
    assert bs == list(range(1, 9))  # b ranges over 1..2a for a = 4
