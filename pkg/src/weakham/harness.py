"""Reproducible Monte Carlo experiments over the random hypergraph models.

Each experiment maps a fixed config to a CSV table: the threshold scans
estimate P(weak Hamiltonian) and P(min degree >= 1) against the limit law
exp(-exp(-c)), the isolated-count experiment compares against its Poisson
limit, the edge-process experiment measures the gap between losing the last
isolated vertex and becoming weakly Hamiltonian, the expansion experiment
surveys non-expanding sets, and the pab experiment stress-tests the greedy
covering bounds.

Determinism contract: every trial is keyed by (master seed, stream) and is
computed independently, workers merge results by trial order, and floats are
serialized with repr(), so a config + seed pair yields byte-identical CSV
regardless of worker count. Timings are kept on in-memory records only —
never in tables.

Verdict policy: heuristic search failures at sizes the exact oracle cannot
reach are reported as "unknown", a separate column that is never folded into
the "no" count; point estimates use decided trials only and unknown-rates
are reported alongside.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import CapabilityError, InputError
from .expansion import (
    greedy_probe,
    minimal_nonexpanding_connected,
    pab_bound_exact,
    pab_bound_simple,
    u_exact,
    u_sampled_check,
    U_EXACT_MAX_V1,
)
from .hypercore import Hypergraph, components, isolated_vertices, non_isolated_vertices
from .oracle import DP_MAX_VERTICES, exact_weak_hamiltonian
from .randmodels import (
    GnmParams,
    GnpParams,
    SeededRng,
    edge_process,
    limiting_probability,
    m_from_c,
    p_from_c,
    sample_gnm,
    sample_gnp,
    sampled_covered_vertices,
)
from .weakpaths import rotation_extension_search, validate

__all__ = [
    "ExperimentConfig",
    "TrialRecord",
    "ProcessRecord",
    "Table",
    "parse_config_text",
    "make_config",
    "wilson_interval",
    "run_threshold",
    "run_gnm_threshold",
    "run_isolated_distribution",
    "run_process",
    "run_expansion",
    "run_pab",
    "run_experiment",
    "estimate_mindeg_probability",
    "read_table",
    "load_table",
    "Z95",
]

Z95 = 1.959963984540054
CSV_MAGIC = "# weak-ham-lab v1"

# offset separating the sampling stream of a trial from the stream its
# heuristic search consumes; trial streams are dense integers, so the lane
# must dwarf any conceivable trial count
_SEARCH_LANE = 1 << 48
PROCESS_HEURISTIC_MAX_N = 60

EXPERIMENTS = ("threshold", "gnm", "poisson", "process", "expansion", "pab")

_DEFAULT_P_GRID = (2.0**-10, 2.0**-9, 2.0**-8, 2.0**-7, 2.0**-6)


@dataclass(frozen=True)
class ExperimentConfig:
    """Immutable description of one experiment run. budget=None means the
    search default; b_grid=() means b in 1..2a per a."""

    experiment: str
    n: int = 0
    d: int = 3
    c_grid: tuple[float, ...] = ()
    trials: int = 100
    seed: int = 0
    workers: int = 1
    budget: int | None = None
    oracle_cutoff: int = DP_MAX_VERTICES
    samples: int = 2000
    a_grid: tuple[int, ...] = (4, 6, 8)
    b_grid: tuple[int, ...] = ()
    p_grid: tuple[float, ...] = _DEFAULT_P_GRID
    out: str | None = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise InputError(
                f"unknown experiment {self.experiment!r}; choose from {EXPERIMENTS}"
            )
        if self.trials < 1:
            raise InputError(f"trials must be >= 1, got {self.trials}")
        if self.workers < 1:
            raise InputError(f"workers must be >= 1, got {self.workers}")
        if self.d < 2:
            raise InputError(f"d must be >= 2, got {self.d}")
        if self.oracle_cutoff > DP_MAX_VERTICES:
            raise InputError(
                f"oracle_cutoff cannot exceed {DP_MAX_VERTICES}, got {self.oracle_cutoff}"
            )
        if self.experiment in ("threshold", "gnm", "poisson", "expansion"):
            if self.n < 1:
                raise InputError(f"{self.experiment} needs n >= 1, got {self.n}")
            if not self.c_grid:
                raise InputError(f"{self.experiment} needs a non-empty c_grid")
        if self.experiment == "process":
            if self.n < self.d:
                raise InputError(
                    f"process needs n >= d, got n={self.n}, d={self.d}"
                )
            if self.n > PROCESS_HEURISTIC_MAX_N:
                raise CapabilityError(
                    f"process experiment handles n <= {PROCESS_HEURISTIC_MAX_N}, "
                    f"got n = {self.n}"
                )
        if self.experiment == "pab":
            if not self.a_grid or not self.p_grid:
                raise InputError("pab needs non-empty a_grid and p_grid")
            for a in self.a_grid:
                if a < 1:
                    raise InputError(f"a values must be >= 1, got {a}")
            for b in self.b_grid:
                if b < 1:
                    raise InputError(f"b values must be >= 1, got {b}")
            for p in self.p_grid:
                if not (0.0 <= p <= 1.0):
                    raise InputError(f"p values must lie in [0, 1], got {p}")


@dataclass
class TrialRecord:
    """One threshold-style trial. weak_ham is "yes" (validated witness),
    "no" (certified), or "unknown" (heuristic gave up above the oracle
    cutoff). elapsed stays off the CSV so tables are run-invariant."""

    trial: int
    n: int
    d: int
    c: float
    isolated_count: int
    min_degree_ok: bool
    weak_ham: str
    budget_exhausted: bool
    elapsed: float


@dataclass
class ProcessRecord:
    """One edge-process trial: tau = first edge count with no isolated
    vertex, t_ham = first edge count with a weak Hamilton cycle."""

    trial: int
    n: int
    d: int
    tau: int
    t_ham: int

    @property
    def equal(self) -> bool:
        return self.tau == self.t_ham


# --- config parsing -----------------------------------------------------------

_INT_KEYS = frozenset(
    {"n", "d", "trials", "seed", "workers", "oracle_cutoff", "samples", "budget"}
)
_FLOAT_LIST_KEYS = frozenset({"c_grid", "p_grid"})
_INT_LIST_KEYS = frozenset({"a_grid", "b_grid"})


def parse_config_text(text: str) -> dict[str, str]:
    """Flat `key = value` lines; blank lines and #-comments ignored."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        if not key:
            raise InputError(f"config line {lineno}: empty key")
        out[key] = val.strip()
    return out


def _parse_scalar_list(val: str, convert: Callable) -> tuple:
    items = [x.strip() for x in val.split(",")]
    items = [x for x in items if x]
    if not items:
        raise InputError(f"empty list value {val!r}")
    try:
        return tuple(convert(x) for x in items)
    except ValueError as exc:
        raise InputError(f"bad list value {val!r}: {exc}") from exc


def make_config(experiment: str, options: Mapping[str, str]) -> ExperimentConfig:
    """Build a validated config from string options (config file and/or CLI
    flags). budget <= 0 means 'use the search default'."""
    kwargs: dict = {"experiment": experiment}
    for key, val in options.items():
        if key == "experiment":
            if val != experiment:
                raise InputError(
                    f"config says experiment={val!r} but {experiment!r} was requested"
                )
            continue
        if key in _INT_KEYS:
            try:
                parsed = int(val)
            except ValueError as exc:
                raise InputError(f"config key {key}: expected integer, got {val!r}") from exc
            if key == "budget":
                kwargs[key] = parsed if parsed > 0 else None
            else:
                kwargs[key] = parsed
        elif key in _FLOAT_LIST_KEYS:
            kwargs[key] = _parse_scalar_list(val, float)
        elif key in _INT_LIST_KEYS:
            kwargs[key] = _parse_scalar_list(val, int)
        elif key == "out":
            kwargs[key] = val
        else:
            raise InputError(f"unknown config key {key!r}")
    return ExperimentConfig(**kwargs)


# --- CSV tables ---------------------------------------------------------------


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    s = str(x)
    if any(ch in s for ch in ",\n\r\""):
        raise InputError(f"cell value {s!r} would need quoting; schema forbids it")
    return s


@dataclass(frozen=True)
class Table:
    """One experiment's output: a versioned kind tag, fixed column order, and
    homogeneous rows. to_csv_text() is the canonical byte form."""

    kind: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        buf.write(f"{CSV_MAGIC} {self.kind}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            if len(row) != len(self.columns):
                raise InputError(
                    f"row width {len(row)} != column count {len(self.columns)}"
                )
            writer.writerow([_cell(x) for x in row])
        return buf.getvalue()

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv_text())

    def column(self, name: str) -> list[str]:
        try:
            idx = self.columns.index(name)
        except ValueError as exc:
            raise InputError(f"no column {name!r} in {self.kind} table") from exc
        return [str(row[idx]) for row in self.rows]


def read_table(text: str) -> Table:
    """Parse the canonical CSV form back into a Table of string cells."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith(CSV_MAGIC + " "):
        raise InputError(f"unrecognized CSV schema: missing '{CSV_MAGIC} <kind>' line")
    kind = lines[0][len(CSV_MAGIC) + 1 :].strip()
    if kind not in EXPERIMENTS:
        raise InputError(f"unrecognized CSV schema kind {kind!r}")
    body = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
    if not body:
        raise InputError("CSV has no header row")
    columns = tuple(body[0])
    rows = tuple(tuple(r) for r in body[1:])
    for r in rows:
        if len(r) != len(columns):
            raise InputError("CSV row width does not match header")
    return Table(kind=kind, columns=columns, rows=rows)


def load_table(path: str) -> Table:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return read_table(fh.read())


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 0 or successes < 0 or successes > trials:
        raise InputError(f"bad counts: {successes}/{trials}")
    if trials == 0:
        return (0.0, 1.0)
    ph = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (ph + z2 / (2 * trials)) / denom
    half = z * math.sqrt(ph * (1.0 - ph) / trials + z2 / (4.0 * trials * trials)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


# --- deterministic parallel map -------------------------------------------------


def _map_tasks(fn: Callable, items: Sequence, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    ctx = get_context("fork")
    chunk = max(1, len(items) // (workers * 8))
    with ctx.Pool(processes=workers) as pool:
        return pool.map(fn, items, chunksize=chunk)


# --- threshold experiments ------------------------------------------------------


def _threshold_trial(args) -> TrialRecord:
    (trial, n, d, c, model, p, m, master, stream, budget, cutoff) = args
    t0 = time.perf_counter()
    rng = SeededRng(master, stream)
    if model == "gnp":
        H = sample_gnp(GnpParams(n, d, p), rng)
    else:
        H = sample_gnm(GnmParams(n, d, m), rng)
    iso = len(isolated_vertices(H))
    mindeg_ok = iso == 0
    exhausted = False
    if not mindeg_ok:
        ham = "no"
    else:
        outcome = rotation_extension_search(
            H, budget=budget, rng=rng.shifted(_SEARCH_LANE)
        )
        exhausted = outcome.exhausted
        if outcome.complete:
            assert outcome.cycle is not None
            check = validate(outcome.cycle, H)
            assert check.ok, f"search returned invalid witness: {check.violation}"
            assert outcome.cycle.spanned == frozenset(range(n))
            ham = "yes"
        elif outcome.impossible is not None:
            ham = "no"
        elif n <= cutoff:
            ham = exact_weak_hamiltonian(H, method="dp").answer
        else:
            ham = "unknown"
    assert not (ham == "yes" and not mindeg_ok)
    return TrialRecord(
        trial=trial,
        n=n,
        d=d,
        c=c,
        isolated_count=iso,
        min_degree_ok=mindeg_ok,
        weak_ham=ham,
        budget_exhausted=exhausted,
        elapsed=time.perf_counter() - t0,
    )


_THRESHOLD_COLUMNS = (
    "c", "n", "d", "p", "trials",
    "mindeg_yes", "phat_mindeg", "lo_mindeg", "hi_mindeg",
    "ham_yes", "ham_no", "ham_unknown",
    "phat_ham", "lo_ham", "hi_ham",
    "theory", "unknown_rate",
)

_GNM_COLUMNS = _THRESHOLD_COLUMNS[:3] + ("m",) + _THRESHOLD_COLUMNS[4:]


def _threshold_like(cfg: ExperimentConfig, model: str) -> Table:
    rows = []
    for i, c in enumerate(sorted(cfg.c_grid)):
        if model == "gnp":
            p = p_from_c(cfg.n, cfg.d, c)
            m = 0
            param_cell: float | int = p
        else:
            p = 0.0
            m = m_from_c(cfg.n, cfg.d, c)
            param_cell = m
        base = i * cfg.trials
        items = [
            (t, cfg.n, cfg.d, c, model, p, m, cfg.seed, base + t,
             cfg.budget, cfg.oracle_cutoff)
            for t in range(cfg.trials)
        ]
        recs: list[TrialRecord] = _map_tasks(_threshold_trial, items, cfg.workers)
        mindeg_yes = sum(1 for r in recs if r.min_degree_ok)
        yes = sum(1 for r in recs if r.weak_ham == "yes")
        no = sum(1 for r in recs if r.weak_ham == "no")
        unknown = sum(1 for r in recs if r.weak_ham == "unknown")
        assert yes + no + unknown == cfg.trials
        lo_m, hi_m = wilson_interval(mindeg_yes, cfg.trials)
        decided = yes + no
        if decided:
            phat_ham = yes / decided
            lo_h, hi_h = wilson_interval(yes, decided)
        else:
            phat_ham, lo_h, hi_h = None, None, None
        rows.append(
            (
                c, cfg.n, cfg.d, param_cell, cfg.trials,
                mindeg_yes, mindeg_yes / cfg.trials, lo_m, hi_m,
                yes, no, unknown,
                phat_ham, lo_h, hi_h,
                limiting_probability(c), unknown / cfg.trials,
            )
        )
    if model == "gnp":
        return Table("threshold", _THRESHOLD_COLUMNS, tuple(rows))
    return Table("gnm", _GNM_COLUMNS, tuple(rows))


def run_threshold(cfg: ExperimentConfig) -> Table:
    """Per c: estimate P(weak Hamiltonian) and P(min degree >= 1) under
    G(n,p) at p = (d-1)!(ln n + c)/n^(d-1), against exp(-exp(-c))."""
    _require(cfg, "threshold")
    return _threshold_like(cfg, "gnp")


def run_gnm_threshold(cfg: ExperimentConfig) -> Table:
    """run_threshold under the fixed-edge-count model at m = m_from_c."""
    _require(cfg, "gnm")
    return _threshold_like(cfg, "gnm")


def _require(cfg: ExperimentConfig, experiment: str) -> None:
    if cfg.experiment != experiment:
        raise InputError(
            f"config is for {cfg.experiment!r}, runner expects {experiment!r}"
        )


def _mindeg_chunk(args) -> int:
    n, d, p, master, base, count = args
    hits = 0
    params = GnpParams(n, d, p)
    for t in range(count):
        covered = sampled_covered_vertices(params, SeededRng(master, base + t))
        if covered.all():
            hits += 1
    return hits


def estimate_mindeg_probability(
    n: int, d: int, c: float, trials: int, seed: int, workers: int = 1
) -> float:
    """Fast Monte Carlo of P(min degree >= 1) only — no search, no oracle.
    Worker-count independent: every trial has its own stream."""
    if trials < 1:
        raise InputError(f"trials must be >= 1, got {trials}")
    p = p_from_c(n, d, c)
    chunk = 250
    items = []
    start = 0
    while start < trials:
        count = min(chunk, trials - start)
        items.append((n, d, p, seed, start, count))
        start += count
    hits = sum(_map_tasks(_mindeg_chunk, items, workers))
    return hits / trials


# --- isolated-count distribution -------------------------------------------------


def _poisson_trial(args) -> int:
    n, d, p, master, stream = args
    covered = sampled_covered_vertices(GnpParams(n, d, p), SeededRng(master, stream))
    return int(covered.size) - int(covered.sum())


_POISSON_COLUMNS = (
    "c", "n", "d", "p", "trials", "k", "count", "phat", "poisson_p",
    "tv", "chisq_stat", "chisq_dof", "chisq_pvalue",
    "mean_hat", "mean_theory", "mean_sigma",
)


def _poisson_pmf(lam: float, k: int) -> float:
    return math.exp(-lam + k * math.log(lam) - math.lgamma(k + 1)) if lam > 0 else (
        1.0 if k == 0 else 0.0
    )


def run_isolated_distribution(cfg: ExperimentConfig) -> Table:
    """Histogram of the isolated-vertex count per c, with total-variation
    distance and a tail-pooled chi-square against Poisson(exp(-c))."""
    _require(cfg, "poisson")
    from scipy.stats import chi2

    rows = []
    for i, c in enumerate(sorted(cfg.c_grid)):
        p = p_from_c(cfg.n, cfg.d, c)
        base = i * cfg.trials
        items = [(cfg.n, cfg.d, p, cfg.seed, base + t) for t in range(cfg.trials)]
        counts = _map_tasks(_poisson_trial, items, cfg.workers)
        kmax = max(counts)
        hist = [0] * (kmax + 1)
        for k in counts:
            hist[k] += 1
        lam = math.exp(-c)
        pmf = [_poisson_pmf(lam, k) for k in range(kmax + 1)]
        tail = 1.0 - sum(pmf)
        tv = 0.5 * (
            sum(abs(hist[k] / cfg.trials - pmf[k]) for k in range(kmax + 1)) + max(tail, 0.0)
        )
        # chi-square with tail pooling: merge bins upward until every pooled
        # bin expects at least 5 samples; the final bin absorbs the tail mass
        edges: list[tuple[int, float, int]] = []  # (k_start, expected, observed)
        acc_e, acc_o, k_start = 0.0, 0, 0
        for k in range(kmax + 1):
            acc_e += pmf[k] * cfg.trials
            acc_o += hist[k]
            if acc_e >= 5.0:
                edges.append((k_start, acc_e, acc_o))
                acc_e, acc_o, k_start = 0.0, 0, k + 1
        tail_e = acc_e + max(tail, 0.0) * cfg.trials
        tail_o = acc_o
        if edges and tail_e > 0:
            k0, e0, o0 = edges[-1]
            edges[-1] = (k0, e0 + tail_e, o0 + tail_o)
        elif tail_e >= 5.0:
            edges.append((k_start, tail_e, tail_o))
        if len(edges) >= 2:
            stat = sum((o - e) ** 2 / e for _, e, o in edges)
            dof = len(edges) - 1
            pvalue = float(chi2.sf(stat, dof))
        else:
            stat, dof, pvalue = None, None, None
        mean_hat = sum(counts) / cfg.trials
        sigma = math.sqrt(lam / cfg.trials)
        for k in range(kmax + 1):
            rows.append(
                (
                    c, cfg.n, cfg.d, p, cfg.trials, k, hist[k],
                    hist[k] / cfg.trials, pmf[k],
                    tv, stat, dof, pvalue,
                    mean_hat, lam, sigma,
                )
            )
    return Table("poisson", _POISSON_COLUMNS, tuple(rows))


# --- edge process ----------------------------------------------------------------


def _process_trial(args) -> ProcessRecord:
    trial, n, d, master, stream, cutoff, budget = args
    rng = SeededRng(master, stream)
    stream_edges = edge_process(n, d, rng)
    covered = [False] * n
    uncovered = n
    tau = None
    for idx, e in enumerate(stream_edges, start=1):
        for v in e:
            if not covered[v]:
                covered[v] = True
                uncovered -= 1
        if uncovered == 0:
            tau = idx
            break
    assert tau is not None, "full process must cover every vertex"
    exact = n <= cutoff
    t_ham = None
    for idx in range(tau, len(stream_edges) + 1):
        H = Hypergraph.from_edges(n, d, stream_edges[:idx])
        if exact:
            verdict = exact_weak_hamiltonian(H, method="dp")
            hit = verdict.yes
        else:
            outcome = rotation_extension_search(
                H, budget=budget, rng=rng.shifted(_SEARCH_LANE + idx)
            )
            hit = outcome.complete
        if hit:
            t_ham = idx
            break
    assert t_ham is not None, "the complete hypergraph is weakly Hamiltonian"
    return ProcessRecord(trial=trial, n=n, d=d, tau=tau, t_ham=t_ham)


_PROCESS_COLUMNS = ("trial", "n", "d", "tau", "t_ham", "gap", "equal")


def run_process(cfg: ExperimentConfig) -> Table:
    """Random edge process: per trial, the first edge count tau with no
    isolated vertex and the first count t_ham with a weak Hamilton cycle.
    tau <= t_ham is asserted per row; the gap distribution is exploratory.
    Exact testing up to the oracle cutoff, heuristic with validated
    witnesses above it (t_ham is then an upper bound)."""
    _require(cfg, "process")
    if cfg.n < 3:
        raise InputError(f"process needs n >= 3 for cycles, got {cfg.n}")
    items = [
        (t, cfg.n, cfg.d, cfg.seed, t, cfg.oracle_cutoff, cfg.budget)
        for t in range(cfg.trials)
    ]
    recs: list[ProcessRecord] = _map_tasks(_process_trial, items, cfg.workers)
    rows = []
    for r in recs:
        assert r.tau <= r.t_ham, f"trial {r.trial}: tau {r.tau} > t_ham {r.t_ham}"
        rows.append((r.trial, r.n, r.d, r.tau, r.t_ham, r.t_ham - r.tau, r.equal))
    return Table("process", _PROCESS_COLUMNS, tuple(rows))


# --- expansion survey --------------------------------------------------------------


def _expansion_trial(args):
    (trial, n, d, c, p, master, stream, samples) = args
    rng = SeededRng(master, stream)
    H = sample_gnp(GnpParams(n, d, p), rng)
    v1 = non_isolated_vertices(H)
    has_iso = len(v1) < n
    small_target = math.floor(n**0.25)  # set of size <= n^(1/4) exists?
    floor_target = n / 3**d  # u < n/3^d would contradict the lower bound
    nontrivial = sum(1 for comp in components(H) if len(comp) >= 2)
    if len(v1) <= U_EXACT_MAX_V1:
        rep = u_exact(H)
        u: int | None = rep.u
        exhaustive = True
        below_small = rep.u <= small_target and rep.witness is not None
        below_floor = rep.witness is not None and rep.u < floor_target
        minimal_connected = (
            minimal_nonexpanding_connected(H, rep.witness)
            if rep.witness is not None
            else None
        )
        used = 0
    else:
        u = None
        exhaustive = False
        chk_small = u_sampled_check(
            H, small_target + 1, samples, rng=rng.shifted(_SEARCH_LANE)
        )
        chk_floor = u_sampled_check(
            H, math.ceil(floor_target), samples, rng=rng.shifted(2 * _SEARCH_LANE)
        )
        below_small = not chk_small.ok
        below_floor = not chk_floor.ok
        minimal_connected = None
        used = chk_small.samples_used + chk_floor.samples_used
    u_relaxed = 1 if has_iso else u
    return (
        trial, n, d, c, len(v1), u, exhaustive, u_relaxed, has_iso,
        below_small, below_floor, nontrivial, nontrivial == 1,
        minimal_connected, used,
    )


_EXPANSION_COLUMNS = (
    "trial", "n", "d", "c", "v1_size", "u", "u_exhaustive", "u_relaxed",
    "has_isolated", "below_small_target", "below_floor_target",
    "nontrivial_components", "single_nontrivial",
    "minimal_witness_connected", "samples_used",
)


def run_expansion(cfg: ExperimentConfig) -> Table:
    """Per trial: u(H) exactly when |V1| <= 22 (with a connectivity audit of
    the minimal witness), otherwise one-sided sampled checks against the
    size-n^(1/4) and n/3^d targets; plus the count of non-trivial shadow
    components. u_relaxed additionally admits isolated vertices, where a
    singleton is trivially non-expanding — reported, not interpreted."""
    _require(cfg, "expansion")
    rows = []
    for i, c in enumerate(sorted(cfg.c_grid)):
        p = p_from_c(cfg.n, cfg.d, c)
        base = i * cfg.trials
        items = [
            (t, cfg.n, cfg.d, c, p, cfg.seed, base + t, cfg.samples)
            for t in range(cfg.trials)
        ]
        rows.extend(_map_tasks(_expansion_trial, items, cfg.workers))
    return Table("expansion", _EXPANSION_COLUMNS, tuple(rows))


# --- greedy covering bounds ---------------------------------------------------------


def _pab_cell(args):
    a, b, d, p, trials, master, stream = args
    res = greedy_probe(a, b, d, p, trials, rng=SeededRng(master, stream))
    return (a, b, d, p, trials, res.successes)


_PAB_COLUMNS = (
    "a", "b", "d", "p", "trials", "successes", "phat", "stderr",
    "bound_exact", "bound_simple", "hypothesis_ok",
    "violation_exact", "violation_simple",
)


def run_pab(cfg: ExperimentConfig) -> Table:
    """Greedy-probe P̂(a,b) against the closed-form exact bound and, where
    its hypothesis (a >= d, b <= 2a, 2a p^(1/(d-1)) <= 1) holds, the simple
    product-form bound. A violation means P̂ - 3*stderr still exceeds the bound;
    hypothesis-violating cells keep bound_simple empty and are flagged."""
    _require(cfg, "pab")
    cells = []
    for a in cfg.a_grid:
        b_values = cfg.b_grid if cfg.b_grid else tuple(range(1, 2 * a + 1))
        for b in b_values:
            for p in cfg.p_grid:
                cells.append((a, b, p))
    items = [
        (a, b, cfg.d, p, cfg.trials, cfg.seed, idx)
        for idx, (a, b, p) in enumerate(cells)
    ]
    results = _map_tasks(_pab_cell, items, cfg.workers)
    rows = []
    for a, b, d, p, trials, successes in results:
        phat = successes / trials
        stderr = math.sqrt(phat * (1.0 - phat) / trials)
        exact = pab_bound_exact(a, b, d, 1.0 - p)
        try:
            simple: float | None = pab_bound_simple(a, b, d, p)
            hypothesis_ok = True
        except InputError:
            simple = None
            hypothesis_ok = False
        violation_exact = phat - 3.0 * stderr > exact
        violation_simple = (
            (phat - 3.0 * stderr > simple) if hypothesis_ok else None
        )
        rows.append(
            (
                a, b, d, p, trials, successes, phat, stderr,
                exact, simple, hypothesis_ok,
                violation_exact, violation_simple,
            )
        )
    return Table("pab", _PAB_COLUMNS, tuple(rows))


_RUNNERS = {
    "threshold": run_threshold,
    "gnm": run_gnm_threshold,
    "poisson": run_isolated_distribution,
    "process": run_process,
    "expansion": run_expansion,
    "pab": run_pab,
}


def run_experiment(cfg: ExperimentConfig) -> Table:
    """Dispatch a config to its runner."""
    return _RUNNERS[cfg.experiment](cfg)
