"""Non-expanding-set analytics and the two-block greedy edge-finding probe.

A vertex set A is non-expanding when its external neighborhood is small:
|N(A)| < 2|A|. The quantity u(H) — the size of the smallest non-expanding
set of non-isolated vertices, or |V1|+1 when none exists — controls how many
absent "booster" d-sets every longest path generates, so the module pairs
exhaustive and randomized searches for such sets with structural predicates
(connectedness of A together with its neighborhood for minimal A).

The greedy probe is a standalone Monte Carlo of the two-block edge-finding
argument: fix disjoint blocks A (|A| = a) and B (|B| = b), draw each d-set
inside A deliberately-union-B independently with probability p, then cover
B-vertices in index order, scanning each one's untested candidates
lexicographically until a present edge is found. P(a, b) — the probability
that every B-vertex ends up adjacent to A inside the union — is compared
against a closed-form exact bound and a simpler product-form bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import CapabilityError, InputError
from .hypercore import Hypergraph, is_connected_on, neighbors, non_isolated_vertices
from .randmodels import SeededRng

__all__ = [
    "ExpansionReport",
    "SampledCheck",
    "GreedyProbeResult",
    "is_non_expanding",
    "u_exact",
    "u_sampled_check",
    "minimal_nonexpanding_connected",
    "greedy_probe",
    "pab_bound_exact",
    "pab_bound_simple",
    "U_EXACT_MAX_V1",
]

U_EXACT_MAX_V1 = 22


def is_non_expanding(H: Hypergraph, A: Iterable[int]) -> bool:
    """|N(A)| < 2|A| with N the external neighborhood. The empty set is
    expanding by convention (0 < 0 fails)."""
    A = frozenset(A)
    for v in A:
        if not (0 <= v < H.n):
            raise InputError(f"vertex {v} out of range [0, {H.n})")
    return len(neighbors(H, A)) < 2 * len(A)


@dataclass(frozen=True)
class ExpansionReport:
    """u and its witness: u is the size of the smallest non-expanding subset
    of the non-isolated vertices (|V1| + 1 when none exists, which happens
    exactly when V1 is empty); witness is one such set of size u, found
    exhaustively when `exhaustive` is set."""

    u: int
    witness: frozenset[int] | None
    exhaustive: bool
    v1_size: int


def _neighbor_masks(H: Hypergraph) -> list[int]:
    return list(H.shadow.adj_masks)


def _size_cap(v1_size: int) -> int:
    # any A of size floor(|V1|/3) + 1 inside V1 is already non-expanding,
    # so no larger size ever needs to be enumerated
    return v1_size // 3 + 1


def u_exact(H: Hypergraph, limit: int = U_EXACT_MAX_V1) -> ExpansionReport:
    """Exhaustive u(H): smallest non-expanding A ⊆ V1(H) by ascending size
    and lexicographic order within each size. Requires |V1| <= limit; larger
    inputs raise CapabilityError (use u_sampled_check there).

    Equivalently, u(H) is the largest u such that every nonempty A ⊆ V1 with
    |A| < u expands. Adding edges to a connected hypergraph cannot decrease
    it. Enumeration stops at size floor(|V1|/3) + 1, beyond which sets are
    unconditionally non-expanding.
    """
    v1 = sorted(non_isolated_vertices(H))
    if not v1:
        return ExpansionReport(u=1, witness=None, exhaustive=True, v1_size=0)
    if len(v1) > limit:
        raise CapabilityError(
            f"|V1| = {len(v1)} exceeds the exhaustive bound {limit}; "
            "use u_sampled_check for one-sided evidence"
        )
    masks = _neighbor_masks(H)
    for s in range(1, _size_cap(len(v1)) + 1):
        for A in combinations(v1, s):
            amask = 0
            nmask = 0
            for v in A:
                amask |= 1 << v
                nmask |= masks[v]
            if (nmask & ~amask).bit_count() < 2 * s:
                return ExpansionReport(
                    u=s, witness=frozenset(A), exhaustive=True, v1_size=len(v1)
                )
    raise AssertionError("size cap violated: some set of the cap size must fail")


def _u_exact_reverse(H: Hypergraph, limit: int = U_EXACT_MAX_V1) -> ExpansionReport:
    """Independent re-computation of u(H) by a single descending sweep over
    subset bitmasks (no early exit, no size-ascending structure); test oracle
    for u_exact."""
    v1 = sorted(non_isolated_vertices(H))
    if not v1:
        return ExpansionReport(u=1, witness=None, exhaustive=True, v1_size=0)
    if len(v1) > limit:
        raise CapabilityError(f"|V1| = {len(v1)} exceeds the exhaustive bound {limit}")
    masks = _neighbor_masks(H)
    cap = _size_cap(len(v1))
    k = len(v1)
    best_size = None
    best_set: frozenset[int] | None = None
    for sub in range((1 << k) - 1, 0, -1):
        s = sub.bit_count()
        if s > cap or (best_size is not None and s >= best_size):
            continue
        amask = 0
        nmask = 0
        for i in range(k):
            if (sub >> i) & 1:
                amask |= 1 << v1[i]
                nmask |= masks[v1[i]]
        if (nmask & ~amask).bit_count() < 2 * s:
            best_size = s
            best_set = frozenset(v1[i] for i in range(k) if (sub >> i) & 1)
    assert best_size is not None, "size cap violated"
    return ExpansionReport(
        u=best_size, witness=best_set, exhaustive=True, v1_size=len(v1)
    )


@dataclass(frozen=True)
class SampledCheck:
    """Outcome of a randomized counterexample hunt: ok means no non-expanding
    set below the target size was found — one-sided evidence, not a proof."""

    ok: bool
    counterexample: frozenset[int] | None
    samples_used: int


def u_sampled_check(
    H: Hypergraph,
    u_target: int,
    samples: int,
    rng: SeededRng | None = None,
    include_isolated: bool = False,
) -> SampledCheck:
    """Hunt for a non-expanding A with 1 <= |A| < u_target.

    Candidate pool is V1(H) unless include_isolated, in which case any vertex
    may participate (an isolated vertex alone is trivially non-expanding).
    Strategy: exhaust sizes 1 and 2 when cheap, then random subsets of random
    sizes; any hit is greedily shrunk to a (locally) minimal counterexample.
    A pass is one-sided evidence only.
    """
    if u_target < 0:
        raise InputError(f"u_target must be >= 0, got {u_target}")
    if samples < 0:
        raise InputError(f"samples must be >= 0, got {samples}")
    pool = sorted(range(H.n)) if include_isolated else sorted(non_isolated_vertices(H))
    if u_target <= 1 or not pool:
        return SampledCheck(ok=True, counterexample=None, samples_used=0)
    masks = _neighbor_masks(H)

    def bad(A: tuple[int, ...]) -> bool:
        amask = 0
        nmask = 0
        for v in A:
            amask |= 1 << v
            nmask |= masks[v]
        return (nmask & ~amask).bit_count() < 2 * len(A)

    def shrink(A: list[int], gen) -> frozenset[int]:
        changed = True
        while changed and len(A) > 1:
            changed = False
            for v in list(gen.permutation(A)):
                trial = [w for w in A if w != int(v)]
                if trial and bad(tuple(trial)):
                    A = trial
                    changed = True
                    break
        return frozenset(A)

    gen = (rng or SeededRng(0, 0)).generator()
    used = 0
    max_size = min(u_target - 1, len(pool))
    for s in (1, 2):
        if s > max_size or math.comb(len(pool), s) > 50_000:
            continue
        for A in combinations(pool, s):
            used += 1
            if bad(A):
                return SampledCheck(
                    ok=False, counterexample=frozenset(A), samples_used=used
                )
    for _ in range(samples):
        used += 1
        s = int(gen.integers(1, max_size + 1))
        A = [int(v) for v in gen.choice(len(pool), size=s, replace=False)]
        A = [pool[i] for i in A]
        if bad(tuple(A)):
            return SampledCheck(
                ok=False, counterexample=shrink(A, gen), samples_used=used
            )
    return SampledCheck(ok=True, counterexample=None, samples_used=used)


def minimal_nonexpanding_connected(H: Hypergraph, A: Iterable[int]) -> bool:
    """Whether the sub-hypergraph induced on A together with N(A) is
    connected. For a minimal non-expanding A (no proper non-expanding
    subset — the caller's contract, checkable exhaustively only at small
    sizes) this must hold; exposed as a predicate so experiments can report
    violations instead of assuming them away."""
    A = frozenset(A)
    if not A:
        raise InputError("A must be nonempty")
    T = A | neighbors(H, A)
    return is_connected_on(H, T)


# --- greedy two-block edge probe ---------------------------------------------


@dataclass(frozen=True)
class GreedyProbeResult:
    """Monte Carlo record of the greedy covering walk. edges_found[t] is the
    number of present edges the walk accepted in trial t; checked_counts[t]
    lists, per processed B-vertex, how many of its candidates had already
    been tested (and found absent) when its scan started — the proof's |M_j|.
    Successes count trials in which every B-vertex became adjacent to A using
    only edges inside the two blocks."""

    a: int
    b: int
    d: int
    p: float
    trials: int
    successes: int
    edges_found: tuple[int, ...] = field(repr=False)
    checked_counts: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def phat(self) -> float:
        return self.successes / self.trials if self.trials else 0.0


def _mixed_candidates(a: int, b: int, d: int) -> list[tuple[int, ...]]:
    """All d-sets inside A ∪ B = [0, a+b) that touch both blocks, in
    lexicographic order. A = [0, a), B = [a, a+b)."""
    out = []
    for e in combinations(range(a + b), d):
        if e[0] < a <= e[-1]:
            out.append(e)
    return out


def greedy_probe(
    a: int,
    b: int,
    d: int,
    p: float,
    trials: int,
    rng: SeededRng | None = None,
) -> GreedyProbeResult:
    """Monte Carlo of the greedy edge-finding walk on blocks A = [0, a) and
    B = [a, a+b).

    Per trial, every d-set inside A ∪ B is independently present with
    probability p (only sets meeting both blocks are materialized — sets
    inside a single block can neither be scanned nor create A-B adjacency,
    so the restriction does not change any reported quantity). The walk
    repeatedly takes the lowest-index B-vertex not yet adjacent to A and
    scans its untested candidates in lexicographic order, marking each tested
    candidate globally; the first present candidate is accepted and covers
    every B-vertex it contains. A vertex whose scan exhausts fails the trial:
    all its candidates are then tested-absent, so no later edge can cover it.

    On success, each accepted edge covers at most d-1 B-vertices, so
    edges_found >= ceil(b / (d-1)) — asserted per trial.
    """
    if a < 1 or b < 1:
        raise InputError(f"need a, b >= 1, got a={a}, b={b}")
    if d < 2:
        raise InputError(f"need d >= 2, got {d}")
    if a + b < d:
        raise InputError(f"need a + b >= d, got {a + b} < {d}")
    if not (0.0 <= p <= 1.0):
        raise InputError(f"p must lie in [0, 1], got {p}")
    if trials < 0:
        raise InputError(f"trials must be >= 0, got {trials}")
    cand = _mixed_candidates(a, b, d)
    ncand = len(cand)
    bvert_members: list[np.ndarray] = []
    cand_bmask = np.zeros(ncand, dtype=np.int64)
    for idx, e in enumerate(cand):
        for v in e:
            if v >= a:
                cand_bmask[idx] |= np.int64(1) << np.int64(v - a)
    for j in range(b):
        bit = np.int64(1) << np.int64(j)
        bvert_members.append(np.nonzero(cand_bmask & bit)[0])

    gen = (rng or SeededRng(0, 0)).generator()
    need = -(-b // (d - 1))
    edges_found: list[int] = []
    checked: list[tuple[int, ...]] = []
    successes = 0
    # presence rows are drawn in one batch for speed; the scan itself is
    # sequential because each test depends on what earlier scans marked
    batch = max(1, min(trials, max(1, 4_000_000 // max(ncand, 1))))
    done = 0
    while done < trials:
        k = min(batch, trials - done)
        pres_rows = gen.random((k, ncand)) < p
        for t in range(k):
            pres = pres_rows[t]
            tested = np.zeros(ncand, dtype=bool)
            covered = 0
            found = 0
            mj: list[int] = []
            ok = True
            while covered != (1 << b) - 1:
                j = (~covered & -(~covered)).bit_length() - 1  # lowest uncovered
                arr = bvert_members[j]
                seen = tested[arr]
                mj.append(int(np.count_nonzero(seen)))
                live = pres[arr] & ~seen
                hit = np.nonzero(live)[0]
                if hit.size == 0:
                    tested[arr] = True
                    ok = False
                    break
                first = int(hit[0])
                tested[arr[: first + 1]] = True
                covered |= int(cand_bmask[arr[first]])
                found += 1
            edges_found.append(found)
            checked.append(tuple(mj))
            if ok:
                successes += 1
                assert found >= need, (
                    f"success with {found} edges < ceil(b/(d-1)) = {need}"
                )
        done += k
    return GreedyProbeResult(
        a=a,
        b=b,
        d=d,
        p=float(p),
        trials=trials,
        successes=successes,
        edges_found=tuple(edges_found),
        checked_counts=tuple(checked),
    )


def pab_bound_exact(a: int, b: int, d: int, q: float) -> float:
    """Closed-form bound (1 - q^(C(a+b-1,d-1) - C(b-1,d-1)))^ceil(b/(d-1))
    on the greedy covering probability, with q the per-set absence
    probability."""
    if a < 1 or b < 1:
        raise InputError(f"need a, b >= 1, got a={a}, b={b}")
    if d < 2:
        raise InputError(f"need d >= 2, got {d}")
    if a + b < d:
        raise InputError(f"need a + b >= d, got {a + b} < {d}")
    if not (0.0 <= q <= 1.0):
        raise InputError(f"q must lie in [0, 1], got {q}")
    exponent = math.comb(a + b - 1, d - 1) - math.comb(b - 1, d - 1)
    return (1.0 - q**exponent) ** (-(-b // (d - 1)))


def pab_bound_simple(a: int, b: int, d: int, p: float) -> float:
    """Product-form bound (2a * p^(1/(d-1)))^b. Valid only under the
    hypothesis a >= d, 1 <= b <= 2a, and 2a * p^(1/(d-1)) <= 1; inputs
    outside it are rejected rather than extrapolated."""
    if d < 2:
        raise InputError(f"need d >= 2, got {d}")
    if not (0.0 <= p <= 1.0):
        raise InputError(f"p must lie in [0, 1], got {p}")
    if a < d:
        raise InputError(f"hypothesis a >= d violated: a={a} < d={d}")
    if not (1 <= b <= 2 * a):
        raise InputError(f"hypothesis 1 <= b <= 2a violated: b={b}, a={a}")
    base = 2 * a * p ** (1.0 / (d - 1))
    if base > 1.0:
        raise InputError(
            f"hypothesis 2a * p^(1/(d-1)) <= 1 violated: value {base!r}"
        )
    return base**b
