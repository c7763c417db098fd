"""Exact oracles for weak Hamiltonicity and related small-instance questions.

Two deliberately independent decision procedures are provided:

* "dp": Held–Karp style subset dynamic programming on the shadow graph
  (u ~ v iff some hyperedge contains both). Correct because a weak Hamilton
  cycle exists iff the shadow graph has a Hamilton cycle — weak objects may
  repeat hyperedges, so any shadow cycle lifts by choosing, for each
  consecutive pair, any covering hyperedge.

* "backtracking-direct": depth-first search over hyperedge incidence lists
  with memoized dead states, never consulting the shadow reduction. Witness
  edges are the hyperedges actually walked.

Agreement of the two on random instances is one of the package's acceptance
checks. Every "yes" carries a validated witness; notes explain fast "no"s.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import _bitdp
from .errors import CapabilityError, InputError
from .hypercore import (
    Hypergraph,
    is_connected_on,
    isolated_vertices,
    non_isolated_vertices,
)
from .weakpaths import WeakCycle, WeakPath, lift_cycle, validate, weak_to_json

__all__ = [
    "OracleVerdict",
    "exact_weak_hamiltonian",
    "exact_spanning_cycle_on_v1",
    "longest_weak_path_exact",
    "has_weak_cycle_of_length",
    "weak_cycle_of_length",
    "DP_MAX_VERTICES",
    "DIRECT_MAX_VERTICES",
]

DP_MAX_VERTICES = 20
DIRECT_MAX_VERTICES = 16
_LONGEST_MAX_VERTICES = 18


@dataclass(frozen=True)
class OracleVerdict:
    """Exact answer with provenance: answer in {"yes", "no"}, a validated
    witness cycle for "yes", the deciding method, and a reason note for
    shortcut "no"s."""

    answer: str
    witness: WeakCycle | None
    method: str
    note: str | None = None

    @property
    def yes(self) -> bool:
        return self.answer == "yes"

    def to_json(self) -> str:
        doc = {
            "answer": self.answer,
            "method": self.method,
            "note": self.note,
            "witness": json.loads(weak_to_json(self.witness)) if self.witness else None,
        }
        return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _dp_hamilton_cycle(adj_masks: list[int], n: int) -> list[int] | None:
    """Hamilton cycle on a graph given as bitmask adjacency, as a vertex list
    starting at 0, or None. Requires n >= 3."""
    dp = _bitdp.capped_anchored_endpoints(adj_masks, n, n)
    full = (1 << n) - 1
    endmask = int(dp[full]) & adj_masks[0] & ~1
    if endmask == 0:
        return None
    v = _lowest_bit(endmask)
    seq: list[int] = []
    S = full
    while S != 1:
        seq.append(v)
        S ^= 1 << v
        cand = int(dp[S]) & adj_masks[v]
        assert cand != 0, "dp backtrack lost its trail"
        v = _lowest_bit(cand)
    assert v == 0
    return [0] + seq[::-1]


def _direct_hamilton(H: Hypergraph) -> WeakCycle | None:
    """Backtracking search for a weak Hamilton cycle over hyperedge incidence
    lists, memoizing (visited-set, last-vertex) states that cannot finish.
    Returns the walked witness or None. Requires n >= 3 and no isolated
    vertices (callers pre-check)."""
    n = H.n
    full = (1 << n) - 1
    inc: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            inc[v].append(e)
    dead: set[tuple[int, int]] = set()
    verts = [0]
    used: list[tuple[int, ...]] = []

    def go(mask: int, last: int) -> bool:
        if mask == full:
            for e in inc[last]:
                if 0 in e:
                    used.append(e)
                    return True
            return False
        if (mask, last) in dead:
            return False
        tried = 0
        for e in inc[last]:
            for w in e:
                bit = 1 << w
                if mask & bit or tried & bit:
                    continue
                tried |= bit
                verts.append(w)
                used.append(e)
                if go(mask | bit, w):
                    return True
                verts.pop()
                used.pop()
        dead.add((mask, last))
        return False

    if not go(1, 0):
        return None
    return WeakCycle(tuple(verts), tuple(used))


def exact_weak_hamiltonian(H: Hypergraph, method: str = "dp") -> OracleVerdict:
    """Decide whether H has a weak Hamilton cycle (all n vertices).

    method "dp" handles n <= 20; "backtracking-direct" handles n <= 16 and is
    algorithmically independent of the shadow reduction. Larger inputs raise
    CapabilityError. Trivial negatives (n < 3, an isolated vertex, a
    disconnected vertex set) are certified without search.
    """
    if method not in ("dp", "backtracking-direct"):
        raise InputError(f"unknown oracle method {method!r}")
    if H.n < 3:
        return OracleVerdict("no", None, method, note=f"n = {H.n} < 3")
    iso = isolated_vertices(H)
    if iso:
        return OracleVerdict("no", None, method, note=f"vertex {min(iso)} is isolated")
    if not is_connected_on(H, range(H.n)):
        return OracleVerdict("no", None, method, note="vertex set is disconnected")
    if method == "dp":
        if H.n > DP_MAX_VERTICES:
            raise CapabilityError(
                f"dp oracle handles n <= {DP_MAX_VERTICES}, got n = {H.n}"
            )
        masks = list(H.shadow.adj_masks)
        cyc = _dp_hamilton_cycle(masks, H.n)
        if cyc is None:
            return OracleVerdict("no", None, "dp")
        witness = lift_cycle(H, cyc)
    else:
        if H.n > DIRECT_MAX_VERTICES:
            raise CapabilityError(
                f"direct oracle handles n <= {DIRECT_MAX_VERTICES}, got n = {H.n}"
            )
        witness = _direct_hamilton(H)
        if witness is None:
            return OracleVerdict("no", None, "backtracking-direct")
    check = validate(witness, H)
    assert check.ok, f"oracle produced an invalid witness: {check.violation}"
    assert witness.spanned == frozenset(range(H.n))
    return OracleVerdict("yes", witness, method)


def exact_spanning_cycle_on_v1(H: Hypergraph) -> OracleVerdict:
    """Decide whether a weak cycle spans exactly the non-isolated vertices
    V1(H) — the event whose probability the threshold experiments estimate.
    Handles |V1| <= 20 via the dp oracle on the induced shadow."""
    v1 = sorted(non_isolated_vertices(H))
    if len(v1) < 3:
        return OracleVerdict("no", None, "dp", note=f"|V1| = {len(v1)} < 3")
    if len(v1) > DP_MAX_VERTICES:
        raise CapabilityError(
            f"dp oracle handles |V1| <= {DP_MAX_VERTICES}, got {len(v1)}"
        )
    if not is_connected_on(H, v1):
        return OracleVerdict("no", None, "dp", note="V1 is disconnected")
    index = {v: k for k, v in enumerate(v1)}
    masks = [0] * len(v1)
    shadow = H.shadow
    for v in v1:
        m = 0
        for w in shadow.adj[v]:
            m |= 1 << index[w]
        masks[index[v]] = m
    cyc = _dp_hamilton_cycle(masks, len(v1))
    if cyc is None:
        return OracleVerdict("no", None, "dp")
    witness = lift_cycle(H, [v1[k] for k in cyc])
    check = validate(witness, H)
    assert check.ok, f"oracle produced an invalid witness: {check.violation}"
    assert witness.spanned == frozenset(v1)
    return OracleVerdict("yes", witness, "dp")


def longest_weak_path_exact(H: Hypergraph) -> WeakPath:
    """A longest weak path in H by exhaustive subset dp on the shadow
    (n <= 18). Deterministic tie-breaking: among maximum-length paths, the
    numerically smallest vertex bitmask and then the smallest endpoint win.
    An edgeless H yields the single-vertex path at vertex 0."""
    if H.n < 1:
        raise InputError("need at least one vertex")
    if H.n > _LONGEST_MAX_VERTICES:
        raise CapabilityError(
            f"exhaustive longest path handles n <= {_LONGEST_MAX_VERTICES}, "
            f"got n = {H.n}"
        )
    masks = list(H.shadow.adj_masks)
    dp = _bitdp.free_endpoints(masks, H.n)
    best_S, best_pop = 1, 1
    for S in range(1, 1 << H.n):
        if int(dp[S]):
            pop = S.bit_count()
            if pop > best_pop:
                best_S, best_pop = S, pop
    S = best_S
    v = _lowest_bit(int(dp[S]))
    seq = []
    while S:
        seq.append(v)
        S ^= 1 << v
        if not S:
            break
        cand = int(dp[S]) & masks[v]
        assert cand != 0, "dp backtrack lost its trail"
        v = _lowest_bit(cand)
    vseq = seq[::-1]
    cover = H.cover_index
    edges = []
    for u, w in zip(vseq, vseq[1:]):
        edges.append(cover[(u, w) if u < w else (w, u)])
    path = WeakPath(tuple(vseq), tuple(edges))
    assert validate(path, H).ok
    return path


def weak_cycle_of_length(H: Hypergraph, ell: int) -> WeakCycle | None:
    """A weak cycle through exactly ell distinct vertices, or None. Anchors
    the search on each possible minimum cycle vertex; n <= 20."""
    if ell < 3:
        raise InputError(f"weak cycles have length >= 3, got {ell}")
    if H.n > DP_MAX_VERTICES:
        raise CapabilityError(
            f"cycle-length probe handles n <= {DP_MAX_VERTICES}, got n = {H.n}"
        )
    if ell > H.n:
        return None
    masks = list(H.shadow.adj_masks)
    for a in range(H.n - ell + 1):
        k = H.n - a
        sub = [(masks[a + i] >> a) for i in range(k)]
        S, closemask = _bitdp.cycle_probe(sub, k, ell)
        if S:
            dp = _bitdp.capped_anchored_endpoints(sub, k, ell)
            v = _lowest_bit(closemask)
            seq = []
            rem = S
            while rem != 1:
                seq.append(v)
                rem ^= 1 << v
                cand = int(dp[rem]) & sub[v]
                assert cand != 0, "dp backtrack lost its trail"
                v = _lowest_bit(cand)
            cyc = [a] + [a + w for w in seq[::-1]]
            witness = lift_cycle(H, cyc)
            check = validate(witness, H)
            assert check.ok, f"probe produced an invalid witness: {check.violation}"
            assert witness.length == ell
            return witness
    return None


def has_weak_cycle_of_length(H: Hypergraph, ell: int) -> bool:
    """Whether some weak cycle visits exactly ell distinct vertices."""
    return weak_cycle_of_length(H, ell) is not None
