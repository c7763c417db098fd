"""Weak Berge paths and cycles, rotations, Pósa closures, booster edges,
rotation-extension search, and a two-block constructive long-path builder.

A weak path alternates distinct vertices with hyperedges, where consecutive
vertices must lie together in the connecting edge; edges may repeat. A weak
cycle is the closed variant with at least 3 vertices. Because repetition is
allowed, existence questions reduce to the shadow graph, but the objects
here carry concrete hyperedges so every result is a checkable witness.

The rotation of a path P = (v0, e1, v1, ..., eh, vh) by an edge e containing
vh and some interior v_i (0 <= i <= h-2) is

    P' = (v0, e1, ..., e_i, v_i, e, vh, e_h, v_{h-1}, ..., e_{i+2}, v_{i+1})

— the suffix after v_i is reversed and re-entered through e, keeping the
vertex set and the start fixed while moving the endpoint to v_{i+1}. (The
edge between vh and v_{h-1} is e_h: the suffix edges shift down by one
relative to the suffix vertices after reversal; an index-shifted variant
would break the coverage invariant.) Iterating rotations from a fixed start
yields the Pósa set S of reachable endpoints; for genuinely non-extendable
paths, |N(S)| < 2|S|.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping

from . import _engine
from .errors import CapabilityError, InputError
from .hypercore import (
    Hypergraph,
    is_connected_on,
    neighbors,
    non_isolated_vertices,
)
from .randmodels import SeededRng

__all__ = [
    "WeakPath",
    "WeakCycle",
    "ValidationResult",
    "PosaSet",
    "ProjectionGraph",
    "DlvResult",
    "SearchOutcome",
    "validate",
    "rotate",
    "posa_set",
    "booster_edges",
    "booster_lower_bound",
    "rotation_extension_search",
    "stalled_path",
    "projection_graph",
    "dlv_long_path",
    "lift_path",
    "lift_cycle",
    "weak_to_json",
    "weak_from_json",
]


@dataclass(frozen=True)
class WeakPath:
    """Alternating sequence v0, e1, v1, ..., eh, vh with distinct vertices.

    edges[k] must cover the pair (vertices[k], vertices[k+1]); h == len(edges).
    Structural shape is checked at construction; membership of the edges in a
    host hypergraph is checked by validate().
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise InputError("a weak path needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise InputError(
                f"{len(self.vertices)} vertices need {len(self.vertices) - 1} edges, "
                f"got {len(self.edges)}"
            )

    @property
    def h(self) -> int:
        return len(self.vertices) - 1

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def reversed(self) -> "WeakPath":
        return WeakPath(self.vertices[::-1], self.edges[::-1])


@dataclass(frozen=True)
class WeakCycle:
    """Closed weak path: vertices v0..v_{l-1} distinct (l >= 3), edges e1..el
    where e_k covers (v_{k-1}, v_k) and e_l wraps to cover (v_{l-1}, v0)."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise InputError("cycle too short: need at least 3 vertices")
        if len(self.edges) != len(self.vertices):
            raise InputError(
                f"cycle with {len(self.vertices)} vertices needs as many edges, "
                f"got {len(self.edges)}"
            )

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def spanned(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def has_distinct_edges(self) -> bool:
        return len(set(self.edges)) == len(self.edges)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _pair_covered(e: tuple[int, ...], u: int, v: int) -> bool:
    return u in e and v in e


def validate(obj, H: Hypergraph, strict_edges: bool = False) -> ValidationResult:
    """Check a WeakPath/WeakCycle against its host hypergraph.

    Reports the first violated clause: distinct vertices, vertex range,
    cycle length, edge membership in E(H), consecutive-pair coverage, and —
    only when strict_edges — pairwise-distinct edges (the strict Berge
    variant; weak objects are allowed to repeat edges).
    """
    is_cycle = isinstance(obj, WeakCycle)
    if not is_cycle and not isinstance(obj, WeakPath):
        raise InputError(f"expected WeakPath or WeakCycle, got {type(obj).__name__}")
    vs = obj.vertices
    if len(set(vs)) != len(vs):
        return ValidationResult(False, "vertices not distinct")
    for v in vs:
        if not (0 <= v < H.n):
            return ValidationResult(False, f"vertex {v} out of range [0, {H.n})")
    if is_cycle and len(vs) < 3:  # unreachable via constructor; kept for parity
        return ValidationResult(False, "cycle too short")
    edge_set = H.edge_set
    for k, e in enumerate(obj.edges):
        if e not in edge_set:
            return ValidationResult(False, f"edge {k} = {e} is not an edge of H")
    for k, e in enumerate(obj.edges):
        u = vs[k]
        v = vs[(k + 1) % len(vs)] if is_cycle else vs[k + 1]
        if not _pair_covered(e, u, v):
            return ValidationResult(
                False, f"edge {k} = {e} does not cover consecutive pair ({u}, {v})"
            )
    if strict_edges and len(set(obj.edges)) != len(obj.edges):
        return ValidationResult(False, "edges not distinct")
    return ValidationResult(True)


def rotate(P: WeakPath, e: tuple[int, ...], i: int) -> WeakPath:
    """Rotate P by edge e at pivot index i: reverse the suffix after v_i and
    attach it through e. Requires v_h in e, v_i in e, and 0 <= i <= h-2; the
    endpoint becomes v_{i+1} and the vertex set and start are unchanged.

    e may coincide with an edge already on the path (repetition is the point
    of weak objects). Membership of e in the host hypergraph is the caller's
    contract, as the path does not carry its host.
    """
    h = P.h
    if not (0 <= i <= h - 2):
        raise InputError(f"pivot index {i} outside [0, {h - 2}] for a path of length {h}")
    vh = P.vertices[-1]
    vi = P.vertices[i]
    if vh not in e:
        raise InputError(f"rotation edge {e} does not contain the endpoint {vh}")
    if vi not in e:
        raise InputError(f"rotation edge {e} does not contain the pivot vertex {vi}")
    e = tuple(e)
    new_vertices = P.vertices[: i + 1] + P.vertices[:i:-1]
    # edges after the pivot: e_h, e_{h-1}, ..., e_{i+2}  (stored indices h-1 .. i+1)
    new_edges = P.edges[:i] + (e,) + P.edges[h - 1 : i : -1]
    return WeakPath(new_vertices, new_edges)


@dataclass(frozen=True)
class PosaSet:
    """Rotation closure of a base path with its start fixed.

    endpoints: every endpoint reachable by rotations (the start excluded).
    representatives: one witnessing path per endpoint (same vertex set as the
    base, same start).
    saturated: True iff every discovered endpoint has all its neighbors
    inside the path's vertex set — the hypothesis under which the Pósa
    inequality |N(S)| < 2|S| is guaranteed (and asserted at construction).
    posa_inequality: whether |N(S)| < 2|S| held, recorded either way.
    """

    v0: int
    base: WeakPath
    endpoints: frozenset[int]
    representatives: Mapping[int, WeakPath] = field(repr=False)
    saturated: bool
    posa_inequality: bool


def posa_set(
    H: Hypergraph,
    P: WeakPath,
    v0: int,
    on_rotate: Callable[[WeakPath, tuple[int, ...], int, WeakPath], None] | None = None,
) -> PosaSet:
    """Breadth-first rotation closure of P fixing the start v0.

    v0 must be an endpoint of P (the path is reversed internally if it is the
    last vertex). Each closure step uses the lexicographically smallest
    hyperedge covering the pivot pair; `on_rotate(old, e, i, new)` is invoked
    for every rotation performed, which the test-suite uses to audit rotation
    soundness.

    When the closure is saturated (no discovered endpoint can leave the
    path's vertex set — true whenever P really is a longest path), the Pósa
    inequality |N(S)| < 2|S| is asserted; for unsaturated inputs it is only
    recorded, since the inequality's hypothesis does not hold.
    """
    vres = validate(P, H)
    if not vres.ok:
        raise InputError(f"base path invalid: {vres.violation}")
    if P.h < 1:
        raise InputError("path too short for a rotation closure (need h >= 1)")
    if v0 == P.last and v0 != P.first:
        P = P.reversed()
    if v0 != P.first:
        raise InputError(f"v0={v0} is not an endpoint of the path")
    shadow = H.shadow
    cover = H.cover_index
    reps: dict[int, WeakPath] = {P.last: P}
    queue: deque[WeakPath] = deque((P,))
    h = P.h
    while queue:
        cur = queue.popleft()
        w = cur.last
        pos = {v: k for k, v in enumerate(cur.vertices)}
        for x in shadow.adj[w]:
            i = pos.get(x, -1)
            if 0 <= i <= h - 2:
                u = cur.vertices[i + 1]
                if u not in reps:
                    e = cover[(x, w) if x < w else (w, x)]
                    new = rotate(cur, e, i)
                    if on_rotate is not None:
                        on_rotate(cur, e, i, new)
                    reps[u] = new
                    queue.append(new)
    endpoints = frozenset(reps)
    pmask = 0
    for v in P.vertices:
        pmask |= 1 << v
    masks = shadow.adj_masks
    saturated = all(masks[w] & ~pmask == 0 for w in endpoints)
    nbrs = neighbors(H, endpoints)
    inequality = len(nbrs) < 2 * len(endpoints)
    if saturated and not inequality:
        raise AssertionError(
            f"Posa inequality violated on a saturated closure: |N(S)| = {len(nbrs)}, "
            f"2|S| = {2 * len(endpoints)}"
        )
    return PosaSet(
        v0=P.first,
        base=P,
        endpoints=endpoints,
        representatives=reps,
        saturated=saturated,
        posa_inequality=inequality,
    )


def booster_lower_bound(n: int, d: int, u: int) -> Fraction:
    """Exact rational lower bound u*(C(n-1,d-1) - C(n-1-u,d-1))/d for the
    number of absent edges that close a longest path into a weak cycle."""
    if not (0 <= u <= n - 1):
        raise InputError(f"u={u} outside [0, {n - 1}]")
    return Fraction(u * (math.comb(n - 1, d - 1) - math.comb(n - 1 - u, d - 1)), d)


_BOOSTER_ENUM_LIMIT = 500_000


def booster_edges(H: Hypergraph, P: WeakPath) -> frozenset[tuple[int, ...]]:
    """Absent d-sets whose addition closes the longest path P into a weak
    cycle of length h+1.

    Caller contract: P is a longest weak path in H and H has no weak cycle of
    length h+1. For each endpoint w of the rotation closure of P (start
    fixed), the closure of the reversed representative is computed from w;
    every absent d-set containing w and at least one endpoint of that second
    closure is emitted. Each emitted set, once added, closes the witnessing
    representative into a weak (h+1)-cycle.

    Present d-sets joining w to its second closure are skipped, never
    emitted (emission is defined over absent sets only); under the caller
    contract no such present edge can exist anyway, since it would already
    close a weak (h+1)-cycle. In particular a hypergraph carrying every edge
    on its vertex support yields the empty set.
    """
    vres = validate(P, H)
    if not vres.ok:
        raise InputError(f"path invalid: {vres.violation}")
    if P.h < 2:
        raise InputError("booster enumeration needs a path of length >= 2")
    if math.comb(H.n - 1, H.d - 1) > _BOOSTER_ENUM_LIMIT:
        raise CapabilityError(
            f"booster enumeration over C({H.n - 1},{H.d - 1}) d-sets is too large"
        )
    base = posa_set(H, P, P.first)
    out: set[tuple[int, ...]] = set()
    edge_set = H.edge_set
    universe = range(H.n)
    for w, rep in sorted(base.representatives.items()):
        second = posa_set(H, rep.reversed(), w)
        s_i = second.endpoints
        for rest in combinations([v for v in universe if v != w], H.d - 1):
            if any(x in s_i for x in rest):
                e = tuple(sorted((w,) + rest))
                if e not in edge_set:
                    out.add(e)
    return frozenset(out)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of rotation_extension_search: a validated spanning weak cycle,
    or the best weak path found. `impossible` carries a certified reason when
    no spanning cycle can exist (fewer than 3 non-isolated vertices, or V1
    disconnected); `exhausted` flags rotation-budget exhaustion."""

    cycle: WeakCycle | None
    path: WeakPath | None
    complete: bool
    exhausted: bool
    rotations: int
    impossible: str | None = None


def default_rotation_budget(n: int) -> int:
    """Default rotation allowance: 50 * n * ln(n), floored at 1000."""
    return max(1000, int(50 * n * math.log(max(n, 2))))


def lift_path(H: Hypergraph, vseq) -> WeakPath:
    """Vertex sequence -> WeakPath, choosing for each consecutive pair the
    lexicographically smallest covering hyperedge."""
    vseq = [int(v) for v in vseq]
    cover = H.cover_index
    edges = []
    for u, v in zip(vseq, vseq[1:]):
        key = (u, v) if u < v else (v, u)
        e = cover.get(key)
        if e is None:
            raise InputError(f"pair ({u}, {v}) is not covered by any edge")
        edges.append(e)
    return WeakPath(tuple(vseq), tuple(edges))


def lift_cycle(H: Hypergraph, vseq) -> WeakCycle:
    """Vertex cycle (v0..v_{l-1}, wrap implied) -> WeakCycle, lex-smallest
    covering edge per pair."""
    vseq = [int(v) for v in vseq]
    if len(vseq) < 3:
        raise InputError("cycle too short")
    cover = H.cover_index
    edges = []
    for k in range(len(vseq)):
        u, v = vseq[k - 1], vseq[k]
        key = (u, v) if u < v else (v, u)
        e = cover.get(key)
        if e is None:
            raise InputError(f"pair ({u}, {v}) is not covered by any edge")
        edges.append(e)
    # edges[k] covers (v_{k-1}, v_k); cycle edges are 1-based e_1..e_l
    return WeakCycle(tuple(vseq), tuple(edges[1:] + edges[:1]))


def rotation_extension_search(
    H: Hypergraph,
    budget: int | None = None,
    rng: SeededRng | None = None,
) -> SearchOutcome:
    """Heuristic search for a weak cycle spanning the non-isolated vertices.

    Grows a path greedily on the shadow, closes rotation closures at stalls,
    splices non-spanning cycles open through the connectivity of V1, and
    restarts within a global rotation budget. Any returned cycle is validated
    and spans V1(H) exactly — the search can fail to find, but never returns
    a false positive. Deterministic for a fixed (H, budget, rng seed).
    """
    if budget is None:
        budget = default_rotation_budget(H.n)
    gen = (rng or SeededRng(0, 0)).generator()
    v1 = non_isolated_vertices(H)
    if len(v1) < 3:
        return SearchOutcome(
            cycle=None, path=None, complete=False, exhausted=False, rotations=0,
            impossible=f"only {len(v1)} non-isolated vertices (cycles need 3)",
        )
    if not is_connected_on(H, v1):
        return SearchOutcome(
            cycle=None, path=None, complete=False, exhausted=False, rotations=0,
            impossible="non-isolated vertices are disconnected",
        )
    shadow = H.shadow
    cyc, best, rots, exhausted = _engine.spanning_cycle_search(
        shadow.adj, shadow.adj_masks, list(v1), gen, budget
    )
    if cyc is not None:
        cycle = lift_cycle(H, cyc)
        assert validate(cycle, H).ok and cycle.spanned == frozenset(v1)
        return SearchOutcome(
            cycle=cycle, path=None, complete=True, exhausted=False, rotations=rots
        )
    path = lift_path(H, best) if best else None
    return SearchOutcome(
        cycle=None, path=path, complete=False, exhausted=exhausted, rotations=rots
    )


def stalled_path(
    H: Hypergraph,
    rng: SeededRng | None = None,
    budget: int | None = None,
    attempts: int = 1,
) -> WeakPath:
    """Grow-and-rotate on the shadow until no closure endpoint can extend;
    returns the stalled path (saturated in the posa_set sense). Used to
    manufacture honest inputs for Pósa-set experiments."""
    v1 = non_isolated_vertices(H)
    if not v1:
        raise InputError("hypergraph has no edges: no non-trivial path exists")
    if budget is None:
        budget = default_rotation_budget(H.n)
    gen = (rng or SeededRng(0, 0)).generator()
    shadow = H.shadow
    best, _, exhausted = _engine.stalled_longest_path(
        shadow.adj, shadow.adj_masks, list(v1), gen, budget, attempts=attempts
    )
    if exhausted:
        raise CapabilityError("rotation budget exhausted before any stalled path")
    if len(best) < 2:
        # a lone non-isolated vertex cannot happen (edges have d >= 2 vertices
        # in one component), so growth always reaches length >= 1
        raise AssertionError("stalled path unexpectedly trivial")
    return lift_path(H, best)


# --- two-block constructive long path ----------------------------------------


@dataclass(frozen=True)
class ProjectionGraph:
    """Graph projection of a block of vertices: {u, v} adjacent iff some
    hyperedge meets the block in exactly {u, v}. `side` is "low" (first
    floor(n/2) vertices) or "high" (last floor(n/2)); labels are original."""

    side: str
    vertices: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]
    pair_cover: Mapping[tuple[int, int], tuple[int, ...]] = field(repr=False)


def projection_graph(H: Hypergraph, side: str) -> ProjectionGraph:
    if side not in ("low", "high"):
        raise InputError(f"side must be 'low' or 'high', got {side!r}")
    half = H.n // 2
    if side == "low":
        block = tuple(range(half))
        inside = lambda v: v < half
    else:
        block = tuple(range(H.n - half, H.n))
        inside = lambda v: v >= H.n - half
    index = {v: k for k, v in enumerate(block)}
    nbr: list[set[int]] = [set() for _ in block]
    pair_cover: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in H.edges:  # lex order: first covering edge wins
        ins = [v for v in e if inside(v)]
        if len(ins) == 2:
            u, v = ins
            nbr[index[u]].add(v)
            nbr[index[v]].add(u)
            pair_cover.setdefault((u, v), e)
    return ProjectionGraph(
        side=side,
        vertices=block,
        adj=tuple(tuple(sorted(s)) for s in nbr),
        pair_cover=pair_cover,
    )


@dataclass(frozen=True)
class DlvResult:
    """Output of dlv_long_path: the built weak path, whether the two
    half-paths were bridged, their lengths, and the window size used."""

    path: WeakPath
    bridged: bool
    low_length: int
    high_length: int
    window: int


def _projection_longest(proj: ProjectionGraph, gen, budget: int) -> list[int]:
    """Stalled long path inside a projection, in original vertex labels."""
    index = {v: k for k, v in enumerate(proj.vertices)}
    local_adj = tuple(
        tuple(index[w] for w in nbrs) for nbrs in proj.adj
    )
    masks = tuple(sum(1 << w for w in nbrs) for nbrs in local_adj)
    non_isolated = [k for k, nbrs in enumerate(local_adj) if nbrs]
    if not non_isolated:
        return [proj.vertices[0]] if proj.vertices else []
    best, _, _ = _engine.stalled_longest_path(
        local_adj, masks, non_isolated, gen, budget, attempts=3
    )
    return [proj.vertices[k] for k in best]


def _lift_projection_path(proj: ProjectionGraph, vseq: list[int]) -> list[tuple[int, ...]]:
    edges = []
    for u, v in zip(vseq, vseq[1:]):
        key = (u, v) if u < v else (v, u)
        edges.append(proj.pair_cover[key])
    return edges


def dlv_long_path(
    H: Hypergraph,
    window: int | None = None,
    rng: SeededRng | None = None,
    budget: int | None = None,
) -> DlvResult:
    """Constructive long weak path: project onto the low and high vertex
    blocks, find a long path in each projection by rotation-extension, and
    bridge the tail window of the low path to the head window of the high
    path through any hyperedge meeting both.

    The two blocks are disjoint (low = first floor(n/2) ids, high = last
    floor(n/2)), so the concatenation is a valid weak path. If no hyperedge
    joins the two windows, the longer half-path is returned with
    bridged=False. The achieved length is reported, not guaranteed.
    """
    if H.n < 4:
        raise InputError(f"need n >= 4, got {H.n}")
    if window is None:
        window = math.ceil(H.n / math.log(H.n))
    if window < 1:
        raise InputError(f"window must be >= 1, got {window}")
    if budget is None:
        budget = default_rotation_budget(H.n)
    gen = (rng or SeededRng(0, 0)).generator()
    low = projection_graph(H, "low")
    high = projection_graph(H, "high")
    p_low = _projection_longest(low, gen, budget)
    p_high = _projection_longest(high, gen, budget)
    low_len = max(0, len(p_low) - 1)
    high_len = max(0, len(p_high) - 1)

    tail = p_low[-window:]
    head = p_high[:window]
    tail_set, head_set = set(tail), set(head)
    bridge = None
    for e in H.edges:
        if any(v in tail_set for v in e) and any(v in head_set for v in e):
            bridge = e
            break
    if bridge is None or len(p_low) < 2 or len(p_high) < 2:
        half, proj = (p_low, low) if low_len >= high_len else (p_high, high)
        if len(half) < 2:
            raise InputError("no projection path of positive length exists")
        path = WeakPath(tuple(half), tuple(_lift_projection_path(proj, half)))
        return DlvResult(
            path=path, bridged=False, low_length=low_len, high_length=high_len,
            window=window,
        )
    pos_low = {v: k for k, v in enumerate(p_low)}
    pos_high = {v: k for k, v in enumerate(p_high)}
    x = max((v for v in bridge if v in tail_set), key=pos_low.__getitem__)
    y = min((v for v in bridge if v in head_set), key=pos_high.__getitem__)
    left = p_low[: pos_low[x] + 1]
    right = p_high[pos_high[y]:]
    edges = (
        _lift_projection_path(low, left)
        + [bridge]
        + _lift_projection_path(high, right)
    )
    path = WeakPath(tuple(left + right), tuple(edges))
    return DlvResult(
        path=path, bridged=True, low_length=low_len, high_length=high_len,
        window=window,
    )


# --- JSON serialization --------------------------------------------------------


def weak_to_json(obj: WeakPath | WeakCycle) -> str:
    """Serialize as an alternating array [v0, [e1...], v1, ...]; cycles close
    the loop explicitly by repeating v0 after the final edge."""
    seq: list = [obj.vertices[0]]
    if isinstance(obj, WeakCycle):
        for k in range(1, len(obj.vertices)):
            seq.append(list(obj.edges[k - 1]))
            seq.append(obj.vertices[k])
        seq.append(list(obj.edges[-1]))
        seq.append(obj.vertices[0])
        doc = {
            "kind": "cycle",
            "sequence": seq,
            "strict_edges": obj.has_distinct_edges,
        }
    elif isinstance(obj, WeakPath):
        for k in range(1, len(obj.vertices)):
            seq.append(list(obj.edges[k - 1]))
            seq.append(obj.vertices[k])
        doc = {"kind": "path", "sequence": seq}
    else:
        raise InputError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def weak_from_json(text: str) -> WeakPath | WeakCycle:
    try:
        doc = json.loads(text)
        kind = doc["kind"]
        seq = doc["sequence"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"bad weak path/cycle JSON: {exc}") from exc
    if not isinstance(seq, list) or len(seq) % 2 == 0 or len(seq) < 1:
        raise InputError("sequence must alternate vertex, edge, ..., vertex")
    vertices = seq[0::2]
    edges = [tuple(e) for e in seq[1::2]]
    if not all(isinstance(v, int) for v in vertices):
        raise InputError("vertex entries must be integers")
    if kind == "path":
        return WeakPath(tuple(vertices), tuple(edges))
    if kind == "cycle":
        if len(vertices) < 2 or vertices[-1] != vertices[0]:
            raise InputError("cycle sequence must end at its starting vertex")
        return WeakCycle(tuple(vertices[:-1]), tuple(edges))
    raise InputError(f"unknown kind {kind!r}")
