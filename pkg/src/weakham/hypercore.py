"""Core d-uniform hypergraph type, neighborhoods, components, and the shadow graph.

Everything downstream leans on one structural fact: because weak cycles may
reuse hyperedges, only *pair coverage* matters for path/cycle questions. Two
vertices are "shadow-adjacent" iff some hyperedge contains both, and a weak
cycle spanning a vertex set W exists iff the shadow graph restricted to W has
an ordinary graph Hamilton cycle on W. Path and cycle machinery therefore
consults the shadow; degree/expansion/booster machinery consults the
hyperedges themselves.

Vertices are 0-based contiguous ids. Edges are stored as strictly ascending
tuples and the edge set is kept lexicographically sorted, which gives a
canonical form: equal hypergraphs serialize to identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Hypergraph",
    "ShadowGraph",
    "degree",
    "degrees",
    "isolated_vertices",
    "non_isolated_vertices",
    "neighbors",
    "shadow_graph",
    "induced",
    "components",
    "is_connected_on",
    "parse_hypergraph",
    "format_hypergraph",
    "load_hypergraph",
    "dump_hypergraph",
]


@dataclass(frozen=True)
class Hypergraph:
    """A d-uniform hypergraph on vertices 0..n-1 with a duplicate-free edge set.

    Invariants (enforced at construction):
      * every edge is a strictly ascending d-tuple over [0, n)
      * no repeated edges
      * d >= 2; n >= d whenever the edge set is non-empty
    """

    n: int
    d: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.d < 2:
            raise InputError(f"d must be >= 2, got {self.d}")
        if self.n < 0:
            raise InputError(f"n must be >= 0, got {self.n}")
        if self.edges and self.n < self.d:
            raise InputError(f"n={self.n} < d={self.d} with non-empty edge set")
        prev = None
        for e in self.edges:
            if len(e) != self.d:
                raise InputError(f"edge {e} has arity {len(e)}, expected {self.d}")
            if any(v < 0 or v >= self.n for v in e):
                raise InputError(f"edge {e} has a vertex outside [0, {self.n})")
            if any(e[k] >= e[k + 1] for k in range(self.d - 1)):
                raise InputError(f"edge {e} is not strictly ascending")
            if prev is not None:
                if e == prev:
                    raise InputError(f"duplicate edge {e}")
                if e < prev:
                    raise InputError("edge list is not sorted lexicographically")
            prev = e

    @staticmethod
    def from_edges(n: int, d: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """Canonicalize (sort each edge, sort the edge list) and validate.

        Duplicate edges (after per-edge sorting) raise InputError: the random
        models H_d(n,p) / H_d(n,m) are simple, so a duplicate is a bug
        upstream, not something to smooth over.
        """
        canon = sorted(tuple(sorted(e)) for e in edges)
        return Hypergraph(n=n, d=d, edges=tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def shadow(self) -> "ShadowGraph":
        return shadow_graph(self)

    @cached_property
    def cover_index(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each covered pair (u, v) with u < v to the lexicographically
        smallest hyperedge containing both. Used to lift shadow paths/cycles
        back to weak paths/cycles with deterministic witnesses."""
        idx: dict[tuple[int, int], tuple[int, ...]] = {}
        for e in self.edges:  # edges iterate in lex order, so first wins
            for a in range(self.d):
                for b in range(a + 1, self.d):
                    pair = (e[a], e[b])
                    if pair not in idx:
                        idx[pair] = e
        return idx

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class ShadowGraph:
    """The 2-uniform projection of a hypergraph: u ~ v iff some hyperedge
    contains both. Symmetric, no self-loops. `adj[v]` is an ascending tuple.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbor sets as int bitmasks (bit v of adj_masks[u] = adjacency)."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj_masks[u] >> v) & 1 == 1


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not (0 <= v < H.n):
        raise InputError(f"vertex {v} outside [0, {H.n})")


def degree(H: Hypergraph, v: int) -> int:
    """Number of hyperedges containing v."""
    _check_vertex(H, v)
    return H._degrees[v]


def degrees(H: Hypergraph) -> tuple[int, ...]:
    """Degree sequence indexed by vertex id."""
    return H._degrees


def isolated_vertices(H: Hypergraph) -> tuple[int, ...]:
    """V0(H): vertices contained in no edge, ascending."""
    return tuple(v for v in range(H.n) if H._degrees[v] == 0)


def non_isolated_vertices(H: Hypergraph) -> tuple[int, ...]:
    """V1(H): vertices of degree >= 1, ascending."""
    return tuple(v for v in range(H.n) if H._degrees[v] > 0)


def neighbors(H: Hypergraph, V: Iterable[int]) -> frozenset[int]:
    """N(V) = {w not in V : some edge contains w and some v in V}.

    Disjoint from V by definition; always a subset of V1(H).
    """
    vs = set(V)
    for v in vs:
        _check_vertex(H, v)
    out: set[int] = set()
    for e in H.edges:
        if any(v in vs for v in e):
            out.update(e)
    return frozenset(out - vs)


def shadow_graph(H: Hypergraph) -> ShadowGraph:
    """Materialize the shadow: u ~ v iff some hyperedge contains both."""
    nbr: list[set[int]] = [set() for _ in range(H.n)]
    for e in H.edges:
        for a in range(H.d):
            for b in range(a + 1, H.d):
                nbr[e[a]].add(e[b])
                nbr[e[b]].add(e[a])
    return ShadowGraph(n=H.n, adj=tuple(tuple(sorted(s)) for s in nbr))


def induced(H: Hypergraph, W: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph keeping exactly the edges contained in W.

    Vertex labels are kept (no compaction): vertices outside W simply end up
    isolated. This keeps N(.) and path bookkeeping label-stable.
    """
    ws = set(W)
    for v in ws:
        _check_vertex(H, v)
    kept = tuple(e for e in H.edges if all(v in ws for v in e))
    return Hypergraph(n=H.n, d=H.d, edges=kept)


def components(H: Hypergraph) -> tuple[frozenset[int], ...]:
    """Connected components of the shadow graph, isolated vertices as
    singletons, ordered by smallest member.

    Computed by union-find directly over hyperedges (each edge merges its d
    vertices), which is equivalent to shadow BFS; the equivalence is covered
    by tests.
    """
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    groups: dict[int, set[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), set()).add(v)
    return tuple(
        frozenset(g) for g in sorted(groups.values(), key=min)
    )


def _components_shadow_bfs(H: Hypergraph) -> tuple[frozenset[int], ...]:
    """Independent re-derivation of components() via BFS on the shadow.

    Exists purely as an oracle for the equivalence test; do not use in hot
    paths (it materializes the shadow).
    """
    sh = H.shadow
    seen = [False] * H.n
    out = []
    for s in range(H.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in sh.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        nxt.append(w)
            frontier = nxt
        out.append(frozenset(comp))
    return tuple(sorted(out, key=min))


def is_connected_on(H: Hypergraph, W: Iterable[int]) -> bool:
    """True iff the edges of H lying inside W connect all of W.

    |W| <= 1 counts as connected. This is connectivity of induced(H, W)
    restricted to W, not connectivity of W inside the full shadow.
    """
    ws = sorted(set(W))
    for v in ws:
        _check_vertex(H, v)
    if len(ws) <= 1:
        return True
    pos = {v: i for i, v in enumerate(ws)}
    parent = list(range(len(ws)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    wset = set(ws)
    for e in H.edges:
        if all(v in wset for v in e):
            r = find(pos[e[0]])
            for v in e[1:]:
                rv = find(pos[v])
                if rv != r:
                    parent[rv] = r
    root = find(0)
    return all(find(i) == root for i in range(len(ws)))


# --- text format ------------------------------------------------------------
#
# Line 1: "d n m". Then m lines of d space-separated ascending vertex ids,
# sorted lexicographically. LF line endings, no trailing whitespace, and a
# final newline. Canonical: serialize(parse(text)) == text.


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.d} {H.n} {H.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    if not text.endswith("\n"):
        raise InputError("hypergraph text must end with a newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise InputError("empty hypergraph text")
    head = lines[0].split(" ")
    if len(head) != 3 or "" in head or lines[0].strip() != lines[0]:
        raise InputError(f"bad header line {lines[0]!r}, expected 'd n m'")
    try:
        d, n, m = (int(x) for x in head)
    except ValueError as exc:
        raise InputError(f"non-integer header field in {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise InputError(f"header says m={m} but {len(lines) - 1} edge lines found")
    edges = []
    for ln in lines[1:]:
        parts = ln.split(" ")
        if "" in parts or ln.strip() != ln:
            raise InputError(f"bad edge line {ln!r} (stray whitespace)")
        try:
            e = tuple(int(x) for x in parts)
        except ValueError as exc:
            raise InputError(f"non-integer vertex in edge line {ln!r}") from exc
        edges.append(e)
    H = Hypergraph(n=n, d=d, edges=tuple(edges))  # validates arity/order/dups
    return H


def load_hypergraph(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    if "\r" in text:
        raise InputError("hypergraph files must use LF line endings")
    return parse_hypergraph(text)


def dump_hypergraph(H: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_hypergraph(H))
