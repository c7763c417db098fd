"""Core hypergraph representation: degrees, neighborhoods, shadow graph,
induced subhypergraphs, components, and the canonical text format."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakham import (
    Hypergraph,
    InputError,
    components,
    degree,
    degrees,
    dump_hypergraph,
    format_hypergraph,
    induced,
    is_connected_on,
    isolated_vertices,
    load_hypergraph,
    neighbors,
    non_isolated_vertices,
    parse_hypergraph,
    shadow_graph,
)

from conftest import complete_hypergraph, hypergraphs


def H(n, d, edges):
    return Hypergraph.from_edges(n, d, edges)


# ---------------------------------------------------------------- construction


def test_edges_stored_sorted_and_canonical():
    h = H(5, 3, [(4, 2, 3), (2, 1, 0)])
    assert h.edges == ((0, 1, 2), (2, 3, 4))
    assert h.m == 2 and h.n == 5 and h.d == 3


def test_duplicate_edge_rejected():
    with pytest.raises(InputError):
        H(4, 3, [(0, 1, 2), (2, 1, 0)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(InputError):
        H(3, 3, [(0, 1, 3)])


def test_non_d_edge_rejected():
    with pytest.raises(InputError):
        H(4, 3, [(0, 1)])
    with pytest.raises(InputError):
        H(4, 3, [(0, 1, 1)])


def test_uniformity_below_two_rejected():
    with pytest.raises(InputError):
        H(3, 1, [(0,)])


def test_empty_hypergraph_allows_small_n():
    h = H(2, 3, [])
    assert h.m == 0 and isolated_vertices(h) == (0, 1)


# -------------------------------------------------------------------- degrees


def test_degree_single_edge():
    assert degree(H(3, 3, [(0, 1, 2)]), 0) == 1


def test_degree_empty():
    assert degree(H(5, 3, []), 3) == 0


def test_degree_two_incident_edges():
    assert degree(H(4, 3, [(0, 1, 2), (0, 1, 3)]), 1) == 2


def test_degree_out_of_range():
    with pytest.raises(InputError):
        degree(H(3, 3, [(0, 1, 2)]), 3)
    with pytest.raises(InputError):
        degree(H(3, 3, [(0, 1, 2)]), -1)


def test_degrees_vector_matches_scalar():
    h = H(6, 3, [(0, 1, 2), (2, 3, 4), (1, 2, 3)])
    assert degrees(h) == tuple(degree(h, v) for v in range(6))


# ----------------------------------------------------------- isolated vertices


def test_isolated_all_when_edgeless():
    assert isolated_vertices(H(5, 3, [])) == (0, 1, 2, 3, 4)


def test_isolated_single_leftover():
    assert isolated_vertices(H(4, 3, [(0, 1, 2)])) == (3,)


def test_isolated_after_degree_scan():
    assert isolated_vertices(H(6, 3, [(0, 1, 2), (2, 3, 4)])) == (5,)


def test_non_isolated_is_complement():
    h = H(6, 3, [(0, 1, 2), (2, 3, 4)])
    assert set(non_isolated_vertices(h)) == set(range(6)) - set(isolated_vertices(h))


# ------------------------------------------------------------------- neighbors


def test_neighbors_one_edge():
    assert neighbors(H(3, 3, [(0, 1, 2)]), {0}) == frozenset({1, 2})


def test_neighbors_empty_set():
    assert neighbors(H(3, 3, [(0, 1, 2)]), frozenset()) == frozenset()


def test_neighbors_union_minus_input():
    assert neighbors(H(5, 3, [(0, 1, 2), (2, 3, 4)]), {0, 3}) == frozenset({1, 2, 4})


def test_neighbors_out_of_range():
    with pytest.raises(InputError):
        neighbors(H(3, 3, [(0, 1, 2)]), {5})


@given(hypergraphs(max_n=10))
def test_neighbors_disjoint_and_non_isolated(h):
    for size in range(min(h.n, 4)):
        V = frozenset(range(size))
        N = neighbors(h, V)
        assert N & V == frozenset()
        assert N <= set(non_isolated_vertices(h))


# ---------------------------------------------------------------- shadow graph


def test_shadow_one_edge_is_clique():
    s = shadow_graph(H(3, 3, [(0, 1, 2)]))
    pairs = {(u, v) for u in range(3) for v in range(3) if u != v and s.has_edge(u, v)}
    assert pairs == {(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)}


def test_shadow_edgeless():
    s = shadow_graph(H(4, 3, []))
    assert s.edge_count() == 0


def test_shadow_pair_union():
    s = shadow_graph(H(4, 3, [(0, 1, 2), (1, 2, 3)]))
    got = {(u, v) for u in range(4) for v in range(u + 1, 4) if s.has_edge(u, v)}
    assert got == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}


@given(hypergraphs(max_n=10))
def test_shadow_symmetric_no_loops(h):
    s = shadow_graph(h)
    for u in range(h.n):
        assert not s.has_edge(u, u)
        for v in s.adj[u]:
            assert u in s.adj[v]


@given(hypergraphs(max_n=10))
def test_degree_zero_iff_no_shadow_neighbors(h):
    s = shadow_graph(h)
    for v in range(h.n):
        assert (degree(h, v) == 0) == (len(s.adj[v]) == 0)


# --------------------------------------------------------------------- induced


def test_induced_keeps_inside_edges():
    assert induced(H(5, 3, [(0, 1, 2), (2, 3, 4)]), {0, 1, 2}).edges == ((0, 1, 2),)


def test_induced_empty_subset():
    h = induced(H(5, 3, [(0, 1, 2)]), frozenset())
    assert h.m == 0 and h.n == 5


def test_induced_filters_by_containment():
    assert induced(H(4, 3, [(0, 1, 2), (1, 2, 3)]), {1, 2, 3}).edges == ((1, 2, 3),)


def test_induced_keeps_original_labels():
    h = induced(H(6, 3, [(3, 4, 5)]), {3, 4, 5})
    assert h.n == 6 and h.edges == ((3, 4, 5),)


@given(hypergraphs(max_n=9))
def test_shadow_of_induced_matches_inside_pairs(h):
    W = frozenset(v for v in range(h.n) if v % 2 == 0)
    s_ind = shadow_graph(induced(h, W))
    for u in range(h.n):
        for v in range(u + 1, h.n):
            covered_inside = any(
                u in e and v in e and set(e) <= W for e in h.edges
            )
            assert s_ind.has_edge(u, v) == covered_inside


# ------------------------------------------------------------------ components


def test_components_edge_plus_singleton():
    assert set(components(H(4, 3, [(0, 1, 2)]))) == {
        frozenset({0, 1, 2}),
        frozenset({3}),
    }


def test_components_edgeless_singletons():
    assert set(components(H(3, 3, []))) == {frozenset({v}) for v in range(3)}


def test_components_two_blocks():
    got = set(components(H(8, 3, [(0, 1, 2), (2, 3, 4), (5, 6, 7)])))
    assert got == {frozenset(range(5)), frozenset({5, 6, 7})}


def _union_find_components(h):
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        for v in e[1:]:
            parent[find(v)] = find(e[0])
    groups = {}
    for v in range(h.n):
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(g) for g in groups.values()}


@given(hypergraphs(max_n=12))
def test_components_agree_with_union_find(h):
    assert set(components(h)) == _union_find_components(h)


def test_is_connected_on():
    h = H(8, 3, [(0, 1, 2), (2, 3, 4), (5, 6, 7)])
    assert is_connected_on(h, range(5))
    assert not is_connected_on(h, range(8))
    assert is_connected_on(h, {3})
    assert is_connected_on(h, frozenset())


# ----------------------------------------------------------------- text format


def test_format_layout():
    text = format_hypergraph(H(5, 3, [(2, 3, 4), (0, 1, 2)]))
    assert text == "3 5 2\n0 1 2\n2 3 4\n"


def test_format_lines_sorted_lexicographically():
    text = format_hypergraph(H(12, 3, [(0, 2, 11), (0, 10, 11), (0, 2, 3)]))
    body = text.splitlines()[1:]
    assert body == sorted(body, key=lambda ln: tuple(map(int, ln.split())))


def test_parse_round_trip():
    h = H(6, 3, [(0, 1, 2), (2, 3, 4), (1, 4, 5)])
    assert parse_hypergraph(format_hypergraph(h)) == h


def test_parse_rejects_malformed():
    with pytest.raises(InputError):
        parse_hypergraph("3 5\n0 1 2\n")
    with pytest.raises(InputError):
        parse_hypergraph("3 5 1\n0 1\n")
    with pytest.raises(InputError):
        parse_hypergraph("3 5 2\n0 1 2\n")
    with pytest.raises(InputError):
        parse_hypergraph("3 5 1\n2 1 0\n")


def test_dump_load_round_trip_bytes(tmp_path):
    h = H(7, 3, [(0, 1, 6), (1, 2, 3)])
    path = tmp_path / "h.txt"
    dump_hypergraph(h, path)
    raw = path.read_bytes()
    assert raw == format_hypergraph(h).encode()
    assert b"\r" not in raw and not raw.decode().rstrip("\n").endswith(" ")
    assert load_hypergraph(path) == h


@given(hypergraphs(max_n=10))
def test_format_round_trip_property(h):
    assert parse_hypergraph(format_hypergraph(h)) == h


def test_complete_hypergraph_helper():
    h = complete_hypergraph(5, 3)
    assert h.m == 10
    assert len(set(h.edges)) == 10
    assert all(len(e) == 3 for e in h.edges)


@given(st.integers(4, 8))
def test_complete_shadow_is_complete(n):
    s = shadow_graph(complete_hypergraph(n, 3))
    assert s.edge_count() == n * (n - 1) // 2
