from __future__ import annotations

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from defekt.colour import chi_k
from defekt.graph import (
    DuplicateEdgeError,
    Graph6Error,
    MissingEdgeError,
    SmallGraph,
    VertexRangeError,
    complete,
    complete_bipartite,
    cycle,
    emit_graph6,
    from_edge_list,
    induced_subgraph,
    is_triangle_free,
    odd_girth,
    parse_graph6,
    path,
    to_dot,
    to_edge_list,
)


def test_triangle_free_small_cases():
    assert is_triangle_free(cycle(5))
    assert not is_triangle_free(complete(3))
    assert is_triangle_free(complete_bipartite(3, 4))


def test_odd_girth():
    assert odd_girth(cycle(5)) == 5
    assert odd_girth(cycle(7)) == 7
    assert odd_girth(complete_bipartite(2, 3)) is None
    assert odd_girth(complete(4)) == 3
    assert odd_girth(cycle(6)) is None


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_odd_girth_none_iff_bipartite(g):
    assert (odd_girth(g) is None) == (chi_k(g, 0) <= 2)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_odd_girth_matches_networkx_cycles(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    odd = [len(c) for c in nx.simple_cycles(h) if len(c) % 2]
    assert odd_girth(g) == (min(odd) if odd else None)


def test_induced_subgraph_examples():
    c5 = cycle(5)
    assert induced_subgraph(c5, range(5)) == c5
    p4 = induced_subgraph(c5, [0, 1, 2, 3])
    assert p4 == path(4)


@given(graphs(max_n=10), st.data())
@settings(max_examples=100, deadline=None)
def test_induced_subgraph_preserves_adjacency(g, data):
    s = sorted(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else [])
    h = induced_subgraph(g, s)
    assert h.n == len(s)
    assert h.is_valid()
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            assert h.has_edge(i, j) == g.has_edge(s[i], s[j])


def test_complete_bipartite():
    k23 = complete_bipartite(2, 3)
    assert (k23.n, k23.num_edges) == (5, 6)
    assert sorted(k23.degrees(), reverse=True) == [3, 3, 2, 2, 2]
    assert complete_bipartite(1, 1) == complete(2)
    k24 = complete_bipartite(2, 4)
    assert k24.degree(0) == k24.degree(1) == 4
    with pytest.raises(VertexRangeError):
        complete_bipartite(20, 13)


def test_mutations_and_errors():
    k3 = complete(3)
    assert k3.delete_vertex(1) == complete(2)
    g = cycle(5)
    assert g.remove_edge(0, 1).add_edge(0, 1) == g
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(0, 1)
    with pytest.raises(MissingEdgeError):
        g.remove_edge(0, 2)
    with pytest.raises(VertexRangeError):
        g.add_edge(0, 5)
    with pytest.raises(VertexRangeError):
        g.delete_vertex(7)


@given(graphs(min_n=1, max_n=12), st.data())
@settings(max_examples=100, deadline=None)
def test_delete_vertex_compacts_labels(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = g.delete_vertex(v)
    assert h.is_valid()
    old = [u for u in range(g.n) if u != v]
    for i in range(h.n):
        for j in range(h.n):
            assert h.has_edge(i, j) == g.has_edge(old[i], old[j])


@given(graphs(max_n=12))
@settings(max_examples=100, deadline=None)
def test_edge_count_is_half_degree_sum(g):
    assert g.is_valid()
    assert 2 * g.num_edges == sum(g.degrees())
    assert g.num_edges == len(g.edges())


def test_graph6_known_strings():
    assert emit_graph6(SmallGraph.empty(1)) == b"@"
    # K2: order byte 2 + 63 = 'A'; the single bit x(0,1) = 1 packs to 0b100000 = 32, 32 + 63 = '_'
    assert emit_graph6(complete(2)) == b"A_"
    assert emit_graph6(complete(2)) == nx.to_graph6_bytes(nx.complete_graph(2), header=False).strip()
    assert parse_graph6("A_") == complete(2)


@given(graphs(max_n=14))
@settings(max_examples=200, deadline=None)
def test_graph6_matches_networkx_and_round_trips(g):
    s = emit_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert s == nx.to_graph6_bytes(h, header=False).strip()
    assert parse_graph6(s) == g
    assert emit_graph6(parse_graph6(s)) == s


@pytest.mark.parametrize(
    "bad",
    [
        b"",
        b"A",  # missing data byte
        b"A__",  # extra byte
        b"A`",  # padding bit set
        b"B\x20",  # byte below 63
        b"~??????",  # long form
        b"a",  # n = 34 > 32
    ],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_edge_list_and_dot():
    g = cycle(4)
    text = to_edge_list(g)
    assert text.splitlines()[0] == "4 4"
    assert from_edge_list(text) == g
    dot = to_dot(g, {0: "u"})
    assert 'label="u"' in dot and "0 -- 1;" in dot
