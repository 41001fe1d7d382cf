from __future__ import annotations

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given, settings
from oracles import brute_is_planar, faces_from_rotation

from defekt.catalog import builtin
from defekt.graph import complete, complete_bipartite, cycle, is_triangle_free, path
from defekt.planar import (
    DisconnectedGraphError,
    PreconditionError,
    face_profile,
    is_maximal_tfp,
    is_planar,
    lemma3_audit,
    mtfp_edges_from_f5,
    planar_embedding,
)


def test_kuratowski_graphs():
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(complete(4))
    assert is_planar(complete_bipartite(2, 7))
    assert planar_embedding(complete(5)) is None
    assert planar_embedding(complete_bipartite(3, 3)) is None


def test_decision_and_embedding_match_kuratowski_oracle(atlas):
    connected = [g for g in atlas if g.n and g.is_connected()]
    assert len(connected) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    planar = 0
    for g in connected:
        expected = brute_is_planar(g)
        assert is_planar(g) == expected, str(g)
        emb = planar_embedding(g)
        assert (emb is not None) == expected, str(g)
        if emb is not None:
            planar += 1
            lengths = faces_from_rotation(emb.rotation, g.n)
            assert list(face_profile(emb).lengths) == lengths
            if g.num_edges:
                assert g.n - g.num_edges + len(lengths) == 2
                assert sum(lengths) == 2 * g.num_edges
    assert planar == 1 + 1 + 2 + 6 + 20 + 99 + 646


@given(graphs(min_n=1, max_n=12))
@settings(max_examples=300, deadline=None)
def test_decision_agrees_with_networkx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    assert is_planar(g) == nx.check_planarity(h)[0]
    if g.is_connected():
        emb = planar_embedding(g)
        assert (emb is not None) == is_planar(g)


@pytest.mark.parametrize(
    "g,lengths",
    [
        (cycle(4), (4, 4)),
        (complete(4), (3, 3, 3, 3)),
        (path(3), (4,)),
        (complete_bipartite(2, 3), (4, 4, 4)),
    ],
)
def test_face_profiles(g, lengths):
    assert face_profile(planar_embedding(g)).lengths == lengths


def test_gp1_profile():
    prof = face_profile(planar_embedding(builtin("Gp1").graph))
    assert (prof.f4, prof.f5, prof.num_faces) == (6, 2, 8)


def test_disconnected_embedding_rejected():
    with pytest.raises(DisconnectedGraphError):
        planar_embedding(cycle(4).disjoint_union(cycle(4)))


def test_maximality():
    assert is_maximal_tfp(cycle(4))
    assert not is_maximal_tfp(cycle(6))
    assert is_maximal_tfp(cycle(5))
    assert is_maximal_tfp(builtin("Gp1").graph)
    with pytest.raises(PreconditionError):
        is_maximal_tfp(complete(3))
    with pytest.raises(PreconditionError):
        is_maximal_tfp(complete_bipartite(3, 3))


@given(graphs(min_n=3, max_n=8, triangle_free=True))
@settings(max_examples=100, deadline=None)
def test_maximality_by_definition(g):
    if not is_planar(g):
        return
    addable = any(
        is_triangle_free(g.add_edge(x, y)) and is_planar(g.add_edge(x, y))
        for x in range(g.n)
        for y in range(x + 1, g.n)
        if not g.has_edge(x, y)
    )
    assert is_maximal_tfp(g) == (not addable)


def test_audit_on_gp1_and_c5():
    a = lemma3_audit(builtin("Gp1").graph)
    assert a.formula_holds and a.f5 == 2 and a.edges == mtfp_edges_from_f5(11, 2) == 17
    c5 = lemma3_audit(cycle(5))
    assert c5.formula_holds and c5.f5 == 2 and c5.edges == 5


def test_audit_preconditions():
    with pytest.raises(PreconditionError):
        lemma3_audit(cycle(4))  # bipartite
    with pytest.raises(PreconditionError):
        lemma3_audit(cycle(7))  # an edge can still be added
    with pytest.raises(DisconnectedGraphError):
        lemma3_audit(cycle(5).disjoint_union(cycle(5)))
    with pytest.raises(ValueError):
        mtfp_edges_from_f5(10, 3)
