from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from defekt.graph import SmallGraph  # noqa: E402


def from_nx(h: nx.Graph) -> SmallGraph:
    return SmallGraph.from_edges(h.number_of_nodes(), h.edges())


@pytest.fixture(scope="session")
def atlas() -> list[SmallGraph]:
    """Every graph of order <= 7, one per isomorphism class (networkx graph atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g()]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, triangle_free: bool = False) -> SmallGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    for (i, j), keep in zip(pairs, chosen):
        if keep and not (triangle_free and adj[i] & adj[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SmallGraph(n, tuple(adj))


@st.composite
def relabelled(draw, g: SmallGraph) -> SmallGraph:
    perm = draw(st.permutations(list(range(g.n))))
    return g.relabel(perm)
