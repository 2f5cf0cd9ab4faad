import itertools

import networkx as nx
import pytest
from conftest import brute_clique, graph_from_index
from hypothesis import given, settings
from hypothesis import strategies as st

from treegood.coloring import BLUE
from treegood.constructions import construction_I
from treegood.errors import PreconditionError
from treegood.graph import (
    Graph,
    all_labeled_graphs,
    canonical_graph6,
    complement,
    contains_clique,
    from_graph6,
    graphs_up_to_iso,
    max_degree,
    min_degree,
    to_graph6,
)
from treegood.thresholds import Params


@st.composite
def graphs(draw, max_order=12):
    order = draw(st.integers(0, max_order))
    pairs = list(itertools.combinations(range(order), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(order, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_complement_examples():
    assert complement(Graph.complete(3)) == Graph.empty(3)
    c5 = complement(Graph.cycle(5))
    assert nx.is_isomorphic(nx.from_graph6_bytes(to_graph6(c5).encode()), nx.cycle_graph(5))
    assert sorted(complement(Graph.cycle(4)).edges()) == [(0, 2), (1, 3)]


def test_complement_involution_exhaustive_small():
    for order in range(7):
        for g in all_labeled_graphs(order):
            h = complement(g)
            assert complement(h) == g
            assert g.edge_count + h.edge_count == order * (order - 1) // 2


@given(graphs())
def test_complement_involution_sampled(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_degree_invariants(g):
    for v in range(g.order):
        assert g.degree(v) == len(g.neighbors(v))
        assert 0 <= g.degree(v) <= max(g.order - 1, 0)
        assert v not in g.neighbors(v)


def test_degree_examples():
    assert min_degree(Graph.complete(5)) == 4
    assert min_degree(Graph.path(4)) == 1
    assert max_degree(Graph.path(4)) == 2
    built = construction_I(Params(3, 3, 1, 9))
    assert min_degree(built.coloring.host) == 4


def test_degree_of_empty_graph_is_an_error():
    with pytest.raises(PreconditionError):
        min_degree(Graph.empty(0))
    with pytest.raises(PreconditionError):
        max_degree(Graph.empty(0))


def test_clique_examples():
    found = contains_clique(Graph.complete(4), 3)
    assert found is not None and len(found) == 3
    assert contains_clique(Graph.cycle(5), 3) is None
    blue = construction_I(Params(3, 3, 1, 9)).coloring.classes[BLUE]
    assert contains_clique(blue, 3) is None


@pytest.mark.parametrize("order", range(1, 7))
def test_clique_matches_brute_force_exhaustive(order):
    pairs = order * (order - 1) // 2
    for index in range(1 << pairs):
        g = graph_from_index(order, index)
        for m in range(1, 5):
            found = contains_clique(g, m)
            assert (found is not None) == brute_clique(g, m)
            if found is not None:
                assert len(found) == m
                assert all(g.has_edge(a, b) for a, b in itertools.combinations(found, 2))


@settings(max_examples=200)
@given(graphs(max_order=8), st.integers(1, 4))
def test_clique_matches_brute_force_order8(g, m):
    assert (contains_clique(g, m) is not None) == brute_clique(g, m)


@settings(max_examples=300)
@given(graphs(max_order=20))
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_graph6(ours) == g


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_graph6_known_strings():
    assert to_graph6(Graph.cycle(5)) == "Dhc"
    assert to_graph6(Graph.cycle(5), header=True) == ">>graph6<<Dhc"
    assert from_graph6(">>graph6<<Dhc") == Graph.cycle(5)
    big = Graph.path(70)
    assert from_graph6(to_graph6(big)) == big


def test_canonical_graph6_is_invariant_under_relabelling():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    for perm in itertools.permutations(range(5)):
        assert canonical_graph6(g.relabel(list(perm))) == canonical_graph6(g)


def test_graphs_up_to_iso_counts():
    # numbers of graphs on 1..5 vertices and connected graphs on 1..5 vertices
    assert [len(graphs_up_to_iso(k)) for k in range(1, 6)] == [1, 2, 4, 11, 34]
    assert [len(graphs_up_to_iso(k, connected=True)) for k in range(1, 6)] == [1, 1, 2, 6, 21]
