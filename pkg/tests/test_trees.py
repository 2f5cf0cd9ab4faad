import itertools
import random

import pytest
from conftest import brute_tree_embeds, graph_from_index
from hypothesis import given, settings
from hypothesis import strategies as st

from treegood.coloring import BLUE, RED
from treegood.constructions import star_tree_witness
from treegood.errors import PreconditionError
from treegood.graph import Graph, graphs_up_to_iso
from treegood.trees import (
    Tree,
    canonical_level_sequence,
    contains_tree,
    enumerate_trees,
    is_star,
)


def prufer_edges(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def ahu_all_roots(n, edges):
    """Isomorphism-invariant key: the smallest AHU parenthesis string over the centres."""
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    def enc(v, parent):
        return "(" + "".join(sorted(enc(w, v) for w in adj[v] if w != parent)) + ")"

    # peel leaves until one or two vertices remain
    remaining = set(range(n))
    deg = {v: len(adj[v]) for v in adj}
    while len(remaining) > 2:
        leaves = [v for v in remaining if deg[v] <= 1]
        for v in leaves:
            remaining.discard(v)
            for w in adj[v]:
                deg[w] -= 1
    return min(enc(r, -1) for r in remaining)


def prufer_count(n):
    if n <= 2:
        return 1
    keys = {ahu_all_roots(n, prufer_edges(seq, n)) for seq in itertools.product(range(n), repeat=n - 2)}
    return len(keys)


def test_counts_match_prufer_oracle():
    expected = [1, 1, 1, 2, 3, 6, 11, 23]
    assert [prufer_count(n) for n in range(1, 9)] == expected
    assert [len(enumerate_trees(n)) for n in range(1, 9)] == expected


def test_counts_beyond_eight():
    assert [len(enumerate_trees(n)) for n in (9, 10)] == [47, 106]


def test_enumeration_errors():
    with pytest.raises(PreconditionError):
        enumerate_trees(0)


def test_small_enumerations():
    (p3,) = enumerate_trees(3)
    assert canonical_level_sequence(p3) == canonical_level_sequence(Tree.path(3))
    four = enumerate_trees(4)
    assert len(four) == 2
    assert {is_star(t) for t in four} == {True, False}


@pytest.mark.parametrize("n", range(1, 10))
def test_tree_invariants(n):
    keys = set()
    for tr in enumerate_trees(n):
        assert len(tr.edges) == n - 1
        assert tr.as_graph().is_connected()
        order = tr.degeneracy_order
        assert sorted(order) == list(range(n))
        position = {v: i for i, v in enumerate(order)}
        g = tr.as_graph()
        for i, v in enumerate(order[1:], start=1):
            assert sum(1 for w in g.neighbors(v) if position[w] < i) == 1
        assert tr.max_degree == max(tr.degrees(), default=0)
        if n >= 3:
            assert is_star(tr) == (tr.max_degree == n - 1)
        keys.add(ahu_all_roots(n, tr.edges))
    assert len(keys) == len(enumerate_trees(n))


def test_is_star_examples():
    assert is_star(Tree.star(4))
    assert not is_star(Tree.path(4))
    assert is_star(Tree.path(3))
    with pytest.raises(PreconditionError):
        is_star(Tree.path(1))


def test_canonical_form_ignores_labels():
    tr = Tree.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)])
    for perm in itertools.permutations(range(6)):
        relabelled = Tree.from_edges(6, [(perm[a], perm[b]) for a, b in tr.edges])
        assert canonical_level_sequence(relabelled) == canonical_level_sequence(tr)


def test_json_roundtrip():
    for tr in enumerate_trees(7):
        back = Tree.from_json(tr.to_json())
        assert back == tr
        assert tr.to_json()["parents"][0] == -1


def test_contains_tree_examples():
    c4 = Graph.cycle(4)
    emb = contains_tree(c4, Tree.path(4))
    assert emb is not None
    assert all(c4.has_edge(emb[a], emb[b]) for a, b in Tree.path(4).edges)
    assert contains_tree(c4, Tree.star(4)) is None
    w = star_tree_witness(3, 1).coloring
    assert contains_tree(w.classes[RED], Tree.path(3)) is not None
    assert contains_tree(w.classes[BLUE], Tree.path(3)) is None


def _hosts(order):
    # every labelled graph up to order 5; at order 6 one representative per class, randomly relabelled
    if order <= 5:
        pairs = order * (order - 1) // 2
        return [graph_from_index(order, index) for index in range(1 << pairs)]
    rng = random.Random(order)
    hosts = []
    for g in graphs_up_to_iso(order):
        perm = list(range(order))
        rng.shuffle(perm)
        hosts.append(g.relabel(perm))
    return hosts


@pytest.mark.parametrize("order", range(1, 7))
def test_contains_tree_matches_brute_force(order):
    trees = [tr for n in range(1, min(order, 5) + 1) for tr in enumerate_trees(n)]
    for g in _hosts(order):
        for tr in trees:
            found = contains_tree(g, tr)
            assert (found is not None) == brute_tree_embeds(g, tr), (g.edges(), tr.edges)
            if found is not None:
                assert len(set(found.values())) == tr.order
                assert all(g.has_edge(found[a], found[b]) for a, b in tr.edges)


@settings(max_examples=60, deadline=None)
@given(st.integers(7, 9), st.integers(0, 2**36 - 1), st.integers(4, 7), st.data())
def test_contains_tree_larger_hosts(order, index, n, data):
    pairs = order * (order - 1) // 2
    g = graph_from_index(order, index % (1 << pairs))
    trees = enumerate_trees(n)
    tr = trees[data.draw(st.integers(0, len(trees) - 1))]
    assert (contains_tree(g, tr) is not None) == brute_tree_embeds(g, tr)
