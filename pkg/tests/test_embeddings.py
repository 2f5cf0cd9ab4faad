import itertools
import random

import pytest
from conftest import brute_tree_embeds, graph_from_index
from hypothesis import given, settings
from hypothesis import strategies as st

from treegood.coloring import BLUE, GREEN, RED, EdgeColoring
from treegood.embeddings import (
    Embedding,
    exact_embed,
    greedy_embed,
    lemma32_check,
    lemma32_sample,
    lemma32_sweep,
    random_connected_host,
)
from treegood.errors import GreedyStuck, PreconditionError
from treegood.graph import Graph, complement, graphs_up_to_iso, max_degree, min_degree
from treegood.trees import Tree, enumerate_trees, is_star


def sparse_graphs(order, max_deg):
    """Every labelled graph on ``order`` vertices with maximum degree <= ``max_deg``."""
    pairs = list(itertools.combinations(range(order), 2))
    deg = [0] * order
    chosen = []

    def go(i):
        if i == len(pairs):
            yield Graph.from_edges(order, chosen)
            return
        yield from go(i + 1)
        u, v = pairs[i]
        if deg[u] < max_deg and deg[v] < max_deg:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from go(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from go(0)


def dense_hosts(order, min_deg):
    for h in sparse_graphs(order, order - 1 - min_deg):
        yield complement(h)


def test_greedy_examples():
    emb = greedy_embed(Graph.complete(3), Tree.path(3))
    assert sorted(emb.mapping) == [0, 1, 2]
    for n in range(1, 8):
        for tr in enumerate_trees(n):
            emb = greedy_embed(Graph.complete(n), tr)
            assert len(set(emb.mapping)) == n


@pytest.mark.parametrize("order", range(1, 8))
def test_greedy_always_succeeds_under_its_precondition(order):
    # all labelled hosts with min degree >= n-1 and every tree with n <= order;
    # at order 7 the sparse-host cases n <= 3 are left to the sampled test below
    low = 4 if order == 7 else 1
    for n in range(low, order + 1):
        trees = enumerate_trees(n)
        for g in dense_hosts(order, n - 1):
            assert min_degree(g) >= n - 1
            for tr in trees:
                emb = greedy_embed(g, tr)
                assert all(g.has_edge(a, b) for a, b in emb.image_edges())


def test_greedy_on_order_seven_sparse_trees_sampled():
    # the n <= 3 cases at order 7 are covered by sampling hosts with min degree >= n-1
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 3)
        g = random_connected_host(7, n - 1, rng)
        for tr in enumerate_trees(n):
            greedy_embed(g, tr)


def test_greedy_reports_unmet_precondition():
    with pytest.raises(GreedyStuck) as info:
        greedy_embed(Graph.path(3), Tree.star(3))
    assert info.value.precondition_met is False


def test_greedy_in_blue_class_of_three_colouring(rng):
    # K9 coloured with red max degree <= 2 and no green at a chosen vertex set; blue then has min degree >= 2
    hits = 0
    for _ in range(200):
        order = 9
        keep_off = set(rng.sample(range(order), 4))
        colours = {}
        red_deg = [0] * order
        for u, v in itertools.combinations(range(order), 2):
            options = [BLUE]
            if red_deg[u] < 2 and red_deg[v] < 2:
                options.append(RED)
            if u not in keep_off and v not in keep_off:
                options.append(GREEN)
            c = rng.choice(options)
            if c == RED:
                red_deg[u] += 1
                red_deg[v] += 1
            colours[(u, v)] = c
        col = EdgeColoring.from_map(Graph.complete(order), 3, colours)
        blue = col.classes[BLUE]
        assert max_degree(col.classes[RED]) <= 2
        if min_degree(blue) >= 2:
            hits += 1
            emb = greedy_embed(blue, Tree.path(3))
            assert all(blue.has_edge(a, b) for a, b in emb.image_edges())
    assert hits > 0


def test_embedding_invariants():
    g = Graph.path(3)
    tr = Tree.path(3)
    Embedding(tr, g, (0, 1, 2))
    with pytest.raises(ValueError):
        Embedding(tr, g, (0, 0, 1))
    with pytest.raises(ValueError):
        Embedding(tr, g, (0, 2, 1))
    assert Embedding(tr, g, (2, 1, 0)).to_json() == [2, 1, 0]


def test_exact_examples():
    assert exact_embed(Graph.cycle(5), Tree.path(5)) is not None
    assert exact_embed(Graph.complete_multipartite([2, 3]), Tree.path(6)) is None
    assert exact_embed(Graph.complete_multipartite([2, 3]), Tree.path(5)) is not None


@pytest.mark.parametrize("order", range(1, 7))
def test_exact_matches_brute_force(order):
    trees = [tr for n in range(2, order + 1) for tr in enumerate_trees(n)]
    hosts = (
        [graph_from_index(order, i) for i in range(1 << (order * (order - 1) // 2))]
        if order <= 5
        else graphs_up_to_iso(order)
    )
    for g in hosts:
        for tr in trees:
            emb = exact_embed(g, tr)
            assert (emb is not None) == brute_tree_embeds(g, tr)


def test_lemma32_examples():
    assert lemma32_check(Graph.cycle(4), Tree.path(4))
    k4_minus = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    result = lemma32_check(k4_minus, Tree.path(4))
    assert result and result.embedding is not None


def test_lemma32_names_the_violated_clause():
    with pytest.raises(PreconditionError, match="connected"):
        lemma32_check(Graph.empty(4), Tree.path(4))
    with pytest.raises(PreconditionError, match="order"):
        lemma32_check(Graph.complete(3), Tree.path(4))
    with pytest.raises(PreconditionError, match="minimum degree"):
        lemma32_check(Graph.path(5), Tree.path(5))
    with pytest.raises(PreconditionError, match="star"):
        lemma32_check(Graph.complete(4), Tree.star(4))


def test_lemma32_exhaustive_order_six():
    hosts, instances = lemma32_sweep(6)
    assert hosts >= 1 and instances == hosts * sum(1 for tr in enumerate_trees(6) if not is_star(tr))
    for g in graphs_up_to_iso(6, min_deg=4, connected=True):
        for tr in enumerate_trees(6):
            if not is_star(tr):
                assert exact_embed(g, tr) is not None


@pytest.mark.parametrize("order", range(4, 7))
def test_lemma32_exhaustive_smaller_trees(order):
    for n in range(4, order + 1):
        lemma32_sweep(order, n)


@pytest.mark.parametrize("order", (7, 8))
def test_lemma32_sampled(order):
    for n in range(4, order + 1):
        assert lemma32_sample(order, n, 20, random.Random(order * 100 + n)) > 0


@settings(max_examples=50, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10**6))
def test_random_host_meets_its_contract(order, seed):
    r = random.Random(seed)
    d = r.randint(0, order - 1)
    g = random_connected_host(order, d, r)
    assert g.is_connected() and min_degree(g) >= d
