import itertools

import pytest

from treegood.graph import Graph


def brute_tree_embeds(g: Graph, tr) -> bool:
    """Oracle: try every injective map of tree vertices into host vertices."""
    for image in itertools.permutations(range(g.order), tr.order):
        if all(g.has_edge(image[a], image[b]) for a, b in tr.edges):
            return True
    return False


def brute_clique(g: Graph, m: int) -> bool:
    return any(
        all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
        for s in itertools.combinations(range(g.order), m)
    )


def graph_from_index(order: int, index: int) -> Graph:
    pairs = list(itertools.combinations(range(order), 2))
    return Graph.from_edges(order, [p for i, p in enumerate(pairs) if index >> i & 1])


@pytest.fixture
def rng():
    import random

    return random.Random(12345)
