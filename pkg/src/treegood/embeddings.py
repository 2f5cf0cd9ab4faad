"""Embedding trees into host graphs.

``greedy_embed`` is the one-pass placement along a 1-degenerate order that
always works when the host minimum degree is at least n - 1.
``exact_embed`` is complete backtracking and serves as the oracle for the
minimum-degree n - 2 embedding lemma for non-star trees, which
``lemma32_check`` tests instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CounterexampleFound, GreedyStuck, PreconditionError
from .graph import Graph, graphs_up_to_iso, min_degree, to_graph6
from .trees import Tree, contains_tree, enumerate_trees, is_star


@dataclass(frozen=True)
class Embedding:
    tree: Tree
    host: Graph
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.tree.order:
            raise ValueError("mapping must cover every tree vertex")
        if len(set(self.mapping)) != len(self.mapping):
            raise ValueError("embedding is not injective")
        if any(not 0 <= w < self.host.order for w in self.mapping):
            raise ValueError("embedding image outside host")
        for a, b in self.tree.edges:
            if not self.host.has_edge(self.mapping[a], self.mapping[b]):
                raise ValueError(f"tree edge ({a}, {b}) is not mapped onto a host edge")

    @classmethod
    def from_dict(cls, tree: Tree, host: Graph, mapping: dict[int, int]) -> Embedding:
        return cls(tree, host, tuple(mapping[v] for v in range(tree.order)))

    def image_edges(self) -> list[tuple[int, int]]:
        return [(self.mapping[a], self.mapping[b]) for a, b in self.tree.edges]

    def to_json(self) -> list[int]:
        return list(self.mapping)


def greedy_embed(g: Graph, tr: Tree) -> Embedding:
    """Place the tree vertex by vertex, each on the lowest free neighbour of its parent's image.

    Raises :class:`GreedyStuck` when no free neighbour is left; its
    ``precondition_met`` flag is true only if that happened despite
    ``min_degree(g) >= n - 1``, which would be a bug.
    """
    n = tr.order
    pre = g.order >= n and (g.order == 0 or min_degree(g) >= n - 1)
    if g.order == 0:
        raise GreedyStuck("empty host", precondition_met=False)
    image = [-1] * n
    first = tr.degeneracy_order[0]
    image[first] = 0
    used = 1
    for v in tr.degeneracy_order[1:]:
        free = g.rows[image[tr.parent[v]]] & ~used
        if not free:
            raise GreedyStuck(
                f"no free neighbour for tree vertex {v} (parent image {image[tr.parent[v]]})",
                precondition_met=pre,
            )
        w = (free & -free).bit_length() - 1
        image[v] = w
        used |= 1 << w
    return Embedding(tr, g, tuple(image))


def exact_embed(g: Graph, tr: Tree) -> Embedding | None:
    found = contains_tree(g, tr)
    if found is None:
        return None
    return Embedding.from_dict(tr, g, found)


@dataclass(frozen=True)
class Lemma32Result:
    holds: bool
    embedding: Embedding | None

    def __bool__(self) -> bool:
        return self.holds


def lemma32_check(g: Graph, tr: Tree) -> Lemma32Result:
    """Check one instance of: connected host, order >= n, min degree >= n-2, non-star tree embeds."""
    n = tr.order
    if not g.is_connected():
        raise PreconditionError("host must be connected")
    if g.order < n:
        raise PreconditionError(f"host order {g.order} < tree order {n}")
    if min_degree(g) < n - 2:
        raise PreconditionError(f"host minimum degree {min_degree(g)} < n-2 = {n - 2}")
    if is_star(tr):
        raise PreconditionError("tree must not be a star")
    emb = exact_embed(g, tr)
    return Lemma32Result(emb is not None, emb)


def lemma32_counterexample(g: Graph, tr: Tree) -> dict:
    return {"host": to_graph6(g), "tree": tr.to_json()}


def lemma32_sweep(order: int, n: int | None = None) -> tuple[int, int]:
    """Check every connected host of ``order`` with min degree >= n-2 against every non-star tree on n vertices.

    ``n`` defaults to ``order``. Returns (hosts checked, instances checked);
    raises :class:`CounterexampleFound` on the first failure.
    """
    n = order if n is None else n
    trees = [tr for tr in enumerate_trees(n) if not is_star(tr)]
    hosts = graphs_up_to_iso(order, min_deg=max(n - 2, 0), connected=True)
    instances = 0
    for g in hosts:
        for tr in trees:
            instances += 1
            if not lemma32_check(g, tr):
                raise CounterexampleFound("non-star tree fails to embed", lemma32_counterexample(g, tr))
    return len(hosts), instances


def random_connected_host(order: int, min_deg: int, rng) -> Graph:
    """Random connected graph with minimum degree >= ``min_deg`` (edge deletion from K_order)."""
    rows = [((1 << order) - 1) & ~(1 << v) for v in range(order)]
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    rng.shuffle(pairs)
    target = rng.randint(0, len(pairs))
    removed = 0
    for u, v in pairs:
        if removed >= target:
            break
        if rows[u].bit_count() > min_deg and rows[v].bit_count() > min_deg:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            g = Graph(order, tuple(rows))
            if not g.is_connected():
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                continue
            removed += 1
    return Graph(order, tuple(rows))


def lemma32_sample(order: int, n: int, samples: int, rng) -> int:
    """Seeded sampling version of :func:`lemma32_sweep` for orders beyond exhaustive reach."""
    trees = [tr for tr in enumerate_trees(n) if not is_star(tr)]
    for _ in range(samples):
        g = random_connected_host(order, n - 2, rng)
        for tr in trees:
            if not lemma32_check(g, tr):
                raise CounterexampleFound("non-star tree fails to embed", lemma32_counterexample(g, tr))
    return samples * len(trees)


__all__ = [
    "Embedding",
    "Lemma32Result",
    "exact_embed",
    "greedy_embed",
    "lemma32_check",
    "lemma32_sample",
    "lemma32_sweep",
    "random_connected_host",
]
