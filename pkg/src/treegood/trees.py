"""Trees, free-tree enumeration and exact tree containment."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cache

from .errors import PreconditionError
from .graph import Graph, bits

__all__ = [
    "Tree",
    "canonical_level_sequence",
    "contains_tree",
    "enumerate_trees",
    "is_star",
]


def _adjacency(order: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _bfs(adj: list[list[int]], root: int) -> tuple[list[int], list[int]]:
    parent = [-2] * len(adj)
    parent[root] = -1
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
                queue.append(w)
    return order, parent


@dataclass(frozen=True)
class Tree:
    """A tree on ``order`` vertices.

    ``degeneracy_order`` lists the vertices so that each one after the first
    has exactly one earlier neighbour, recorded in ``parent`` (``-1`` for the
    first vertex).
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    degeneracy_order: tuple[int, ...] = field(compare=False)
    parent: tuple[int, ...] = field(compare=False)
    max_degree: int = field(compare=False)

    @classmethod
    def from_edges(cls, order: int, edges, root: int = 0) -> Tree:
        if order < 1:
            raise PreconditionError("a tree has at least one vertex")
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        if len(edges) != order - 1 or len(set(edges)) != len(edges):
            raise ValueError(f"a tree on {order} vertices has exactly {order - 1} distinct edges")
        adj = _adjacency(order, edges)
        seq, parent = _bfs(adj, root)
        if len(seq) != order:
            raise ValueError("edge list is not connected")
        maxdeg = max((len(a) for a in adj), default=0)
        return cls(order, edges, tuple(seq), tuple(parent), maxdeg)

    @classmethod
    def from_parents(cls, parents) -> Tree:
        parents = list(parents)
        edges = [(v, p) for v, p in enumerate(parents) if p >= 0]
        root = next(v for v, p in enumerate(parents) if p < 0)
        return cls.from_edges(len(parents), edges, root=root)

    @classmethod
    def from_level_sequence(cls, levels) -> Tree:
        """Tree from a preorder depth list (the root has depth 0)."""
        edges = []
        last_at_depth: dict[int, int] = {}
        for i, d in enumerate(levels):
            if i and d >= 1:
                edges.append((last_at_depth[d - 1], i))
            last_at_depth[d] = i
        return cls.from_edges(len(levels), edges)

    @classmethod
    def path(cls, n: int) -> Tree:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, n: int) -> Tree:
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)

    def to_json(self) -> dict:
        return {"order": self.order, "parents": list(self.parent)}

    @classmethod
    def from_json(cls, doc: dict) -> Tree:
        tr = cls.from_parents(doc["parents"])
        if tr.order != doc["order"]:
            raise ValueError("order field disagrees with the parent array")
        return tr

    def name(self) -> str:
        if self.order <= 2 or self.max_degree <= 2:
            return f"P{self.order}"
        if self.max_degree == self.order - 1:
            return f"K1,{self.order - 1}"
        return "T" + "".join(map(str, canonical_level_sequence(self)))


def _rooted_code(adj: list[list[int]], root: int) -> tuple[int, ...]:
    def code(v: int, par: int) -> list[int]:
        kids = sorted((code(w, v) for w in adj[v] if w != par), reverse=True)
        out = [0]
        for k in kids:
            out.extend(d + 1 for d in k)
        return out

    return tuple(code(root, -1))


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def canonical_level_sequence(tr: Tree) -> tuple[int, ...]:
    """Canonical preorder depth sequence, rooted at the centre.

    Children are ordered by decreasing subtree code; a bicentral tree takes the
    larger of its two rootings, so equal sequences mean isomorphic trees.
    """
    adj = _adjacency(tr.order, tr.edges)
    return max(_rooted_code(adj, c) for c in _centers(adj))


@cache
def _trees_by_code(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    found = set()
    for levels in _trees_by_code(n - 1):
        base = Tree.from_level_sequence(levels)
        for v in range(n - 1):
            grown = Tree.from_edges(n, base.edges + ((v, n - 1),))
            found.add(canonical_level_sequence(grown))
    return tuple(sorted(found, reverse=True))


def enumerate_trees(n: int) -> list[Tree]:
    """All trees on ``n`` vertices, one per isomorphism class.

    Each tree is built from its canonical level sequence, so vertex 0 is a
    centre and the stored degeneracy order is a breadth-first order from it.
    """
    if n < 1:
        raise PreconditionError("trees need at least one vertex")
    return [Tree.from_level_sequence(code) for code in _trees_by_code(n)]


def is_star(tr: Tree) -> bool:
    if tr.order < 2:
        raise PreconditionError("is_star needs a tree on at least 2 vertices")
    return tr.max_degree == tr.order - 1


def _search_plan(tr: Tree):
    """Vertex order rooted at a maximum-degree vertex, plus leaf-sibling links."""
    deg = tr.degrees()
    root = max(range(tr.order), key=lambda v: (deg[v], -v))
    seq, parent = _bfs(_adjacency(tr.order, tr.edges), root)
    # sibling leaves are interchangeable, so their images are forced increasing
    prev_leaf = {}
    last_leaf_child: dict[int, int] = {}
    for v in seq[1:]:
        if deg[v] == 1:
            p = parent[v]
            if p in last_leaf_child:
                prev_leaf[v] = last_leaf_child[p]
            last_leaf_child[p] = v
    return seq, parent, deg, prev_leaf


def contains_tree(g: Graph, tr: Tree) -> dict[int, int] | None:
    """Exact search for a copy of ``tr`` in ``g``.

    Returns an injective map tree vertex -> host vertex preserving tree edges,
    or ``None`` when no copy exists.
    """
    n = tr.order
    if n > g.order:
        return None
    tdeg_sorted = sorted(tr.degrees(), reverse=True)
    hdeg = g.degrees()
    hdeg_sorted = sorted(hdeg, reverse=True)
    if any(t > h for t, h in zip(tdeg_sorted, hdeg_sorted)):
        return None
    if n == 1:
        return {0: 0}

    seq, parent, tdeg, prev_leaf = _search_plan(tr)
    need = {d: sum(1 << v for v in range(g.order) if hdeg[v] >= d) for d in set(tdeg)}
    image = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = seq[i]
        cand = g.rows[image[parent[v]]] & ~used & need[tdeg[v]]
        if v in prev_leaf:
            cand &= -1 << (image[prev_leaf[v]] + 1)
        for w in bits(cand):
            image[v] = w
            if place(i + 1, used | 1 << w):
                return True
        image[v] = -1
        return False

    root = seq[0]
    for w in bits(need[tdeg[root]]):
        image[root] = w
        if place(1, 1 << w):
            mapping = {v: image[v] for v in range(n)}
            assert all(g.has_edge(mapping[a], mapping[b]) for a, b in tr.edges)
            return mapping
    return None
