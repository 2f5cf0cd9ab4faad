"""Simple undirected graphs on vertices ``0..order-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
containment searches and the arrowing kernel cheap at the sizes this package
works with (a few dozen vertices at most).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations, product

from .errors import PreconditionError

__all__ = [
    "Graph",
    "all_labeled_graphs",
    "bits",
    "canonical_graph6",
    "complement",
    "contains_clique",
    "from_graph6",
    "graphs_up_to_iso",
    "max_degree",
    "min_degree",
    "to_graph6",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.rows) != self.order:
            raise ValueError("rows must have one bitmask per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for w in bits(row):
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(order, tuple(full & ~(1 << v) for v in range(order)))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def cycle(cls, order: int) -> Graph:
        if order < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(order, ((i, (i + 1) % order) for i in range(order)))

    @classmethod
    def path(cls, order: int) -> Graph:
        return cls.from_edges(order, ((i, i + 1) for i in range(order - 1)))

    @classmethod
    def complete_multipartite(cls, sizes: Iterable[int]) -> Graph:
        sizes = list(sizes)
        order = sum(sizes)
        edges = []
        start = 0
        for size in sizes:
            block = range(start, start + size)
            edges.extend((u, v) for u in block for v in range(start + size, order))
            start += size
        return cls.from_edges(order, edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_complete(self) -> bool:
        return self.edge_count == self.order * (self.order - 1) // 2

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old labels."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        rows = []
        for v in labels:
            row = 0
            for w in bits(self.rows[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(labels), tuple(rows)), labels

    def component_masks(self) -> list[int]:
        seen = 0
        comps = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.rows[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def components(self) -> list[list[int]]:
        return [list(bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.component_masks()) == 1

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.order
        for v, row in enumerate(self.rows):
            out = 0
            for w in bits(row):
                out |= 1 << perm[w]
            rows[perm[v]] = out
        return Graph(self.order, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise PreconditionError("minimum degree of the null graph is undefined")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.order == 0:
        raise PreconditionError("maximum degree of the null graph is undefined")
    return max(g.degrees())


def _clique_in(rows: tuple[int, ...] | list[int], candidates: int, size: int) -> list[int] | None:
    if size == 0:
        return []
    if candidates.bit_count() < size:
        return None
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        # only later candidates: each clique is found from its lowest vertex
        rest = _clique_in(rows, candidates & rows[v], size - 1)
        if rest is not None:
            return [v, *rest]
        if candidates.bit_count() < size:
            return None
    return None


def contains_clique(g: Graph, m: int) -> frozenset[int] | None:
    """Return the vertex set of some ``K_m`` in ``g``, or ``None`` if there is none."""
    if m < 1:
        raise PreconditionError("clique order must be at least 1")
    found = _clique_in(g.rows, (1 << g.order) - 1, m)
    if found is None:
        return None
    assert all(g.has_edge(u, v) for u, v in combinations(found, 2))
    return frozenset(found)


# graph6, as described in the nauty/Traces formats document.

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    out = [">>graph6<<"] if header else []
    out.append(_encode_n(g.order))
    bitlist = [g.rows[i] >> j & 1 for j in range(1, g.order) for i in range(j)]
    bitlist.extend([0] * (-len(bitlist) % 6))
    for k in range(0, len(bitlist), 6):
        chunk = bitlist[k:k + 6]
        out.append(chr(sum(b << (5 - i) for i, b in enumerate(chunk)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    text = text.removeprefix(">>graph6<<")
    data = [ord(ch) - 63 for ch in text]
    if any(not 0 <= x <= 63 for x in data):
        raise ValueError("graph6 string contains characters outside '?'..'~'")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 63:
        n, data = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        data = data[8:]
    else:
        n = 0
        for x in data[1:4]:
            n = n << 6 | x
        data = data[4:]
    nbits = n * (n - 1) // 2
    if len(data) != -(-nbits // 6):
        raise ValueError(f"graph6 body has {len(data)} bytes, expected {-(-nbits // 6)}")
    stream = [x >> (5 - i) & 1 for x in data for i in range(6)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def canonical_graph6(g: Graph) -> str:
    """Lexicographically least graph6 string over degree-sorted relabellings.

    Vertices are placed in order of (degree, neighbour degree multiset) and
    only ties are permuted, which keeps the form isomorphism-invariant.
    Still exponential on regular graphs, so only meant for order <= 7.
    """
    deg = g.degrees()
    key = {v: (deg[v], tuple(sorted(deg[w] for w in bits(g.rows[v])))) for v in range(g.order)}
    groups: dict[tuple, list[int]] = {}
    for v in sorted(range(g.order), key=key.__getitem__):
        groups.setdefault(key[v], []).append(v)
    # graph6 lists the upper triangle column by column, so comparing these
    # bit strings orders candidates exactly as their graph6 strings would
    rows = g.rows
    n = g.order
    best = None
    best_order = None
    for choice in product(*(permutations(members) for members in groups.values())):
        order = [v for block in choice for v in block]
        code = 0
        for j in range(1, n):
            row = rows[order[j]]
            for i in range(j):
                code = (code << 1) | (row >> order[i] & 1)
        if best is None or code < best:
            best, best_order = code, order
    if best_order is None:
        return to_graph6(g)
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return to_graph6(g.relabel(perm))


def all_labeled_graphs(order: int) -> Iterator[Graph]:
    pairs = list(combinations(range(order), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(order, (pairs[i] for i in bits(mask)))


def graphs_up_to_iso(order: int, min_deg: int = 0, connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class, filtered by minimum degree and connectivity.

    Labelled enumeration followed by canonical-form dedup; fine up to order 6,
    slow but workable at 7 when ``min_deg`` prunes hard. Results are cached.
    """
    return list(_graphs_up_to_iso(order, min_deg, connected))


@cache
def _graphs_up_to_iso(order: int, min_deg: int, connected: bool) -> tuple[Graph, ...]:
    seen: dict[str, Graph] = {}
    for g in all_labeled_graphs(order):
        if order and min(g.degrees()) < min_deg:
            continue
        if connected and not g.is_connected():
            continue
        key = canonical_graph6(g)
        if key not in seen:
            seen[key] = from_graph6(key)
    return tuple(seen[k] for k in sorted(seen))
