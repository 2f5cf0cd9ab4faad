"""Total edge colourings of a host graph with two or three colours."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, from_graph6, to_graph6

RED, BLUE, GREEN = 0, 1, 2
COLOR_NAMES = ("red", "blue", "green")

SCHEMA = "treegood.coloring/1"


@dataclass(frozen=True)
class EdgeColoring:
    """Colour classes partitioning the edges of ``host``.

    Class ``c`` is a spanning subgraph of the host; every host edge lies in
    exactly one class.
    """

    host: Graph
    classes: tuple[Graph, ...]

    def __post_init__(self):
        if len(self.classes) not in (2, 3):
            raise ValueError("palette size must be 2 or 3")
        seen = [0] * self.host.order
        for cls in self.classes:
            if cls.order != self.host.order:
                raise ValueError("colour class order differs from host order")
            for v, row in enumerate(cls.rows):
                if row & seen[v]:
                    raise ValueError(f"vertex {v} has an edge in two colour classes")
                seen[v] |= row
        if tuple(seen) != self.host.rows:
            raise PreconditionError("colour classes do not cover exactly the host edges")

    @property
    def palette(self) -> int:
        return len(self.classes)

    @property
    def order(self) -> int:
        return self.host.order

    @classmethod
    def from_map(cls, host: Graph, palette: int, colors: Mapping[tuple[int, int], int]) -> EdgeColoring:
        """Build from an edge -> colour map; every host edge must be coloured."""
        edges: list[list[tuple[int, int]]] = [[] for _ in range(palette)]
        for u, v in host.edges():
            c = colors.get((u, v), colors.get((v, u)))
            if c is None:
                raise PreconditionError(f"edge ({u}, {v}) has no colour")
            if not 0 <= c < palette:
                raise ValueError(f"colour {c} outside palette of size {palette}")
            edges[c].append((u, v))
        if len(colors) != host.edge_count:
            raise PreconditionError("colour map mentions pairs that are not host edges")
        return cls(host, tuple(Graph.from_edges(host.order, e) for e in edges))

    @classmethod
    def from_class_edges(cls, order: int, class_edges, host: Graph | None = None) -> EdgeColoring:
        classes = tuple(Graph.from_edges(order, e) for e in class_edges)
        if host is None:
            rows = [0] * order
            for g in classes:
                rows = [a | b for a, b in zip(rows, g.rows)]
            host = Graph(order, tuple(rows))
        return cls(host, classes)

    def color(self, u: int, v: int) -> int | None:
        for c, g in enumerate(self.classes):
            if g.has_edge(u, v):
                return c
        return None

    def color_map(self) -> dict[tuple[int, int], int]:
        return {e: c for c, g in enumerate(self.classes) for e in g.edges()}

    def to_json(self) -> dict:
        names = COLOR_NAMES[: self.palette]
        return {
            "schema": SCHEMA,
            "order": self.order,
            "host": to_graph6(self.host),
            "palette": list(names),
            "classes": {name: [list(e) for e in g.edges()] for name, g in zip(names, self.classes)},
        }

    @classmethod
    def from_json(cls, doc: dict) -> EdgeColoring:
        host = from_graph6(doc["host"])
        class_edges = [[tuple(e) for e in doc["classes"][name]] for name in doc["palette"]]
        return cls.from_class_edges(doc["order"], class_edges, host=host)
