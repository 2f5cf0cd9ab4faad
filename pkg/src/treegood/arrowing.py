"""Exact arrowing decisions and small Ramsey numbers.

The decider colours host edges one at a time in a fixed order (edges sorted
by their larger endpoint, so small complete subgraphs close early) and
rejects a colour as soon as it completes the forbidden target of that
colour. Targets that are stars in disguise (K_{1,l}, a star tree, K_2) become
degree caps, checked in O(1). Cliques are checked on the common
neighbourhood of the new edge; trees by exact search on the component
touched by the new edge.

On complete hosts one sound symmetry cut is applied: vertex 0 must have the
largest degree in a designated colour class. Any valid colouring can be
relabelled to satisfy it, so no witness is lost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import EdgeColoring
from .errors import PreconditionError
from .graph import Graph, _clique_in, to_graph6
from .targets import Clique, Star, TreeTarget, spec_name, targets_to_json
from .trees import Tree, contains_tree

SCHEMA = "treegood.verdict/1"


@dataclass
class Verdict:
    """Outcome of one arrowing decision.

    ``arrows`` is ``None`` when the node or time budget ran out; the search
    state at that point is kept in ``frontier`` (colours of the edge prefix).
    """

    arrows: bool | None
    witness: EdgeColoring | None
    host: Graph
    targets: tuple
    nodes: int = 0
    elapsed: float = 0.0
    frontier: list[int] | None = None

    @property
    def status(self) -> str:
        if self.arrows is None:
            return "undecided"
        return "arrows" if self.arrows else "avoids"

    def to_json(self, timings: bool = True) -> dict:
        doc = {
            "schema": SCHEMA,
            "host": to_graph6(self.host),
            "targets": targets_to_json(self.targets),
            "status": self.status,
            "nodes": self.nodes,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "frontier": self.frontier,
        }
        if timings:
            doc["wall_time"] = self.elapsed
        return doc


class _OutOfBudget(Exception):
    pass


def _checker(target):
    """('cap', c) | ('clique', m) | ('tree', tree) | ('always', None)."""
    if target.order == 0:
        return ("always", None)
    if target.order == 1:
        return ("vertex", None)
    if isinstance(target, Star):
        return ("cap", target.ell - 1)
    if isinstance(target, Clique):
        return ("cap", 0) if target.m == 2 else ("clique", target.m)
    tr = target.tree
    if tr.max_degree == tr.order - 1:
        return ("cap", tr.order - 2)
    return ("tree", tr)


class _Search:
    def __init__(self, host: Graph, targets, symmetry: bool, budget_nodes, budget_secs):
        self.host = host
        self.k = len(targets)
        self.checks = [_checker(t) for t in targets]
        self.edges = sorted(host.edges(), key=lambda e: (e[1], e[0]))
        n = host.order
        self.adj = [[0] * n for _ in range(self.k)]
        self.deg = [[0] * n for _ in range(self.k)]
        self.remaining = host.degrees()
        self.assigned: list[int] = []
        self.caps = [chk[1] if chk[0] == "cap" else None for chk in self.checks]
        self.all_capped = all(c is not None for c in self.caps)
        self.sym = None
        if symmetry and host.is_complete() and n > 1:
            uncapped = [c for c in range(self.k) if self.caps[c] is None]
            self.sym = uncapped[-1] if uncapped else max(range(self.k), key=lambda c: self.caps[c])
        self.nodes = 0
        self.budget_nodes = budget_nodes
        self.deadline = None if budget_secs is None else time.monotonic() + budget_secs

    def _allowed(self, c: int, u: int, v: int) -> bool:
        kind, arg = self.checks[c]
        if kind == "cap":
            return self.deg[c][u] < arg and self.deg[c][v] < arg
        if kind == "clique":
            adj = self.adj[c]
            return _clique_in(adj, adj[u] & adj[v], arg - 2) is None
        # tree: look only at the component that the new edge would join
        adj = self.adj[c]
        comp = frontier = (1 << u) | (1 << v)
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                w = low.bit_length() - 1
                frontier ^= low
                nxt |= adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        if comp.bit_count() < arg.order:
            return True
        sub_rows = []
        labels = [w for w in range(self.host.order) if comp >> w & 1]
        index = {w: i for i, w in enumerate(labels)}
        for w in labels:
            row = 0
            for x in labels:
                if adj[w] >> x & 1 or (w, x) in ((u, v), (v, u)):
                    row |= 1 << index[x]
            sub_rows.append(row)
        return contains_tree(Graph(len(labels), tuple(sub_rows)), arg) is None

    def _set(self, c: int, u: int, v: int, on: bool) -> None:
        bit_u, bit_v = 1 << u, 1 << v
        step = 1 if on else -1
        self.adj[c][u] ^= bit_v
        self.adj[c][v] ^= bit_u
        self.deg[c][u] += step
        self.deg[c][v] += step

    def _forward_ok(self, u: int, v: int) -> bool:
        if self.all_capped:
            for w in (u, v):
                room = sum(cap - d[w] for cap, d in zip(self.caps, self.deg))
                if room < self.remaining[w]:
                    return False
        s = self.sym
        if s is not None:
            ceiling = self.deg[s][0] + self.remaining[0]
            if max(self.deg[s][1:]) > ceiling:
                return False
        return True

    def run(self) -> bool:
        self.nodes += 1
        if self.budget_nodes is not None and self.nodes > self.budget_nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget
        i = len(self.assigned)
        if i == len(self.edges):
            return True
        u, v = self.edges[i]
        self.remaining[u] -= 1
        self.remaining[v] -= 1
        for c in range(self.k):
            if not self._allowed(c, u, v):
                continue
            self._set(c, u, v, True)
            self.assigned.append(c)
            if self._forward_ok(u, v) and self.run():
                return True
            self.assigned.pop()
            self._set(c, u, v, False)
        self.remaining[u] += 1
        self.remaining[v] += 1
        return False

    def witness(self) -> EdgeColoring:
        class_edges = [[] for _ in range(self.k)]
        for (u, v), c in zip(self.edges, self.assigned):
            class_edges[c].append((u, v))
        return EdgeColoring.from_class_edges(self.host.order, class_edges, host=self.host)


def decide(host: Graph, targets, budget_nodes: int | None = None, budget_secs: float | None = None,
           symmetry: bool = True) -> Verdict:
    """Does every colouring of ``host`` with ``len(targets)`` colours contain target ``i`` in colour ``i``?"""
    targets = tuple(targets)
    if len(targets) not in (2, 3):
        raise PreconditionError("only 2 or 3 colours are supported")
    start = time.monotonic()
    checks = [_checker(t) for t in targets]
    if any(kind == "always" for kind, _ in checks) or (host.order and any(kind == "vertex" for kind, _ in checks)):
        return Verdict(True, None, host, targets, 0, time.monotonic() - start)
    search = _Search(host, targets, symmetry, budget_nodes, budget_secs)
    try:
        found = search.run()
    except _OutOfBudget:
        return Verdict(None, None, host, targets, search.nodes, time.monotonic() - start, list(search.assigned))
    elapsed = time.monotonic() - start
    if found:
        witness = search.witness()
        assert verify_witness(witness, targets), "search produced an invalid witness"
        return Verdict(False, witness, host, targets, search.nodes, elapsed)
    return Verdict(True, None, host, targets, search.nodes, elapsed)


def arrows_2(g: Graph, tr: Tree, m: int, **budget) -> Verdict:
    """Whether every red/blue colouring of ``g`` has a red ``tr`` or a blue K_m."""
    return decide(g, (TreeTarget(tr), Clique(m)), **budget)


def arrows_3_star(N: int, ell: int, tr: Tree, m: int, **budget) -> Verdict:
    """Whether K_N -> (K_{1,ell}, tr, K_m) with colours red, blue, green."""
    return decide(Graph.complete(N), (Star(ell), TreeTarget(tr), Clique(m)), **budget)


def verify_witness(c: EdgeColoring, targets) -> bool:
    """Independent check that colour class ``i`` of ``c`` has no copy of ``targets[i]``.

    Uses only the containment oracles (maximum degree, clique search, tree
    search); nothing from the arrowing search.
    """
    targets = tuple(targets)
    if c.palette != len(targets):
        raise PreconditionError(f"palette size {c.palette} != {len(targets)} targets")
    return not any(t.found_in(cls) for t, cls in zip(targets, c.classes))


@dataclass
class RamseyResult:
    """Least N with K_N arrowing ``targets``, or a bracket [lower, upper] if undecided."""

    targets: tuple
    value: int | None
    lower: int
    upper: int | None
    witness: EdgeColoring | None
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "decided" if self.value is not None else "undecided"

    @property
    def nodes(self) -> int:
        return sum(v.nodes for v in self.verdicts)

    def to_json(self, timings: bool = True) -> dict:
        return {
            "schema": "treegood.ramsey/1",
            "targets": targets_to_json(self.targets),
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "steps": [
                {"N": v.host.order, "status": v.status, "nodes": v.nodes, **({"wall_time": v.elapsed} if timings else {})}
                for v in self.verdicts
            ],
        }


def ramsey(targets, start: int = 1, max_N: int | None = None, lower_witness: EdgeColoring | None = None,
           upper_hint: int | None = None, **budget) -> RamseyResult:
    """Grow N from ``start`` until K_N arrows ``targets``.

    A ``lower_witness`` (a colouring of K_{N0} avoiding the targets) is
    re-verified and lets the search start at N0 + 1. ``upper_hint`` is only
    reported as the upper end of the bracket when the search runs out of
    budget; it is never used as a result.
    """
    targets = tuple(targets)
    witness = None
    if lower_witness is not None:
        if not lower_witness.host.is_complete() or not verify_witness(lower_witness, targets):
            raise PreconditionError("lower-bound witness does not avoid the targets on a complete host")
        witness = lower_witness
        start = max(start, lower_witness.order + 1)
    verdicts = []
    N = start
    while max_N is None or N <= max_N:
        verdict = decide(Graph.complete(N), targets, **budget)
        verdicts.append(verdict)
        if verdict.arrows is None:
            return RamseyResult(targets, None, N, upper_hint, witness, verdicts)
        if verdict.arrows:
            return RamseyResult(targets, N, N, N, witness, verdicts)
        witness = verdict.witness
        N += 1
    return RamseyResult(targets, None, N, upper_hint, witness, verdicts)


def ramsey_2(first, second, **kwargs) -> RamseyResult:
    return ramsey((first, second), **kwargs)


def ramsey_3(ell: int, tr: Tree, m: int, **kwargs) -> RamseyResult:
    return ramsey((Star(ell), TreeTarget(tr), Clique(m)), **kwargs)


def describe(result: RamseyResult) -> str:
    name = spec_name(result.targets)
    if result.value is not None:
        return f"r{name} = {result.value}"
    hi = "?" if result.upper is None else result.upper
    return f"r{name} in [{result.lower}, {hi}] (undecided)"


__all__ = [
    "RamseyResult",
    "Verdict",
    "arrows_2",
    "arrows_3_star",
    "decide",
    "describe",
    "ramsey",
    "ramsey_2",
    "ramsey_3",
    "verify_witness",
]
