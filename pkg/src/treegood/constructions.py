"""Extremal colourings and the checks behind their claimed properties.

Each generator returns a :class:`LabeledConstruction` whose claims were
evaluated when it was built; a failing claim raises :class:`ClaimError`
instead of producing a silently wrong object.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import BLUE, GREEN, RED, EdgeColoring
from .errors import ClaimError, PreconditionError
from .graph import Graph, max_degree, min_degree
from .targets import Clique, Star, TreeTarget, targets_to_json
from .thresholds import Params, construction1_min_degree, construction2_min_degree
from .trees import Tree, enumerate_trees

SCHEMA = "treegood.construction/1"


@dataclass(frozen=True)
class PartitionSpec:
    sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def almost_balanced(self) -> bool:
        return not self.sizes or max(self.sizes) - min(self.sizes) <= 1

    def blocks(self, start: int = 0) -> list[range]:
        out = []
        for size in self.sizes:
            out.append(range(start, start + size))
            start += size
        return out


def almost_balanced_parts(total: int, k: int) -> PartitionSpec:
    if k < 1:
        raise PreconditionError("need at least one part")
    if total < 0:
        raise PreconditionError("total must be non-negative")
    q, r = divmod(total, k)
    return PartitionSpec(tuple([q + 1] * r + [q] * (k - r)))


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class LabeledConstruction:
    name: str
    coloring: EdgeColoring
    claimed_min_degree: int | None
    computed_min_degree: int | None
    claims: tuple[Claim, ...]
    parts: PartitionSpec
    params: dict = field(default_factory=dict)
    # target specs this colouring is claimed to avoid, one tuple per spec
    avoids: tuple[tuple, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "name": self.name,
            "params": self.params,
            "order": self.coloring.order,
            "parts": list(self.parts.sizes),
            "coloring": self.coloring.to_json(),
            "claims": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.claims],
            "claimed_min_degree": self.claimed_min_degree,
            "computed_min_degree": self.computed_min_degree,
            "avoids": [targets_to_json(spec) for spec in self.avoids],
        }


def _finish(name, coloring, claimed, parts, claims, params, avoids) -> LabeledConstruction:
    computed = min_degree(coloring.host) if coloring.order else None
    if claimed is not None:
        claims.append(Claim("min_degree_formula", computed == claimed, f"computed {computed}, formula {claimed}"))
    built = LabeledConstruction(name, coloring, claimed, computed, tuple(claims), parts, params, tuple(avoids))
    if not built.ok:
        failed = [c for c in built.claims if not c.passed]
        raise ClaimError(f"{name}: claim(s) failed: " + "; ".join(f"{c.name} ({c.detail})" for c in failed), built)
    return built


def _clique_edges(block) -> list[tuple[int, int]]:
    block = list(block)
    return [(u, v) for i, u in enumerate(block) for v in block[i + 1:]]


def _cross_edges(blocks) -> list[tuple[int, int]]:
    edges = []
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            edges.extend((u, v) for u in a for v in b)
    return edges


def _is_complete_multipartite(g: Graph, blocks) -> bool:
    return g == Graph.complete_multipartite(len(b) for b in blocks) if blocks else g.edge_count == 0


def _component_orders(g: Graph) -> list[int]:
    return sorted((len(c) for c in g.components()), reverse=True)


def burr_coloring(vG: int, chiH: int, sH: int, literal_prose: bool = False) -> LabeledConstruction:
    """Two-colouring of K_{(vG-1)(chiH-1)+sH-1} behind the goodness lower bound.

    By default edges inside the parts are red and edges across parts blue,
    so red components have fewer than ``vG`` vertices and blue is complete
    multipartite with a short last part. ``literal_prose=True`` swaps the two
    colours.
    """
    if vG < 1 or chiH < 2 or not 1 <= sH <= vG:
        raise PreconditionError("need vG >= 1, chiH >= 2 and 1 <= sH <= vG")
    sizes = [vG - 1] * (chiH - 1) + ([sH - 1] if sH > 1 else [])
    sizes = [s for s in sizes if s > 0]
    order = sum(sizes)
    if order <= 0:
        raise PreconditionError("degenerate host with no vertices")
    parts = PartitionSpec(tuple(sizes))
    blocks = parts.blocks()
    inside = [e for b in blocks for e in _clique_edges(b)]
    across = _cross_edges(blocks)
    class_edges = [inside, across] if not literal_prose else [across, inside]
    coloring = EdgeColoring.from_class_edges(order, class_edges, host=Graph.complete(order))
    inner = coloring.classes[0 if not literal_prose else 1]
    outer = coloring.classes[1 if not literal_prose else 0]
    comp = _component_orders(inner)
    full_parts = sum(1 for s in sizes if s == vG - 1)
    claims = [
        Claim("inside_components_small", max(comp) <= vG - 1, f"component orders {comp}"),
        Claim(
            "across_complete_multipartite",
            _is_complete_multipartite(outer, blocks) and full_parts >= chiH - 1,
            f"parts {sizes}",
        ),
    ]
    params = {"vG": vG, "chiH": chiH, "sH": sH, "literal_prose": literal_prose}
    return _finish("burr", coloring, order - 1, parts, claims, params, [])


def construction_I(p: Params, check_window: bool = True) -> LabeledConstruction:
    """Blue complete (m-1)-partite graph plus red unions of t+2 near-equal cliques inside each part.

    ``check_window=False`` builds the colouring for any N; outside the window
    the red-component claim can fail, which surfaces as :class:`ClaimError`
    with the built construction attached.
    """
    if check_window:
        p.require_window()
    n, m, t, N = p.n, p.m, p.t, p.N
    parts = almost_balanced_parts(N, m - 1)
    blocks = parts.blocks()
    red = []
    clique_sizes = []
    for block in blocks:
        sizes = almost_balanced_parts(len(block), t + 2)
        clique_sizes.append(list(sizes.sizes))
        for sub in sizes.blocks(block.start):
            red.extend(_clique_edges(sub))
    blue = _cross_edges(blocks)
    coloring = EdgeColoring.from_class_edges(N, [red, blue])
    comp = _component_orders(coloring.classes[RED])
    claims = [
        Claim("red_components_below_n", comp[0] <= n - 1, f"largest red component {comp[0]}, n-1 = {n - 1}"),
        Claim("blue_multipartite", _is_complete_multipartite(coloring.classes[BLUE], blocks), f"parts {list(parts.sizes)}"),
    ]
    params = {"n": n, "m": m, "t": t, "N": N, "clique_sizes": clique_sizes}
    avoids = [(TreeTarget(tr), Clique(m)) for tr in enumerate_trees(n)]
    return _finish("construction_I", coloring, construction1_min_degree(N, m, t), parts, claims, params, avoids)


def near_regular_graph(k: int, d: int) -> Graph:
    """A d-regular graph on k vertices, or, when k*d is odd, one with a single vertex of degree d-1."""
    if d < 0 or k <= d:
        raise PreconditionError(f"no {d}-regular graph on {k} vertices")
    if k * d % 2 == 0:
        return _circulant(k, d)
    # k and d odd: d-regular circulant on k-1 vertices, then hang the last vertex
    # on (d-1)/2 disjoint offset-1 edges, each replaced by a path through it
    base = _circulant(k - 1, d)
    edges = set(base.edges())
    last = k - 1
    for i in range((d - 1) // 2):
        a, b = 2 * i, 2 * i + 1
        edges.remove((a, b))
        edges.update({(a, last), (b, last)})
    return Graph.from_edges(k, edges)


def _circulant(k: int, d: int) -> Graph:
    offsets = set(range(1, d // 2 + 1))
    if d % 2:
        offsets.add(k // 2)
    return Graph.from_edges(k, {(min(v, (v + o) % k), max(v, (v + o) % k)) for v in range(k) for o in offsets})


def construction_II(p: Params, tr: Tree) -> LabeledConstruction:
    """Blue complete (m-1)-partite graph plus a red near-(Delta-1)-regular graph inside each part.

    The minimum degree sits in the largest parts, so epsilon is 1 exactly when
    a largest part carries an exactly (Delta-1)-regular graph. When part sizes
    disagree on that, ``params['parts_disagree']`` is set.
    """
    if tr.order < 2:
        raise PreconditionError("tree needs at least one edge")
    N, m = p.N, p.m
    delta = tr.max_degree
    d = delta - 1
    parts = almost_balanced_parts(N, m - 1)
    if min(parts.sizes) < delta:
        raise PreconditionError(f"part of size {min(parts.sizes)} smaller than Delta = {delta}")
    blocks = parts.blocks()
    red = []
    regular = []
    for block in blocks:
        g = near_regular_graph(len(block), d)
        red.extend((block.start + u, block.start + v) for u, v in g.edges())
        regular.append(len(block) * d % 2 == 0)
    eps = 1 if regular[0] else 2
    blue = _cross_edges(blocks)
    coloring = EdgeColoring.from_class_edges(N, [red, blue])
    red_max = max_degree(coloring.classes[RED]) if N else 0
    claims = [
        Claim("red_max_degree_below_delta", red_max <= delta - 1, f"red max degree {red_max}, Delta-1 = {d}"),
        Claim("blue_multipartite", _is_complete_multipartite(coloring.classes[BLUE], blocks), f"parts {list(parts.sizes)}"),
    ]
    params = {
        "m": m, "N": N, "t": p.t, "n": tr.order, "tree": tr.to_json(), "Delta": delta,
        "eps": eps, "parts_disagree": len(set(regular)) > 1,
    }
    avoids = [(TreeTarget(tr), Clique(m))]
    return _finish("construction_II", coloring, construction2_min_degree(N, m, delta, eps), parts, claims, params, avoids)


def star_tree_witness(n: int, t: int) -> LabeledConstruction:
    """Red/blue K_{(t+1)(n-1)} with blue t+1 disjoint K_{n-1} and red everything across them."""
    if n <= 1 or t < 0:
        raise PreconditionError("need n >= 2 and t >= 0")
    order = (t + 1) * (n - 1)
    parts = PartitionSpec((n - 1,) * (t + 1))
    blocks = parts.blocks()
    blue = [e for b in blocks for e in _clique_edges(b)]
    red = _cross_edges(blocks)
    coloring = EdgeColoring.from_class_edges(order, [red, blue], host=Graph.complete(order))
    red_max = max_degree(coloring.classes[RED])
    comp = _component_orders(coloring.classes[BLUE])
    claims = [
        Claim("red_max_degree", red_max == t * (n - 1), f"red max degree {red_max}, t(n-1) = {t * (n - 1)}"),
        Claim("blue_components", set(comp) == {n - 1}, f"blue component orders {comp}"),
    ]
    avoids = [(Star(t * (n - 1) + 1), TreeTarget(tr)) for tr in enumerate_trees(n)]
    return _finish("star_tree_witness", coloring, order - 1, parts, claims, {"n": n, "t": t}, avoids)


def blowup_3color(w: EdgeColoring, m: int) -> EdgeColoring:
    """Replace each vertex of a green K_{m-1} by a copy of the red/blue colouring ``w``."""
    if m < 2:
        raise PreconditionError("m must be at least 2")
    if w.palette != 2 or not w.host.is_complete():
        raise PreconditionError("blow-up needs a 2-coloured complete graph")
    v = w.order
    blocks = [range(b * v, (b + 1) * v) for b in range(m - 1)]
    red, blue = [], []
    for block in blocks:
        red.extend((block.start + a, block.start + b) for a, b in w.classes[RED].edges())
        blue.extend((block.start + a, block.start + b) for a, b in w.classes[BLUE].edges())
    green = _cross_edges(blocks)
    order = v * (m - 1)
    out = EdgeColoring.from_class_edges(order, [red, blue, green], host=Graph.complete(order))

    problems = []
    if not _is_complete_multipartite(out.classes[GREEN], blocks):
        problems.append("green is not complete (m-1)-partite")
    for c in (RED, BLUE):
        for block in blocks:
            sub, _ = out.classes[c].induced(block)
            if sub != w.classes[c]:
                problems.append(f"colour {c} block at {block.start} differs from the input")
        crossing = sum(1 for a, b in out.classes[c].edges() if a // max(v, 1) != b // max(v, 1))
        if crossing:
            problems.append(f"colour {c} has {crossing} edges across blocks")
    if problems:
        raise ClaimError("blow-up claims failed: " + "; ".join(problems), problems)
    return out

