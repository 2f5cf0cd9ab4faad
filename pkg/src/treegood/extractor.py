"""Certificates from red/blue/green colourings of K_N, following the induction on m.

Given a colouring of K_N with N at least the three-colour threshold, the
extractor returns a red K_{1,l}, a blue copy of the tree, or a green K_m,
together with the trace of green-heavy pivots it recursed through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import BLUE, GREEN, RED, EdgeColoring
from .embeddings import Embedding, exact_embed, greedy_embed
from .errors import ExtractionError, GreedyStuck, OutOfRegimeError, PreconditionError
from .graph import Graph, bits, complement, max_degree, min_degree
from .thresholds import Params, Regime, regime_of, thm13_threshold, thm34_threshold
from .trees import Tree, is_star

SCHEMA = "treegood.certificate/1"


@dataclass(frozen=True)
class Pivot:
    vertex: int
    green_degree: int
    bound: int
    level: int


@dataclass(frozen=True)
class Certificate:
    """A red star, blue tree or green clique in a fixed colouring.

    ``center``/``leaves`` are set for ``red_star``, ``mapping`` (tree vertex
    -> host vertex) for ``blue_tree``, ``clique`` for ``green_clique``.
    """

    kind: str
    ell: int
    tree: Tree
    m: int
    center: int | None = None
    leaves: tuple[int, ...] = ()
    mapping: tuple[int, ...] = ()
    clique: tuple[int, ...] = ()
    trace: tuple[Pivot, ...] = ()
    fallback: str | None = None

    def to_json(self, coloring: EdgeColoring | None = None) -> dict:
        doc = {
            "schema": SCHEMA,
            "kind": self.kind,
            "ell": self.ell,
            "tree": self.tree.to_json(),
            "m": self.m,
            "center": self.center,
            "leaves": list(self.leaves),
            "mapping": list(self.mapping),
            "clique": list(self.clique),
            "trace": [vars(p) for p in self.trace],
            "fallback": self.fallback,
        }
        if coloring is not None:
            doc["coloring"] = coloring.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> Certificate:
        return cls(
            kind=doc["kind"],
            ell=doc["ell"],
            tree=Tree.from_json(doc["tree"]),
            m=doc["m"],
            center=doc.get("center"),
            leaves=tuple(doc.get("leaves", ())),
            mapping=tuple(doc.get("mapping", ())),
            clique=tuple(doc.get("clique", ())),
            trace=tuple(Pivot(**p) for p in doc.get("trace", ())),
            fallback=doc.get("fallback"),
        )


def check_certificate(cert: Certificate, c: EdgeColoring) -> bool:
    """Re-check a certificate against the colouring using only edge lookups."""
    if c.palette != 3:
        return False
    if cert.kind == "red_star":
        red = c.classes[RED]
        return (
            cert.center is not None
            and len(cert.leaves) == cert.ell
            and len(set(cert.leaves)) == cert.ell
            and cert.center not in cert.leaves
            and all(red.has_edge(cert.center, w) for w in cert.leaves)
        )
    if cert.kind == "blue_tree":
        try:
            Embedding(cert.tree, c.classes[BLUE], cert.mapping)
        except ValueError:
            return False
        return True
    if cert.kind == "green_clique":
        green = c.classes[GREEN]
        return (
            len(cert.clique) == cert.m
            and len(set(cert.clique)) == cert.m
            and all(green.has_edge(a, b) for a, b in combinations(cert.clique, 2))
        )
    return False


def _degree_in(g: Graph, v: int, mask: int) -> int:
    return (g.rows[v] & mask).bit_count()


def _pick_pivot(green: Graph, mask: int, bound: int) -> tuple[int, int] | None:
    best = None
    for v in bits(mask):
        d = _degree_in(green, v, mask)
        if d >= bound and (best is None or d > best[1]):
            best = (v, d)
    return best


class _Extractor:
    def __init__(self, c: EdgeColoring, ell: int, tr: Tree, gv: bool):
        self.c = c
        self.ell = ell
        self.tr = tr
        self.n = tr.order
        self.gv = gv
        # l+n-2 per colour step for the star/tree bound, one less in the non-star regime
        self.step = ell + self.n - (3 if gv else 2)
        self.trace: list[Pivot] = []
        self.fallback: str | None = None

    def run(self, mask: int, m: int):
        red, _blue, green = self.c.classes
        if m >= 3:
            bound = self.step * (m - 2) + 1
            pivot = _pick_pivot(green, mask, bound)
            if pivot is not None:
                v, d = pivot
                self.trace.append(Pivot(v, d, bound, m))
                kind, payload = self.run(green.rows[v] & mask, m - 1)
                if kind == "green_clique":
                    return kind, (v, *payload)
                return kind, payload
        elif m == 2:
            for v in bits(mask):
                nb = green.rows[v] & mask
                if nb:
                    w = (nb & -nb).bit_length() - 1
                    return "green_clique", (v, w)
        for v in bits(mask):
            if _degree_in(red, v, mask) >= self.ell:
                leaves = list(bits(red.rows[v] & mask))[: self.ell]
                return "red_star", (v, tuple(leaves))
        return self._blue_tree(mask)

    def _blue_tree(self, mask: int):
        sub, labels = self.c.classes[BLUE].induced(bits(mask))
        if not self.gv:
            try:
                emb = greedy_embed(sub, self.tr)
            except GreedyStuck as exc:
                raise ExtractionError(f"greedy embedding failed: {exc}", self._residual(mask)) from exc
            return "blue_tree", tuple(labels[w] for w in emb.mapping)
        for comp in sub.components():
            if len(comp) < self.n:
                continue
            part, inner = sub.induced(comp)
            if min_degree(part) >= self.n - 2:
                emb = exact_embed(part, self.tr)
                if emb is None:
                    raise ExtractionError("qualifying blue component rejected the tree", self._residual(mask))
                return "blue_tree", tuple(labels[inner[w]] for w in emb.mapping)
        # no component meets the lemma's hypotheses: search every component outright
        for comp in sub.components():
            part, inner = sub.induced(comp)
            emb = exact_embed(part, self.tr)
            if emb is not None:
                self.fallback = "exhaustive component search (no blue component with order >= n and min degree >= n-2)"
                return "blue_tree", tuple(labels[inner[w]] for w in emb.mapping)
        raise ExtractionError("no blue component contains the tree (fallback exhausted)", self._residual(mask))

    def _residual(self, mask: int) -> dict:
        sub_colors = []
        for g in self.c.classes:
            sub, _labels = g.induced(bits(mask))
            sub_colors.append(sub.edges())
        return {"vertices": list(bits(mask)), "classes": sub_colors}


def _extract(c: EdgeColoring, ell: int, tr: Tree, m: int, gv: bool) -> Certificate:
    ex = _Extractor(c, ell, tr, gv)
    kind, payload = ex.run((1 << c.order) - 1, m)
    if kind == "red_star":
        cert = Certificate(kind, ell, tr, m, center=payload[0], leaves=payload[1])
    elif kind == "blue_tree":
        cert = Certificate(kind, ell, tr, m, mapping=payload)
    else:
        cert = Certificate(kind, ell, tr, m, clique=tuple(payload))
    cert = Certificate(**{**vars(cert), "trace": tuple(ex.trace), "fallback": ex.fallback})
    if not check_certificate(cert, c):
        raise ExtractionError(f"extracted {kind} failed its own check", cert.to_json(c))
    return cert


def _require_three_colour_complete(c: EdgeColoring) -> None:
    if c.palette != 3 or not c.host.is_complete():
        raise PreconditionError("extraction needs a 3-coloured complete graph")


def extract_certificate(c: EdgeColoring, ell: int, tr: Tree, m: int) -> Certificate:
    """Red K_{1,ell}, blue ``tr`` or green K_m from a colouring of K_N, N >= (ell+n-2)(m-1)+1."""
    _require_three_colour_complete(c)
    n = tr.order
    if m < 2:
        raise PreconditionError("m must be at least 2")
    if regime_of(ell, n) is not Regime.A:
        raise OutOfRegimeError(f"l={ell} is not t(n-1)+1 for n={n}")
    need = (ell + n - 2) * (m - 1) + 1
    if c.order < need:
        raise PreconditionError(f"N={c.order} below (l+n-2)(m-1)+1 = {need}")
    return _extract(c, ell, tr, m, gv=False)


def extract_certificate_gv(c: EdgeColoring, ell: int, tr: Tree, m: int, strict: bool = True) -> Certificate:
    """Non-star variant with threshold (ell+n-3)(m-1)+1.

    With ``strict=False`` the residue conditions are not enforced, so a
    caller can probe parameters outside them; any failure then surfaces as
    :class:`ExtractionError`.
    """
    _require_three_colour_complete(c)
    n = tr.order
    if m < 2:
        raise PreconditionError("m must be at least 2")
    if is_star(tr):
        raise PreconditionError("tree must not be a star")
    if strict:
        if n < 3 or (ell - 2) % (n - 1) or ell < 2:
            raise OutOfRegimeError(f"l={ell} is not t(n-1)+2 for n={n}")
        # at m = 2 the bound is the two-colour star/tree value and needs no residue condition
        if m > 2 and (m - 2) % (n - 1) == 0:
            raise PreconditionError(f"m-2={m - 2} is divisible by n-1={n - 1}")
    need = (ell + n - 3) * (m - 1) + 1
    if c.order < need:
        raise PreconditionError(f"N={c.order} below (l+n-3)(m-1)+1 = {need}")
    return _extract(c, ell, tr, m, gv=True)


@dataclass(frozen=True)
class Lift:
    coloring: EdgeColoring
    red_max_degree: int
    ell: int | None = None
    red_star_free: bool | None = field(default=None)


def schelp_lift(g: Graph, c: EdgeColoring, ell: int | None = None) -> Lift:
    """Colour the non-edges of ``g`` red; class 0 of ``c`` becomes blue, class 1 green."""
    if c.palette != 2 or c.host != g:
        raise PreconditionError("colouring must be a 2-colouring of exactly the edges of g")
    N = g.order
    red = complement(g)
    lifted = EdgeColoring(Graph.complete(N), (red, c.classes[0], c.classes[1]))
    red_max = max_degree(red) if N else 0
    if N:
        assert red_max == N - 1 - min_degree(g)
    free = None if ell is None else red_max <= ell - 1
    return Lift(lifted, red_max, ell, free)


def schelp_pipeline(g: Graph, c: EdgeColoring, p: Params, regime: Regime | str, tr: Tree) -> Certificate:
    """Blue ``tr`` or green K_m inside the 2-colouring ``c`` of ``g``, via the lift and the extractor."""
    regime = Regime(regime)
    if p.N != g.order or tr.order != p.n:
        raise PreconditionError("params do not match the graph order or the tree order")
    p.require_window()
    delta = min_degree(g)
    if regime is Regime.A:
        need = thm13_threshold(p.N, p.n, p.t)
    else:
        need = thm34_threshold(p.N, p.n, p.t)
        if is_star(tr):
            raise PreconditionError("regime B needs a non-star tree")
        if (p.m - 2) % (p.n - 1) == 0:
            raise PreconditionError(f"regime B needs m-2 not divisible by n-1 (m={p.m}, n={p.n})")
    if delta < need:
        raise PreconditionError(f"min degree {delta} below threshold {need}")
    ell = p.ell(regime)
    lift = schelp_lift(g, c, ell)
    assert lift.red_star_free, "lift inequality failed despite the degree condition"
    if regime is Regime.A:
        cert = extract_certificate(lift.coloring, ell, tr, p.m)
    else:
        cert = extract_certificate_gv(lift.coloring, ell, tr, p.m)
    assert cert.kind != "red_star"
    return cert


__all__ = [
    "Certificate",
    "Lift",
    "Pivot",
    "check_certificate",
    "extract_certificate",
    "extract_certificate_gv",
    "schelp_lift",
    "schelp_pipeline",
]
