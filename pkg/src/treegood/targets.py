"""Forbidden monochromatic targets: stars, trees and cliques."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, contains_clique, max_degree
from .trees import Tree, contains_tree


@dataclass(frozen=True)
class Star:
    """The star K_{1,ell}."""

    ell: int

    @property
    def order(self) -> int:
        return self.ell + 1

    def found_in(self, g: Graph) -> bool:
        if g.order == 0:
            return False
        return max_degree(g) >= self.ell

    def to_json(self) -> dict:
        return {"kind": "star", "ell": self.ell}

    def __str__(self) -> str:
        return f"K1,{self.ell}"


@dataclass(frozen=True)
class TreeTarget:
    tree: Tree

    @property
    def order(self) -> int:
        return self.tree.order

    def found_in(self, g: Graph) -> bool:
        return contains_tree(g, self.tree) is not None

    def to_json(self) -> dict:
        return {"kind": "tree", "tree": self.tree.to_json()}

    def __str__(self) -> str:
        return self.tree.name()


@dataclass(frozen=True)
class Clique:
    m: int

    @property
    def order(self) -> int:
        return self.m

    def found_in(self, g: Graph) -> bool:
        if self.m == 0:
            return True
        return contains_clique(g, self.m) is not None

    def to_json(self) -> dict:
        return {"kind": "clique", "m": self.m}

    def __str__(self) -> str:
        return f"K{self.m}"


Target = Star | TreeTarget | Clique
TargetSpec = tuple  # ordered targets, one per colour


def target_from_json(doc: dict) -> Target:
    kind = doc["kind"]
    if kind == "star":
        return Star(doc["ell"])
    if kind == "tree":
        return TreeTarget(Tree.from_json(doc["tree"]))
    if kind == "clique":
        return Clique(doc["m"])
    raise ValueError(f"unknown target kind {kind!r}")


def targets_to_json(targets) -> list[dict]:
    return [t.to_json() for t in targets]


def targets_from_json(docs) -> tuple:
    return tuple(target_from_json(d) for d in docs)


def spec_name(targets) -> str:
    return "(" + ", ".join(str(t) for t in targets) + ")"
