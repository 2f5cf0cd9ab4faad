"""Desk-scale verification of Ramsey goodness results for trees versus cliques."""

from .arrowing import (
    Verdict,
    arrows_2,
    arrows_3_star,
    decide,
    ramsey,
    ramsey_2,
    ramsey_3,
    verify_witness,
)
from .coloring import BLUE, GREEN, RED, EdgeColoring
from .constructions import (
    LabeledConstruction,
    PartitionSpec,
    almost_balanced_parts,
    blowup_3color,
    burr_coloring,
    construction_I,
    construction_II,
    near_regular_graph,
    star_tree_witness,
)
from .embeddings import Embedding, exact_embed, greedy_embed, lemma32_check
from .extractor import (
    Certificate,
    check_certificate,
    extract_certificate,
    extract_certificate_gv,
    schelp_lift,
    schelp_pipeline,
)
from .graph import (
    Graph,
    complement,
    contains_clique,
    from_graph6,
    max_degree,
    min_degree,
    to_graph6,
)
from .targets import Clique, Star, TreeTarget
from .thresholds import Params, Regime
from .trees import Tree, contains_tree, enumerate_trees, is_star

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "GREEN",
    "RED",
    "Certificate",
    "Clique",
    "EdgeColoring",
    "Embedding",
    "Graph",
    "LabeledConstruction",
    "Params",
    "PartitionSpec",
    "Regime",
    "Star",
    "Tree",
    "TreeTarget",
    "Verdict",
    "almost_balanced_parts",
    "arrows_2",
    "arrows_3_star",
    "blowup_3color",
    "burr_coloring",
    "check_certificate",
    "complement",
    "construction_I",
    "construction_II",
    "contains_clique",
    "contains_tree",
    "decide",
    "enumerate_trees",
    "exact_embed",
    "extract_certificate",
    "extract_certificate_gv",
    "from_graph6",
    "greedy_embed",
    "is_star",
    "lemma32_check",
    "max_degree",
    "min_degree",
    "near_regular_graph",
    "ramsey",
    "ramsey_2",
    "ramsey_3",
    "schelp_lift",
    "schelp_pipeline",
    "star_tree_witness",
    "to_graph6",
    "verify_witness",
]
