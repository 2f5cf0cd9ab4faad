"""
Extremal colourings and their claims
====================================

Each generator checks its own structural claims when it runs, then the
colouring is handed to the independent witness checker.
"""

# %%
from treegood import (
    Clique,
    Tree,
    TreeTarget,
    construction_I,
    construction_II,
    verify_witness,
)
from treegood.thresholds import Params, conj12_threshold

for N in range(9, 13):
    p = Params(3, 3, 1, N)
    built = construction_I(p)
    ok = verify_witness(built.coloring, (TreeTarget(Tree.path(3)), Clique(3)))
    print(f"N={N:2d} parts={list(built.parts.sizes)} red cliques={built.params['clique_sizes']} "
          f"delta={built.computed_min_degree} threshold={conj12_threshold(N, 3, 1)} avoids={ok}")

# %%
# The second recipe puts a near-regular red graph in every part. When the
# parts disagree on whether an exactly regular graph exists, it says so.
for N in (9, 11, 12):
    built = construction_II(Params(3, 3, 1, N), Tree.path(3))
    print(f"N={N:2d} eps={built.params['eps']} delta={built.computed_min_degree} "
          f"parts_disagree={built.params['parts_disagree']}")

# %%
# Serialized form, as written by ``treegood gen-construction``.
import json

doc = construction_I(Params(3, 3, 1, 9)).to_json()
print(json.dumps({k: doc[k] for k in ("name", "parts", "claims", "claimed_min_degree")}, indent=2))
