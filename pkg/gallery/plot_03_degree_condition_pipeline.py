"""
From a degree condition to a certificate
========================================

Colour the non-edges of a dense graph red. High minimum degree keeps red
stars small, so the three-colour extractor must return a blue tree or a
green clique that lives inside the original graph.
"""

# %%
import random

from treegood import Tree, min_degree, schelp_lift, schelp_pipeline
from treegood.harness import random_two_coloring, sample_graph_min_degree
from treegood.thresholds import Params, thm13_threshold

p = Params(3, 3, 1, 9)
floor = thm13_threshold(p.N, p.n, p.t)
g = sample_graph_min_degree(p.N, floor, seed=1)
c = random_two_coloring(g, random.Random(1))
print("min degree", min_degree(g), ">= threshold", floor)

lift = schelp_lift(g, c, ell=p.ell("A"))
print("red max degree after the lift:", lift.red_max_degree, "| red star free:", lift.red_star_free)

# %%
cert = schelp_pipeline(g, c, p, "A", Tree.path(3))
print(cert.kind, cert.mapping or cert.clique)
for pivot in cert.trace:
    print(f"  pivot {pivot.vertex}: green degree {pivot.green_degree} >= {pivot.bound} at level {pivot.level}")

# %%
# One below the threshold the contract refuses instead of guessing.
h = sample_graph_min_degree(9, floor - 1, seed=2, target_edges=0)
try:
    schelp_pipeline(h, random_two_coloring(h, random.Random(2)), p, "A", Tree.path(3))
except ValueError as exc:
    print("refused:", exc)
