"""
Small Ramsey numbers by exhaustive search
=========================================

Grow the complete host one vertex at a time until every colouring contains
a target, and keep the avoiding colouring found one step earlier.
"""

# %%
# Two colours: a star against a tree. The closed form for l = t(n-1)+1 is
# l + n - 1, and l + n - 2 one residue class over when the tree is not a star.
from treegood import Star, Tree, TreeTarget, ramsey, ramsey_3, verify_witness
from treegood.arrowing import describe
from treegood.thresholds import burr_r2

for ell, tree, regime in [(3, Tree.path(3), "A"), (5, Tree.path(4), "B")]:
    res = ramsey((Star(ell), TreeTarget(tree)))
    print(describe(res), "| closed form", burr_r2(ell, tree.order, regime), "| nodes", res.nodes)

# %%
# Three colours. The witness at N-1 is re-checked with the containment
# oracles only, independently of the search that produced it.
res = ramsey_3(1, Tree.path(3), 3)
print(describe(res))
print("witness on", res.witness.order, "vertices avoids all targets:", verify_witness(res.witness, res.targets))
for name, cls in zip(("red", "blue", "green"), res.witness.classes):
    print(f"  {name:5s} {cls.edges()}")

# %%
# A budget turns an expensive search into an explicit bracket rather than a guess.
res = ramsey_3(3, Tree.path(3), 4, budget_nodes=20_000, start=13, upper_hint=13)
print(describe(res))
