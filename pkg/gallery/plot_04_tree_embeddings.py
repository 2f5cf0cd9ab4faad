"""
Embedding trees in dense hosts
==============================

Greedy placement along a 1-degenerate order, and exact search for the
cases where greedy has no guarantee.
"""

# %%
from treegood import Graph, enumerate_trees, exact_embed, greedy_embed, is_star
from treegood.embeddings import lemma32_sweep

trees = enumerate_trees(6)
print(len(trees), "trees on 6 vertices,", sum(not is_star(t) for t in trees), "of them not stars")

host = Graph.complete(6)
for tr in trees:
    print(tr.name(), "->", greedy_embed(host, tr).mapping)

# %%
# Connected hosts with minimum degree n-2 take every non-star tree on n vertices.
for order in (5, 6):
    hosts, instances = lemma32_sweep(order)
    print(f"order {order}: {hosts} hosts, {instances} embeddings found")

# %%
# Exact search also certifies absence: an unbalanced complete bipartite
# host has no spanning path.
from treegood import Tree

print("P6 in K_{2,3}?", exact_embed(Graph.complete_multipartite([2, 3]), Tree.path(6)))
