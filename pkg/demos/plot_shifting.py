"""
Shifting towards the front
==========================

``shift(H, x, y)`` pushes edges from ``y`` onto the earlier vertex ``x``
of the same class, unless the pushed edge is already there. The edge count
never changes and the matching number can only go down, so a
counterexample to a stability statement can be assumed shifted.
"""

# %%
from hyperstab import VertexRef, build, max_matching, shift, shift_closure, shift_trace
from hyperstab.constructions import random_hypergraph
from hyperstab.shifting import is_partitely_shifted

H = build(3, [2, 1, 1], [(1, 0, 0)])
print(shift(H, VertexRef(0, 0), VertexRef(0, 1)).edge_list)

# %%
# If the target edge already exists nothing moves.
H = build(3, [2, 1, 1], [(0, 0, 0), (1, 0, 0)])
print(shift(H, VertexRef(0, 0), VertexRef(0, 1)) == H)

# %%
# Full closure of a random graph, step by step.
H = random_hypergraph(3, (3, 3, 3), 8, 1)
steps = shift_trace(H)
for pair, G in steps:
    label = "start" if pair is None else f"{tuple(pair[0])} <- {tuple(pair[1])}"
    print(f"{label:16s} e={G.e}  nu={max_matching(G).size}")

G = steps[-1][1]
assert G == shift_closure(H) and is_partitely_shifted(G)
print(G.edge_list)
