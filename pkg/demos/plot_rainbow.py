"""
Rainbow matchings
=================

A family of bipartite graphs ``G_1..G_m`` on the same ``n + n`` vertices
has a rainbow matching when one edge can be taken from each graph with no
shared endpoint. More than ``(m - 1) n`` edges in every member is enough,
and ``m`` copies of "all edges at ``m - 1`` fixed left vertices" show the
bound is exact.
"""

# %%
from hyperstab import rainbow_matching, rainbow_tight_family
from hyperstab.constructions import make_rng, random_bipartite

family = rainbow_tight_family(4, 3)
print([G.e for G in family], rainbow_matching(family))

# %%
# One more edge in each member is enough.
from hyperstab.solvers import BipartiteGraph

bumped = [BipartiteGraph(4, 4, G.edges | {(3, i)}) for i, G in enumerate(family)]
R = rainbow_matching(bumped)
print([G.e for G in bumped], R.pairs)

# %%
# Random families just above the bound always succeed.
rng = make_rng(0)
hits = 0
for _ in range(200):
    fam = [random_bipartite(4, int(rng.integers(9, 17)), rng) for _ in range(3)]
    hits += rainbow_matching(fam) is not None
print(hits, "of 200")
