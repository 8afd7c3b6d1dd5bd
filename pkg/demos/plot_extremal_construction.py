"""
The extremal graphs H_3(n, m)
=============================

A 3-partite 3-graph with matching number ``m`` and more than
``(m-1) n^2 + 3n - m - 1`` edges can be covered by ``m`` vertices. The
graphs ``H_3(n, m)`` sit exactly one edge below that threshold and need
``m + 1`` cover vertices, so the threshold cannot be lowered.
"""

# %%
# Build one and look at it. Class 0 holds the ``m - 1`` "heavy" vertices
# that meet every edge through them, plus one vertex ``v_1`` whose edges
# must also touch position 0 of class 1 or class 2.
from hyperstab import extremal_hknm, max_matching, min_vertex_cover
from hyperstab.constructions import stability_threshold

H = extremal_hknm(3, 5, 2)
print(H)
print("nu  =", max_matching(H).size)
print("tau =", min_vertex_cover(H).size)
print("threshold =", stability_threshold(5, 2))

# %%
# A maximum matching and a minimum cover, as certificates.
M = max_matching(H)
C = min_vertex_cover(H)
print("matching:", M.edges)
print("cover:   ", sorted(C.vertices))
assert M.is_valid(H) and C.covers(H)

# %%
# The whole grid ``2 <= m + 1 <= n <= 6``. Every row sits one edge below
# the threshold and has ``tau = nu + 1``.
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

rows = []
for n in range(2, 7):
    for m in range(1, n):
        G = extremal_hknm(3, n, m)
        rows.append((n, m, G.e, stability_threshold(n, m), max_matching(G).size, min_vertex_cover(G).size))
        print(f"n={n} m={m}  e={G.e:3d}  threshold={rows[-1][3]:3d}  nu={rows[-1][4]}  tau={rows[-1][5]}")

fig, ax = plt.subplots(figsize=(7, 3))
labels = [f"{n},{m}" for n, m, *_ in rows]
ax.bar(labels, [r[3] for r in rows], color="lightgray", label="threshold")
ax.bar(labels, [r[2] for r in rows], width=0.5, label="e(H_3(n,m))")
ax.set_xlabel("n,m")
ax.tick_params(axis="x", labelrotation=90)
ax.legend()
fig.tight_layout()
fig.savefig("extremal_edges.png")
