"""
Trading two matching edges for three
====================================

Given two matching edges ``f1, f2`` and a triple ``S`` outside the
matching, the six possible edges ``{u, v, x}`` with ``u`` in ``f1``, ``v``
in ``f2`` and ``x`` in ``S`` form a coloured link system. When three of
them are pairwise disjoint and use each vertex of ``S`` once, the matching
grows by one. Five present edges always suffice; four do not.
"""

# %%
from collections import Counter

from hyperstab import LinkSystem, extension_lemma_census, rainbow_extension

report = extension_lemma_census()
print(report.status)
for total, tally in report.details["by_total"].items():
    print(f"{total} edges: {tally['admit']:2d} extend, {tally['deny']:2d} do not")

# %%
# The four-edge patterns that do not extend. Colour counts show why: an
# empty colour blocks immediately, and the rest have every candidate
# triple colliding on a vertex of ``f1`` or ``f2``.
blocked = [row for row in report.details["rows"] if row["total"] == 4 and not row["extension"]]
print(Counter(tuple(row["color_counts"]) for row in blocked))

sys = LinkSystem.from_mask(blocked[0]["mask"])
for colour, slot, (u, v) in sys.edges():
    print(colour, slot, u, v)
print(rainbow_extension(sys))
