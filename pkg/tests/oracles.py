"""
Independent brute-force references used by the tests.

Nothing here imports the solvers; everything is written directly from the
definitions so that a shared bug cannot hide on both sides.
"""

from __future__ import annotations

from itertools import combinations, product


def disjoint(a, b):
    return all(x != y for x, y in zip(a, b))


def nu(edges):
    """Largest set of pairwise disjoint tuples, by plain recursion."""
    edges = sorted(edges)

    def rec(i, chosen):
        if i == len(edges):
            return len(chosen)
        best = rec(i + 1, chosen)
        if all(disjoint(edges[i], c) for c in chosen):
            best = max(best, rec(i + 1, chosen + [edges[i]]))
        return best

    return rec(0, [])


def all_max_matchings(edges, size):
    edges = sorted(edges)
    return [
        tuple(sorted(c))
        for c in combinations(edges, size)
        if all(disjoint(a, b) for a, b in combinations(c, 2))
    ]


def tau(edges, sizes):
    vertices = [(c, p) for c, s in enumerate(sizes) for p in range(s)]
    edges = list(edges)
    for r in range(len(vertices) + 1):
        for C in combinations(vertices, r):
            Cs = set(C)
            if all(any((c, t[c]) in Cs for c in range(len(t))) for t in edges):
                return r
    raise AssertionError("unreachable")


def shift(edges, c, x, y):
    """Literal definition: swap y -> x in class c unless the image is already present."""
    edges = set(edges)
    out = set()
    for t in edges:
        if t[c] == y:
            img = t[:c] + (x,) + t[c + 1:]
            out.add(t if img in edges else img)
        else:
            out.add(t)
    return out


def is_shifted(edges, sizes):
    for c, s in enumerate(sizes):
        for x, y in combinations(range(s), 2):
            if shift(edges, c, x, y) != set(edges):
                return False
    return True


def has_rainbow(family):
    """Pick one edge per graph with no shared endpoint; family members are edge sets."""
    for choice in product(*[sorted(G) for G in family]):
        lefts = {u for u, _ in choice}
        rights = {v for _, v in choice}
        if len(lefts) == len(choice) == len(rights):
            return True
    return False


def legal_tuples(sizes):
    return list(product(*(range(s) for s in sizes)))
