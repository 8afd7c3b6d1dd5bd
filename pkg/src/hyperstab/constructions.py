"""
Generators for the concrete families: the extremal graphs ``H_k(n, m)``,
complete k-partite graphs, a cyclic perfect-matching decomposition, the
tight families at the boundary of the intersecting and rainbow results,
and seeded random instances.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .core import BipartiteGraph, KPartiteHypergraph, Matching
from .errors import BadParams, Infeasible

__all__ = [
    "extremal_hknm",
    "extremal_edge_count",
    "stability_threshold",
    "complete",
    "berge_decomposition",
    "lemma24_tight_family",
    "rainbow_tight_family",
    "random_hypergraph",
    "random_min_degree",
    "random_bipartite",
    "make_rng",
]


def make_rng(seed, *stream: int) -> np.random.Generator:
    """Generator for ``(seed, stream...)``; independent across streams."""
    return np.random.default_rng([int(seed), *(int(s) for s in stream)])


def extremal_edge_count(k: int, n: int, m: int) -> int:
    return (m - 1) * n ** (k - 1) + (n ** (k - 1) - (n - 1) ** (k - 1)) + n - m


def stability_threshold(n: int, m: int) -> int:
    """Smallest edge count at which a 3-partite graph with ``nu = m`` must have ``tau = m``."""
    return (m - 1) * n * n + 3 * n - m


def extremal_hknm(k: int, n: int, m: int) -> KPartiteHypergraph:
    """The extremal graph with ``nu = m``, ``tau = m + 1`` and one edge below the threshold.

    Class 0 holds ``W = {0, ..., m-2}`` and ``v_1 = m-1``; ``v_i`` is
    position 0 of class ``i-1`` for ``i >= 2``. An edge is present iff it
    meets ``W``, or contains all of ``v_2..v_k``, or contains ``v_1`` and
    at least one of ``v_2..v_k``.
    """
    if k < 3 or m < 1 or n < m + 1:
        raise BadParams(f"need k >= 3 and n >= m + 1 >= 2, got k={k}, n={n}, m={m}")
    edges = []
    for t in product(range(n), repeat=k):
        rest = t[1:]
        if t[0] < m - 1 or not any(rest) or (t[0] == m - 1 and 0 in rest):
            edges.append(t)
    return KPartiteHypergraph._trusted(k, (n,) * k, frozenset(edges))


def complete(k: int, n_list: int | Sequence[int]) -> KPartiteHypergraph:
    sizes = (n_list,) * k if isinstance(n_list, int) else tuple(n_list)
    if len(sizes) != k or any(s < 0 for s in sizes):
        raise BadParams(f"bad class sizes {sizes} for k={k}")
    return KPartiteHypergraph._trusted(k, sizes, frozenset(product(*(range(s) for s in sizes))))


def berge_decomposition(k: int, n: int) -> list[Matching]:
    """Split ``complete(k, n)`` into ``n**(k-1)`` disjoint perfect matchings.

    The matching for offsets ``(s_2, ..., s_k)`` holds the edges
    ``(i, i + s_2, ..., i + s_k) mod n`` for ``i in range(n)``.
    """
    if n < 1 or k < 2:
        raise BadParams(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    out = []
    for shifts in product(range(n), repeat=k - 1):
        out.append(Matching(tuple((i, *((i + s) % n for s in shifts)) for i in range(n))))
    return out


def lemma24_tight_family(n1: int, n2: int, n3: int) -> KPartiteHypergraph:
    """Intersecting family with ``tau = 2`` and ``n1 + n2 + n3 - 2`` edges.

    All legal triples containing at least two of ``(0, 0, 0)``'s vertices.
    """
    if min(n1, n2, n3) < 2:
        raise BadParams("every class needs at least 2 vertices")
    edges = {(0, 0, c) for c in range(n3)}
    edges |= {(0, b, 0) for b in range(n2)}
    edges |= {(a, 0, 0) for a in range(n1)}
    return KPartiteHypergraph._trusted(3, (n1, n2, n3), frozenset(edges))


def rainbow_tight_family(n: int, m: int) -> list[BipartiteGraph]:
    """``m`` copies of the graph of all edges at left vertices ``0..m-2``.

    Each member has ``(m - 1) * n`` edges and the family has no rainbow
    matching, since the union only has matchings of size ``m - 1``.
    """
    if not 1 <= m <= n:
        raise BadParams(f"need n >= m >= 1, got n={n}, m={m}")
    G = BipartiteGraph(n, n, frozenset((u, v) for u in range(m - 1) for v in range(n)))
    return [G] * m


def random_hypergraph(k: int, sizes: Sequence[int], e: int, seed, *stream: int) -> KPartiteHypergraph:
    """Uniformly random ``e``-edge subgraph of the complete graph on ``sizes``."""
    sizes = tuple(int(s) for s in sizes)
    total = int(np.prod(sizes)) if sizes else 0
    if len(sizes) != k:
        raise BadParams(f"{len(sizes)} sizes for k={k}")
    if not 0 <= e <= total:
        raise Infeasible(f"cannot pick {e} of {total} legal tuples")
    rng = make_rng(seed, *stream)
    picks = rng.choice(total, size=e, replace=False)
    coords = np.unravel_index(np.sort(picks), sizes)
    edges = frozenset(zip(*(c.tolist() for c in coords)))
    return KPartiteHypergraph._trusted(k, sizes, edges)


def random_min_degree(k: int, n: int, delta: int, seed, *stream: int) -> KPartiteHypergraph:
    """Random graph with every vertex degree at least ``delta``.

    Repeatedly picks a deficient vertex at random and adds a random
    missing edge through it; stops once no vertex is deficient.
    """
    if not 0 <= delta <= n ** (k - 1):
        raise Infeasible(f"delta={delta} exceeds n^(k-1)={n ** (k - 1)}")
    rng = make_rng(seed, *stream)
    edges: set[tuple[int, ...]] = set()
    deg = np.zeros((k, n), dtype=np.int64)
    while True:
        short = np.argwhere(deg < delta)
        if len(short) == 0:
            break
        c, p = short[rng.integers(len(short))]
        while True:
            t = rng.integers(n, size=k)
            t[c] = p
            t = tuple(int(a) for a in t)
            if t not in edges:
                break
        edges.add(t)
        for cc, pp in enumerate(t):
            deg[cc, pp] += 1
    return KPartiteHypergraph._trusted(k, (n,) * k, frozenset(edges))


def random_bipartite(n: int, e: int, rng: np.random.Generator) -> BipartiteGraph:
    picks = rng.choice(n * n, size=e, replace=False)
    return BipartiteGraph(n, n, frozenset((int(a) // n, int(a) % n) for a in picks))
