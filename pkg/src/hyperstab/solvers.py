"""
Exact solvers for matching number and vertex cover number.

``max_matching`` and ``min_vertex_cover`` are branch-and-bound searches over
vertex bitmasks. ``brute_nu`` / ``brute_tau`` are plain enumeration oracles
kept deliberately naive so they can cross-check the fast paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import BipartiteGraph, KPartiteHypergraph, Matching, VertexCover, VertexRef
from .errors import BudgetExceeded, HypergraphError, TooLarge

__all__ = [
    "BipartiteGraph",
    "RainbowAssignment",
    "max_matching",
    "min_vertex_cover",
    "matching_number",
    "cover_number",
    "brute_nu",
    "brute_tau",
    "bipartite_max_matching",
    "bipartite_min_cover",
    "rainbow_matching",
    "default_budget",
]

BRUTE_NU_MAX_EDGES = 24
BRUTE_TAU_MAX_VERTICES = 18


def default_budget() -> int | None:
    """Node budget from ``HYPERSTAB_BUDGET``; ``None`` (unlimited) if unset."""
    raw = os.environ.get("HYPERSTAB_BUDGET")
    if not raw:
        return None
    value = int(raw)
    return value if value > 0 else None


def _class_masks(H: KPartiteHypergraph) -> list[int]:
    return [((1 << s) - 1) << off for s, off in zip(H.sizes, H.offsets)]


def max_matching(H: KPartiteHypergraph, budget: int | None = None) -> Matching:
    """Maximum matching of ``H``.

    Branches on class-0 vertices in position order: match the vertex
    through each compatible edge (edges in sorted order), then leave it
    unmatched. A node is cut when the chosen edges plus the number of free,
    still-reachable vertices in the scarcest class cannot beat the
    incumbent. The first optimum met in this order is returned, which is
    the lexicographically least maximum matching as a sorted edge list.

    Raises :class:`BudgetExceeded` after ``budget`` search nodes; the
    exception carries the best matching found so far.
    """
    if H.e == 0:
        return Matching()
    n0 = H.sizes[0]
    by_first: list[list[tuple[int, tuple]]] = [[] for _ in range(n0)]
    for t, m in zip(H.edge_list, H.edge_masks):
        by_first[t[0]].append((m, t))
    suffix: list[list[int]] = [[] for _ in range(n0 + 1)]
    for i in range(n0 - 1, -1, -1):
        suffix[i] = [m for m, _ in by_first[i]] + suffix[i + 1]
    class_masks = _class_masks(H)
    off0 = H.offsets[0]

    # greedy pass equals the first leaf of the search
    best: list[tuple] = []
    used = 0
    for m, t in zip(H.edge_masks, H.edge_list):
        if not m & used:
            used |= m
            best.append(t)
    best_size = len(best)
    ceiling = min(H.sizes)
    nodes = 0
    chosen: list[tuple] = []

    def rec(i: int, U: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"max_matching exceeded {budget} nodes", best=Matching(best), nodes=nodes)
        union = 0
        for m in suffix[i]:
            if not m & U:
                union |= m
        if not union:
            if len(chosen) > best_size:
                best, best_size = list(chosen), len(chosen)
            return
        bound = min((union & cm).bit_count() for cm in class_masks)
        if len(chosen) + bound <= best_size:
            return
        low = union & class_masks[0]
        j = ((low & -low).bit_length() - 1) - off0
        for m, t in by_first[j]:
            if not m & U:
                chosen.append(t)
                rec(j + 1, U | m)
                chosen.pop()
                if best_size == ceiling:
                    return
        rec(j + 1, U)

    if best_size < ceiling:
        rec(0, 0)
    return Matching(best)


def min_vertex_cover(H: KPartiteHypergraph, budget: int | None = None) -> VertexCover:
    """Minimum vertex cover of ``H``.

    Exact hitting-set search: pick an uncovered edge with the fewest
    allowed vertices and branch on putting each of them in the cover (the
    j-th branch forbids the earlier ones). The lower bound is a greedy
    packing of disjoint uncovered edges; the starting incumbent is the
    vertex set of a maximal matching, so it never exceeds ``k * nu``.
    """
    masks = list(H.edge_masks)
    if not masks:
        return VertexCover()
    used = 0
    for m in masks:
        if not m & used:
            used |= m
    best_mask, best_size = used, used.bit_count()
    nodes = 0

    def rec(C: int, size: int, forbidden: int, remaining: list[int]) -> None:
        nonlocal best_mask, best_size, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(
                f"min_vertex_cover exceeded {budget} nodes",
                best=_cover_from_mask(H, best_mask),
                nodes=nodes,
            )
        if not remaining:
            if size < best_size:
                best_mask, best_size = C, size
            return
        packed, lb = 0, 0
        for m in remaining:
            if not m & packed:
                packed |= m
                lb += 1
        if size + lb >= best_size:
            return
        pick, pick_free = 0, 1 << 30
        allowed = ~forbidden
        for m in remaining:
            free = (m & allowed).bit_count()
            if free < pick_free:
                pick, pick_free = m & allowed, free
                if free <= 1:
                    break
        if pick_free == 0:
            return
        bits = pick
        block = forbidden
        while bits:
            b = bits & -bits
            bits ^= b
            rest = [m for m in remaining if not m & b]
            if all(m & ~block for m in rest):
                rec(C | b, size + 1, block, rest)
            block |= b

    rec(0, 0, 0, masks)
    return _cover_from_mask(H, best_mask)


def _cover_from_mask(H: KPartiteHypergraph, mask: int) -> VertexCover:
    out = []
    vid = 0
    while mask:
        if mask & 1:
            out.append(H.vertex_at(vid))
        mask >>= 1
        vid += 1
    return VertexCover(frozenset(out))


def matching_number(H: KPartiteHypergraph, budget: int | None = None) -> int:
    return max_matching(H, budget).size


def cover_number(H: KPartiteHypergraph, budget: int | None = None) -> int:
    return min_vertex_cover(H, budget).size


def brute_nu(H: KPartiteHypergraph) -> int:
    """Matching number by trying every edge subset, largest first."""
    if H.e > BRUTE_NU_MAX_EDGES:
        raise TooLarge(f"brute_nu limited to {BRUTE_NU_MAX_EDGES} edges, got {H.e}")
    edges = H.edge_list
    for r in range(min(len(edges), min(H.sizes, default=0)), 0, -1):
        for combo in combinations(edges, r):
            if all(len({t[c] for t in combo}) == r for c in range(H.k)):
                return r
    return 0


def brute_tau(H: KPartiteHypergraph) -> int:
    """Cover number by trying every vertex subset, smallest first."""
    if H.num_vertices > BRUTE_TAU_MAX_VERTICES:
        raise TooLarge(f"brute_tau limited to {BRUTE_TAU_MAX_VERTICES} vertices, got {H.num_vertices}")
    if H.e == 0:
        return 0
    verts = H.vertices()
    for r in range(1, len(verts) + 1):
        for combo in combinations(verts, r):
            chosen = set(combo)
            if all(any((c, p) in chosen for c, p in enumerate(t)) for t in H.edges):
                return r
    raise AssertionError("the full vertex set always covers")


def _augment(G: BipartiteGraph):
    match_left = [-1] * G.left_size
    match_right = [-1] * G.right_size
    adj = G.adjacency

    def try_left(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_left(match_right[v], seen):
                    match_left[u] = v
                    match_right[v] = u
                    return True
        return False

    for u in range(G.left_size):
        try_left(u, [False] * G.right_size)
    return match_left, match_right


def bipartite_max_matching(G: BipartiteGraph) -> Matching:
    """Maximum matching by repeated augmenting-path search."""
    match_left, _ = _augment(G)
    return Matching(tuple((u, v) for u, v in enumerate(match_left) if v != -1))


def bipartite_min_cover(G: BipartiteGraph) -> VertexCover:
    """Minimum cover via König: unreached left vertices plus reached right vertices.

    Reachability is along alternating paths from unmatched left vertices.
    Left vertex ``u`` is reported as ``VertexRef(0, u)``, right ``v`` as
    ``VertexRef(1, v)``.
    """
    match_left, match_right = _augment(G)
    adj = G.adjacency
    seen_left = [False] * G.left_size
    seen_right = [False] * G.right_size
    stack = [u for u in range(G.left_size) if match_left[u] == -1]
    for u in stack:
        seen_left[u] = True
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen_right[v]:
                seen_right[v] = True
                w = match_right[v]
                if w != -1 and not seen_left[w]:
                    seen_left[w] = True
                    stack.append(w)
    cover = [VertexRef(0, u) for u in range(G.left_size) if not seen_left[u]]
    cover += [VertexRef(1, v) for v in range(G.right_size) if seen_right[v]]
    return VertexCover(frozenset(cover))


@dataclass(frozen=True)
class RainbowAssignment:
    """One edge per family member, ordered by family index."""

    pairs: tuple[tuple[int, tuple[int, int]], ...]

    def __len__(self):
        return len(self.pairs)

    def is_valid(self, family: Sequence[BipartiteGraph]) -> bool:
        left, right = set(), set()
        indices = set()
        for i, (u, v) in self.pairs:
            if i in indices or (u, v) not in family[i].edges or u in left or v in right:
                return False
            indices.add(i)
            left.add(u)
            right.add(v)
        return True

    def to_dict(self) -> dict:
        return {"rainbow": [[i, list(e)] for i, e in self.pairs]}


def rainbow_matching(family: Sequence[BipartiteGraph]) -> RainbowAssignment | None:
    """A full rainbow matching of ``family`` or ``None`` if there is none.

    Backtracking that assigns the sparsest members first.
    """
    if not family:
        return RainbowAssignment(())
    L, R = family[0].left_size, family[0].right_size
    if any((G.left_size, G.right_size) != (L, R) for G in family):
        raise HypergraphError("rainbow family members must share both sides")
    if len(family) > min(L, R) or any(G.e == 0 for G in family):
        return None
    order = sorted(range(len(family)), key=lambda i: (family[i].e, i))
    options = [
        [((1 << u) | (1 << (L + v)), (u, v)) for u, v in sorted(family[i].edges)]
        for i in order
    ]
    picked: list[tuple[int, int]] = []

    def rec(depth: int, used: int) -> bool:
        if depth == len(options):
            return True
        for m, edge in options[depth]:
            if not m & used:
                picked.append(edge)
                if rec(depth + 1, used | m):
                    return True
                picked.pop()
        return False

    if not rec(0, 0):
        return None
    return RainbowAssignment(tuple(sorted(zip(order, picked))))
