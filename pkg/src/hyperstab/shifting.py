"""
Partite shifting (compression) of k-partite hypergraphs.

``shift(H, x, y)`` moves every edge through ``y`` onto the earlier vertex
``x`` of the same class unless the moved edge is already present. Repeating
this until nothing moves gives a partitely shifted hypergraph, in which
the neighbourhoods inside each class are nested by position.
"""

from __future__ import annotations

from typing import Iterator

from .core import KPartiteHypergraph, VertexRef
from .errors import DifferentClass, NotOrdered, OutOfRange

__all__ = [
    "shift",
    "shift_closure",
    "shift_trace",
    "is_partitely_shifted",
    "has_nested_neighborhoods",
    "neighborhood",
]


def _shift_edges(edges: frozenset, c: int, x: int, y: int) -> frozenset | None:
    """Shifted edge set, or ``None`` when the shift changes nothing."""
    moved = []
    for t in edges:
        if t[c] == y:
            s = t[:c] + (x,) + t[c + 1:]
            if s not in edges:
                moved.append((t, s))
    if not moved:
        return None
    out = set(edges)
    for t, s in moved:
        out.discard(t)
        out.add(s)
    return frozenset(out)


def shift(H: KPartiteHypergraph, x: VertexRef, y: VertexRef) -> KPartiteHypergraph:
    """Apply the shift that replaces ``y`` by the earlier vertex ``x``.

    ``x`` and ``y`` must lie in the same class with ``x`` strictly before
    ``y``. The edge count never changes.
    """
    x, y = VertexRef(*x), VertexRef(*y)
    if x.class_index != y.class_index:
        raise DifferentClass(f"{x} and {y} lie in different classes")
    if not (H.contains_vertex(x) and H.contains_vertex(y)):
        raise OutOfRange(f"{x} or {y} is not a vertex")
    if x.position >= y.position:
        raise NotOrdered(f"shift needs x before y, got positions {x.position} >= {y.position}")
    new = _shift_edges(H.edges, x.class_index, x.position, y.position)
    if new is None:
        return H
    return KPartiteHypergraph._trusted(H.k, H.sizes, new)


def _closure_steps(H: KPartiteHypergraph) -> Iterator[tuple[VertexRef, VertexRef, frozenset]]:
    # sweep classes in order, pairs lexicographically; restart after a change
    edges = H.edges
    while True:
        changed = False
        for c in range(H.k):
            n = H.sizes[c]
            for x in range(n):
                for y in range(x + 1, n):
                    new = _shift_edges(edges, c, x, y)
                    if new is not None:
                        edges = new
                        changed = True
                        yield VertexRef(c, x), VertexRef(c, y), edges
                        break
                if changed:
                    break
            if changed:
                break
        if not changed:
            return


def shift_closure(H: KPartiteHypergraph) -> KPartiteHypergraph:
    """Shift until no same-class shift changes the edge set.

    The result depends on the sweep order, which is fixed: classes in
    order, then pairs ``(x, y)`` lexicographically, restarting after every
    change. Terminates because each change lowers the total position sum.
    """
    edges = H.edges
    for _, _, edges in _closure_steps(H):
        pass
    if edges is H.edges:
        return H
    return KPartiteHypergraph._trusted(H.k, H.sizes, edges)


def shift_trace(H: KPartiteHypergraph) -> list[tuple[tuple[VertexRef, VertexRef] | None, KPartiteHypergraph]]:
    """Every intermediate graph of :func:`shift_closure`.

    Returns ``[(None, H), ((x, y), G_1), ...]`` where ``G_{i+1}`` is
    ``shift(G_i, x, y)`` and the last graph is partitely shifted.
    """
    out = [(None, H)]
    for x, y, edges in _closure_steps(H):
        out.append(((x, y), KPartiteHypergraph._trusted(H.k, H.sizes, edges)))
    return out


def neighborhood(H: KPartiteHypergraph, v: VertexRef) -> frozenset[tuple[int, ...]]:
    """Link of ``v`` as the set of edges with ``v``'s slot removed."""
    c, p = v
    return frozenset(t[:c] + t[c + 1:] for t in H.edges if t[c] == p)


def is_partitely_shifted(H: KPartiteHypergraph) -> bool:
    """True iff every same-class shift ``S_xy`` with ``x < y`` fixes ``H``."""
    for c in range(H.k):
        for x in range(H.sizes[c]):
            for y in range(x + 1, H.sizes[c]):
                if _shift_edges(H.edges, c, x, y) is not None:
                    return False
    return True


def has_nested_neighborhoods(H: KPartiteHypergraph) -> bool:
    """True iff within each class the links shrink weakly with position."""
    for c in range(H.k):
        links = [neighborhood(H, VertexRef(c, p)) for p in range(H.sizes[c])]
        if any(not links[p + 1] <= links[p] for p in range(len(links) - 1)):
            return False
    return True
