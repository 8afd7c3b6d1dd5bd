"""
k-partite k-uniform hypergraphs and the basic operations on them.

A hypergraph stores ``k`` vertex classes with sizes ``n_1, ..., n_k``. A
vertex is addressed by ``(class_index, position)``; positions are 0-based
and also define the linear order used by shifting (lower position comes
first). An edge is a k-tuple whose slot ``i`` holds a position in class
``i``, so every edge is legal by construction.

Hypergraphs are immutable; every operation returns a new object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import BadArity, BadLevel, DuplicateEdge, OutOfRange, Overlap

Edge = tuple[int, ...]

__all__ = [
    "VertexRef",
    "KPartiteHypergraph",
    "BipartiteGraph",
    "Matching",
    "VertexCover",
    "build",
    "is_legal",
    "legal_set",
    "degree",
    "min_l_degree",
    "remove_vertices",
    "link_graph",
    "edges_between",
    "class_vertices",
    "load",
    "save",
]


class VertexRef(NamedTuple):
    class_index: int
    position: int


def _check_edges(k: int, sizes: Sequence[int], edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    seen: set[Edge] = set()
    for raw in edges:
        t = tuple(int(p) for p in raw)
        if len(t) != k:
            raise BadArity(f"edge {t} has {len(t)} slots, expected {k}")
        for c, p in enumerate(t):
            if not 0 <= p < sizes[c]:
                raise OutOfRange(f"edge {t}: position {p} outside class {c} of size {sizes[c]}")
        if t in seen:
            raise DuplicateEdge(f"edge {t} listed twice")
        seen.add(t)
    return frozenset(seen)


@dataclass(frozen=True, eq=False)
class KPartiteHypergraph:
    k: int
    sizes: tuple[int, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 2:
            raise BadArity(f"k must be at least 2, got {self.k}")
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) != self.k:
            raise BadArity(f"{len(sizes)} class sizes given for k={self.k}")
        if any(s < 0 for s in sizes):
            raise OutOfRange(f"negative class size in {sizes}")
        object.__setattr__(self, "sizes", sizes)
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", _check_edges(self.k, sizes, self.edges))
        else:
            # re-validate: frozensets can still hold junk
            _check_edges(self.k, sizes, self.edges)

    def __eq__(self, other):
        if not isinstance(other, KPartiteHypergraph):
            return NotImplemented
        return self.k == other.k and self.sizes == other.sizes and self.edges == other.edges

    def __hash__(self):
        return hash((self.k, self.sizes, self.edges))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edges

    def __repr__(self):
        return f"KPartiteHypergraph(k={self.k}, sizes={list(self.sizes)}, e={len(self.edges)})"

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order; the fixed order every solver uses."""
        return tuple(sorted(self.edges))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    def vertex_id(self, v: VertexRef) -> int:
        return self.offsets[v[0]] + v[1]

    def vertex_at(self, vid: int) -> VertexRef:
        for c in range(self.k - 1, -1, -1):
            if vid >= self.offsets[c]:
                return VertexRef(c, vid - self.offsets[c])
        raise OutOfRange(vid)

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(c, p) for c in range(self.k) for p in range(self.sizes[c])]

    def edge_mask(self, edge: Sequence[int]) -> int:
        m = 0
        for c, p in enumerate(edge):
            m |= 1 << (self.offsets[c] + p)
        return m

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Vertex bitmask of each edge, aligned with :attr:`edge_list`."""
        return tuple(self.edge_mask(t) for t in self.edge_list)

    @cached_property
    def vertex_degrees(self) -> tuple[tuple[int, ...], ...]:
        deg = [[0] * s for s in self.sizes]
        for t in self.edges:
            for c, p in enumerate(t):
                deg[c][p] += 1
        return tuple(tuple(d) for d in deg)

    @classmethod
    def _trusted(cls, k: int, sizes: tuple[int, ...], edges: frozenset[Edge]) -> KPartiteHypergraph:
        # internal fast path for edge sets that are valid by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "sizes", sizes)
        object.__setattr__(obj, "edges", edges)
        return obj

    def contains_vertex(self, v: VertexRef) -> bool:
        return 0 <= v[0] < self.k and 0 <= v[1] < self.sizes[v[0]]

    def with_edges(self, edges: Iterable[Sequence[int]]) -> KPartiteHypergraph:
        return KPartiteHypergraph(self.k, self.sizes, edges)

    def to_dict(self) -> dict:
        return {"k": self.k, "sizes": list(self.sizes), "edges": [list(t) for t in self.edge_list]}

    @classmethod
    def from_dict(cls, data: dict) -> KPartiteHypergraph:
        try:
            k, sizes, edges = data["k"], data["sizes"], data["edges"]
        except (KeyError, TypeError) as exc:
            raise BadArity(f"hypergraph JSON needs k, sizes, edges: {exc}") from None
        return build(k, sizes, edges)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def build(k: int, class_sizes: Sequence[int], edges: Iterable[Sequence[int]] = ()) -> KPartiteHypergraph:
    """Validate and build a hypergraph; raises OutOfRange, DuplicateEdge or BadArity."""
    return KPartiteHypergraph(int(k), tuple(class_sizes), list(edges))


def load(path) -> KPartiteHypergraph:
    with open(path) as fh:
        return KPartiteHypergraph.from_dict(json.load(fh))


def save(H: KPartiteHypergraph, path) -> Path:
    path = Path(path)
    path.write_text(H.dumps() + "\n")
    return path


def class_vertices(H: KPartiteHypergraph, c: int) -> list[VertexRef]:
    return [VertexRef(c, p) for p in range(H.sizes[c])]


def is_legal(T: Iterable[VertexRef]) -> bool:
    classes = [v[0] for v in T]
    return len(classes) == len(set(classes))


def legal_set(T: Iterable[VertexRef]) -> frozenset[VertexRef]:
    T = frozenset(VertexRef(*v) for v in T)
    if not is_legal(T):
        raise Overlap(f"{sorted(T)} has two vertices in one class")
    return T


def degree(H: KPartiteHypergraph, T: Iterable[VertexRef]) -> int:
    """Number of edges containing every vertex of ``T`` (0 for illegal ``T``)."""
    T = set(VertexRef(*v) for v in T)
    if not is_legal(T):
        return 0
    if any(not H.contains_vertex(v) for v in T):
        return 0
    if len(T) == 1:
        (c, p), = T
        return H.vertex_degrees[c][p]
    return sum(1 for t in H.edges if all(t[c] == p for c, p in T))


def min_l_degree(H: KPartiteHypergraph, l: int) -> int:
    """Minimum degree over legal ``l``-sets; ``l = 0`` gives ``e(H)``."""
    if not 0 <= l <= H.k:
        raise BadLevel(f"l={l} outside [0, {H.k}]")
    if l == 0:
        return H.e
    best = None
    for classes in combinations(range(H.k), l):
        n_sets = 1
        for c in classes:
            n_sets *= H.sizes[c]
        if n_sets == 0:
            continue
        counts: dict[tuple[int, ...], int] = {}
        for t in H.edges:
            key = tuple(t[c] for c in classes)
            counts[key] = counts.get(key, 0) + 1
        low = 0 if len(counts) < n_sets else min(counts.values())
        best = low if best is None else min(best, low)
        if best == 0:
            break
    return 0 if best is None else best


def remove_vertices(H: KPartiteHypergraph, T: Iterable[VertexRef]):
    """``H - T``: drop the vertices of ``T`` and every edge meeting them.

    Remaining positions are re-indexed to stay contiguous. Returns
    ``(graph, mapping)`` where ``mapping`` sends each surviving old
    vertex to its new :class:`VertexRef`.
    """
    drop = [set() for _ in range(H.k)]
    for c, p in T:
        drop[c].add(p)
    remap: list[dict[int, int]] = []
    mapping: dict[VertexRef, VertexRef] = {}
    for c in range(H.k):
        m = {}
        for p in range(H.sizes[c]):
            if p not in drop[c]:
                m[p] = len(m)
                mapping[VertexRef(c, p)] = VertexRef(c, m[p])
        remap.append(m)
    sizes = tuple(len(m) for m in remap)
    edges = frozenset(
        tuple(remap[c][p] for c, p in enumerate(t))
        for t in H.edges
        if all(p not in drop[c] for c, p in enumerate(t))
    )
    return KPartiteHypergraph._trusted(H.k, sizes, edges), mapping


def link_graph(
    H: KPartiteHypergraph,
    x: VertexRef,
    A: Sequence[VertexRef],
    B: Sequence[VertexRef],
) -> BipartiteGraph:
    """Link graph of ``x`` with respect to ``A`` and ``B`` (3-graphs only).

    Left vertex ``i`` is ``A[i]`` and right vertex ``j`` is ``B[j]``;
    ``(i, j)`` is an edge iff ``{A[i], B[j], x}`` is an edge of ``H``.
    """
    if H.k != 3:
        raise BadArity("link graphs are defined for 3-graphs only")
    x = VertexRef(*x)
    A = [VertexRef(*v) for v in A]
    B = [VertexRef(*v) for v in B]
    if set(A) & set(B) or x in A or x in B:
        raise Overlap("A, B and x must be pairwise disjoint")
    pairs = set()
    for i, u in enumerate(A):
        for j, v in enumerate(B):
            if len({u[0], v[0], x[0]}) < 3:
                continue
            t = [0, 0, 0]
            for c, p in (u, v, x):
                t[c] = p
            if tuple(t) in H.edges:
                pairs.add((i, j))
    return BipartiteGraph(len(A), len(B), frozenset(pairs))


def edges_between(H: KPartiteHypergraph, A: Iterable[VertexRef], B: Iterable[VertexRef]) -> int:
    """Number of edges meeting both ``A`` and ``B``."""
    A = set(VertexRef(*v) for v in A)
    B = set(VertexRef(*v) for v in B)
    if A & B:
        raise Overlap("A and B must be disjoint")
    count = 0
    for t in H.edges:
        verts = [VertexRef(c, p) for c, p in enumerate(t)]
        if any(v in A for v in verts) and any(v in B for v in verts):
            count += 1
    return count


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Two-sided graph; left vertices ``0..left_size-1``, right ``0..right_size-1``."""

    left_size: int
    right_size: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        raw = self.edges
        if isinstance(raw, frozenset):
            raw = list(raw)
        seen = set()
        for pair in raw:
            u, v = (int(a) for a in pair)
            if not (0 <= u < self.left_size and 0 <= v < self.right_size):
                raise OutOfRange(f"edge {(u, v)} out of range")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge {(u, v)} listed twice")
            seen.add((u, v))
        object.__setattr__(self, "edges", frozenset(seen))

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.left_size, self.right_size, self.edges) == (other.left_size, other.right_size, other.edges)

    def __hash__(self):
        return hash((self.left_size, self.right_size, self.edges))

    def __len__(self):
        return len(self.edges)

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.left_size)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    def to_dict(self) -> dict:
        return {"left": self.left_size, "right": self.right_size, "edges": [list(p) for p in sorted(self.edges)]}

    @classmethod
    def from_dict(cls, data: dict) -> BipartiteGraph:
        return cls(data["left"], data["right"], [tuple(p) for p in data["edges"]])


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, kept in sorted order."""

    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(t) for t in self.edges)))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_valid(self, H: KPartiteHypergraph | BipartiteGraph) -> bool:
        used: set[tuple[int, int]] = set()
        for t in self.edges:
            if t not in H.edges:
                return False
            for c, p in enumerate(t):
                if (c, p) in used:
                    return False
                used.add((c, p))
        return True

    def is_perfect(self, H: KPartiteHypergraph) -> bool:
        return self.is_valid(H) and all(s == len(self.edges) for s in H.sizes)

    def vertices(self) -> set[VertexRef]:
        return {VertexRef(c, p) for t in self.edges for c, p in enumerate(t)}

    def to_dict(self) -> dict:
        return {"matching": [list(t) for t in self.edges]}


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[VertexRef] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(VertexRef(*v) for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def covers(self, H: KPartiteHypergraph | BipartiteGraph) -> bool:
        return all(any((c, p) in self.vertices for c, p in enumerate(t)) for t in H.edges)

    def to_dict(self) -> dict:
        return {"cover": [list(v) for v in sorted(self.vertices)]}


def all_legal_tuples(sizes: Sequence[int]) -> list[Edge]:
    return list(product(*(range(s) for s in sizes)))
