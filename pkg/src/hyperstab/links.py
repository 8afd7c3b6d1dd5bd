"""
Coloured link systems between two matching edges of a 3-partite 3-graph.

Fix a legal triple ``S = (x_0, x_1, x_2)`` (``x_i`` in class ``i``) and two
disjoint edges ``f1``, ``f2``. Colour ``i`` collects the pairs ``(u, v)``
with ``u`` in ``f1``, ``v`` in ``f2`` such that ``{u, v, x_i}`` is an edge.
Because ``u`` and ``v`` must sit in the two classes other than ``i``, each
colour has exactly two candidate slots, six in total:

    slot 0 of colour i: (f1's class-j vertex, f2's class-l vertex)
    slot 1 of colour i: (f1's class-l vertex, f2's class-j vertex)

with ``j < l`` the classes other than ``i``. One edge per colour, pairwise
disjoint, lets two matching edges be traded for three.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .core import KPartiteHypergraph, Matching, VertexRef
from .errors import BadArity, NotInMatching, Overlap
from .report import FAIL, PASS, VerificationReport

__all__ = [
    "LinkSystem",
    "link_system",
    "rainbow_extension",
    "extension_lemma_census",
    "extend_matching",
]

OTHER_CLASSES = {0: (1, 2), 1: (0, 2), 2: (0, 1)}

# abstract context used when a system is built from a bare slot pattern
_CANON_S = (VertexRef(0, 2), VertexRef(1, 2), VertexRef(2, 2))
_CANON_F1 = (0, 0, 0)
_CANON_F2 = (1, 1, 1)


@dataclass(frozen=True)
class LinkSystem:
    present: tuple[tuple[bool, bool], tuple[bool, bool], tuple[bool, bool]]
    S: tuple[VertexRef, VertexRef, VertexRef] = _CANON_S
    f1: tuple[int, int, int] = _CANON_F1
    f2: tuple[int, int, int] = _CANON_F2

    @classmethod
    def from_mask(cls, mask: int) -> LinkSystem:
        """Slot pattern from a 6-bit mask; bit ``2*i + s`` is colour ``i`` slot ``s``."""
        present = tuple((bool(mask >> (2 * i) & 1), bool(mask >> (2 * i + 1) & 1)) for i in range(3))
        return cls(present)

    @property
    def mask(self) -> int:
        return sum(1 << (2 * i + s) for i in range(3) for s in range(2) if self.present[i][s])

    @property
    def color_counts(self) -> tuple[int, int, int]:
        return tuple(sum(p) for p in self.present)

    @property
    def total(self) -> int:
        return sum(self.color_counts)

    def slot_edge(self, color: int, slot: int) -> tuple[VertexRef, VertexRef]:
        j, l = OTHER_CLASSES[color]
        if slot == 0:
            return VertexRef(j, self.f1[j]), VertexRef(l, self.f2[l])
        return VertexRef(l, self.f1[l]), VertexRef(j, self.f2[j])

    def edges(self) -> list[tuple[int, int, tuple[VertexRef, VertexRef]]]:
        """Present ``(colour, slot, (u, v))`` triples."""
        return [
            (i, s, self.slot_edge(i, s))
            for i in range(3)
            for s in range(2)
            if self.present[i][s]
        ]


def _slot_endpoints(color: int, slot: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # (side, class) identities; side 0 is f1, side 1 is f2
    j, l = OTHER_CLASSES[color]
    return ((0, j), (1, l)) if slot == 0 else ((0, l), (1, j))


def link_system(
    H: KPartiteHypergraph,
    S: Sequence[VertexRef],
    f1: Sequence[int],
    f2: Sequence[int],
) -> LinkSystem:
    if H.k != 3:
        raise BadArity("link systems need a 3-partite 3-graph")
    S = sorted(VertexRef(*v) for v in S)
    f1, f2 = tuple(f1), tuple(f2)
    if [v.class_index for v in S] != [0, 1, 2]:
        raise Overlap("S must hold exactly one vertex of each class")
    if any(a == b for a, b in zip(f1, f2)):
        raise Overlap("f1 and f2 must be disjoint")
    if any(v.position in (f1[v.class_index], f2[v.class_index]) for v in S):
        raise Overlap("S must avoid f1 and f2")
    present = []
    for i in range(3):
        row = []
        for s in range(2):
            j, l = OTHER_CLASSES[i]
            t = [0, 0, 0]
            t[i] = S[i].position
            if s == 0:
                t[j], t[l] = f1[j], f2[l]
            else:
                t[l], t[j] = f1[l], f2[j]
            row.append(tuple(t) in H.edges)
        present.append(tuple(row))
    return LinkSystem(tuple(present), tuple(S), f1, f2)


def _rainbow_slots(present) -> tuple[int, int, int] | None:
    for slots in product(range(2), repeat=3):
        if not all(present[i][s] for i, s in enumerate(slots)):
            continue
        ends = [e for i, s in enumerate(slots) for e in _slot_endpoints(i, s)]
        if len(set(ends)) == 6:
            return slots
    return None


def rainbow_extension(sys: LinkSystem):
    """Three disjoint present edges, one per colour, as ``(u, v)`` pairs; else ``None``."""
    slots = _rainbow_slots(sys.present)
    if slots is None:
        return None
    return tuple(sys.slot_edge(i, s) for i, s in enumerate(slots))


def _perfect_matchings(present) -> list[tuple[tuple[int, int], ...]]:
    slots = [(i, s) for i in range(3) for s in range(2) if present[i][s]]
    out = []
    for trio in combinations(slots, 3):
        ends = [e for i, s in trio for e in _slot_endpoints(i, s)]
        if len(set(ends)) == 6:
            out.append(trio)
    return out


def extension_lemma_census() -> VerificationReport:
    """Check all 64 slot patterns: five or more present edges always give a rainbow triple."""
    start = time.perf_counter()
    pairs = [frozenset(_slot_endpoints(i, s)) for i in range(3) for s in range(2)]
    slots_distinct = len(set(pairs)) == 6
    rows = []
    counterexamples = []
    by_total: dict[int, dict[str, int]] = {}
    non_rainbow_pm = 0
    for mask in range(64):
        sys = LinkSystem.from_mask(mask)
        slots = _rainbow_slots(sys.present)
        pms = _perfect_matchings(sys.present)
        bad_pms = sum(1 for pm in pms if len({i for i, _ in pm}) < 3)
        non_rainbow_pm += bad_pms
        row = {
            "mask": mask,
            "total": sys.total,
            "color_counts": list(sys.color_counts),
            "extension": slots is not None,
            "slots": list(slots) if slots is not None else None,
            "perfect_matchings": len(pms),
            "non_rainbow_perfect_matchings": bad_pms,
        }
        rows.append(row)
        tally = by_total.setdefault(sys.total, {"admit": 0, "deny": 0})
        tally["admit" if slots is not None else "deny"] += 1
        if sys.total >= 5 and slots is None:
            counterexamples.append({"mask": mask, "total": sys.total})
    status = FAIL if counterexamples or not slots_distinct else PASS
    return VerificationReport(
        claim_id="lem-2.1",
        params={"configurations": 64},
        instances_tested=64,
        counterexamples=counterexamples,
        status=status,
        wall_time=time.perf_counter() - start,
        details={
            "rows": rows,
            "by_total": {str(t): v for t, v in sorted(by_total.items())},
            "slots_distinct": slots_distinct,
            "non_rainbow_perfect_matchings": non_rainbow_pm,
        },
    )


def extend_matching(
    H: KPartiteHypergraph,
    M: Matching,
    S: Sequence[VertexRef],
    f1: Sequence[int],
    f2: Sequence[int],
) -> Matching | None:
    """Trade ``f1, f2`` in ``M`` for three edges through ``S``; ``None`` if impossible."""
    f1, f2 = tuple(f1), tuple(f2)
    if f1 not in M.edges or f2 not in M.edges:
        raise NotInMatching("f1 and f2 must both belong to the matching")
    S = sorted(VertexRef(*v) for v in S)
    if set(S) & M.vertices():
        raise Overlap("S must avoid the vertices of the matching")
    sys = link_system(H, S, f1, f2)
    triple = rainbow_extension(sys)
    if triple is None:
        return None
    new_edges = [t for t in M.edges if t not in (f1, f2)]
    for i, (u, v) in enumerate(triple):
        t = [0, 0, 0]
        t[i] = S[i].position
        t[u.class_index] = u.position
        t[v.class_index] = v.position
        new_edges.append(tuple(t))
    out = Matching(tuple(new_edges))
    assert out.is_valid(H) and out.size == M.size + 1
    return out
