import pytest

import oracles as O
from hyperstab import VertexRef, build
from hyperstab.constructions import complete, extremal_hknm
from hyperstab.core import Matching
from hyperstab.errors import NotInMatching, Overlap
from hyperstab.links import (
    LinkSystem,
    extend_matching,
    extension_lemma_census,
    link_system,
    rainbow_extension,
)

V = VertexRef
S = (V(0, 2), V(1, 2), V(2, 2))
F1, F2 = (0, 0, 0), (1, 1, 1)


def _realise(mask):
    """The 3x3x3 graph whose link system at S, F1, F2 is ``mask``."""
    sys = LinkSystem.from_mask(mask)
    edges = []
    for i, _, (u, v) in sys.edges():
        t = [0, 0, 0]
        t[i] = 2
        t[u.class_index] = u.position
        t[v.class_index] = v.position
        edges.append(tuple(t))
    return build(3, [3, 3, 3], edges)


def test_mask_round_trip_through_a_graph():
    for mask in range(64):
        H = _realise(mask)
        assert link_system(H, S, F1, F2).mask == mask


def test_extension_iff_three_disjoint_edges():
    # every realised edge holds exactly one vertex of S, so a 3-matching is rainbow
    for mask in range(64):
        H = _realise(mask)
        triple = rainbow_extension(LinkSystem.from_mask(mask))
        assert (triple is not None) == (O.nu(H.edges) == 3)


def test_complete_graph_has_all_six():
    sys = link_system(complete(3, 3), S, F1, F2)
    assert sys.total == 6 and sys.color_counts == (2, 2, 2)
    assert rainbow_extension(sys) is not None


def test_empty_system():
    H = build(3, [3, 3, 3], [F1, F2])
    assert link_system(H, S, F1, F2).total == 0


def test_extremal_sparse_system():
    H = extremal_hknm(3, 5, 2)
    T = (V(0, 4), V(1, 4), V(2, 4))
    sys = link_system(H, T, (2, 1, 1), (3, 2, 2))
    assert sys.total == 0
    sys = link_system(H, T, (2, 0, 1), (3, 2, 0))
    assert sys.present == ((True, False), (False, False), (False, False))
    for i, s, (u, v) in sys.edges():
        t = [0, 0, 0]
        t[i] = 4
        t[u.class_index], t[v.class_index] = u.position, v.position
        assert tuple(t) in H.edges


def test_five_or_six_always_extend():
    for missing in range(6):
        assert rainbow_extension(LinkSystem.from_mask(63 ^ (1 << missing))) is not None
    assert rainbow_extension(LinkSystem.from_mask(63)) is not None


def test_empty_colour_blocks():
    assert rainbow_extension(LinkSystem.from_mask(0b001111)) is None


def test_census_frozen_values():
    r = extension_lemma_census()
    assert r.status == "PASS" and r.claim_id == "lem-2.1"
    assert r.instances_tested == 64
    assert r.details["by_total"] == {
        "0": {"admit": 0, "deny": 1},
        "1": {"admit": 0, "deny": 6},
        "2": {"admit": 0, "deny": 15},
        "3": {"admit": 2, "deny": 18},
        "4": {"admit": 6, "deny": 9},
        "5": {"admit": 6, "deny": 0},
        "6": {"admit": 1, "deny": 0},
    }
    assert r.details["slots_distinct"]
    assert r.details["non_rainbow_perfect_matchings"] == 0


def test_extend_matching_complete():
    H = complete(3, 3)
    M = Matching((F1, F2))
    out = extend_matching(H, M, S, F1, F2)
    assert out is not None and out.size == 3 and out.is_perfect(H)


def test_extend_matching_blocked():
    r = extension_lemma_census()
    mask = next(row["mask"] for row in r.details["rows"] if row["total"] == 4 and not row["extension"])
    H = _realise(mask).with_edges(_realise(mask).edges | {F1, F2})
    M = Matching((F1, F2))
    assert extend_matching(H, M, S, F1, F2) is None


def test_extend_matching_errors():
    H = complete(3, 3)
    with pytest.raises(NotInMatching):
        extend_matching(H, Matching((F1,)), S, F1, F2)
    with pytest.raises(Overlap):
        extend_matching(H, Matching((F1, F2)), (V(0, 0), V(1, 2), V(2, 2)), F1, F2)
    with pytest.raises(Overlap):
        link_system(H, S, F1, F1)
