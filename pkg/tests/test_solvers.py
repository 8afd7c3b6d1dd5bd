import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from hyperstab import VertexRef, build
from hyperstab.constructions import complete, extremal_hknm, random_hypergraph, rainbow_tight_family
from hyperstab.errors import BudgetExceeded, TooLarge
from hyperstab.solvers import (
    BipartiteGraph,
    bipartite_max_matching,
    bipartite_min_cover,
    brute_nu,
    brute_tau,
    default_budget,
    max_matching,
    min_vertex_cover,
    rainbow_matching,
)


@st.composite
def hypergraphs(draw, k=3, max_size=3, max_edges=14):
    sizes = [draw(st.integers(1, max_size)) for _ in range(k)]
    universe = O.legal_tuples(sizes)
    edges = draw(st.lists(st.sampled_from(universe), unique=True, max_size=max_edges))
    return build(k, sizes, edges)


@st.composite
def bipartite(draw, max_side=4, sides=None):
    L, R = sides or (draw(st.integers(1, max_side)), draw(st.integers(1, max_side)))
    pairs = [(u, v) for u in range(L) for v in range(R)]
    return BipartiteGraph(L, R, draw(st.lists(st.sampled_from(pairs), unique=True)))


# ------------------------------------------------------------ fixed values

def test_matching_examples():
    assert max_matching(complete(3, 2)).size == 2
    assert max_matching(extremal_hknm(3, 5, 2)).size == 2
    assert max_matching(build(3, [2, 2, 2])).size == 0


def test_cover_examples():
    assert min_vertex_cover(extremal_hknm(3, 5, 2)).size == 3
    assert min_vertex_cover(build(3, [1, 1, 1], [(0, 0, 0)])).size == 1
    assert min_vertex_cover(complete(3, 2)).size == 2


def test_brute_examples():
    H = extremal_hknm(3, 3, 2)
    assert brute_tau(H) == 3
    empty = build(3, [2, 2, 2])
    assert (brute_nu(empty), brute_tau(empty)) == (0, 0)


def test_brute_limits():
    with pytest.raises(TooLarge):
        brute_nu(complete(3, 3))
    with pytest.raises(TooLarge):
        brute_tau(complete(3, 7))


def test_h4_boundary():
    H = extremal_hknm(4, 3, 2)
    assert (H.e, max_matching(H).size, min_vertex_cover(H).size) == (47, 2, 3)


def test_budget_exceeded_carries_best():
    H = extremal_hknm(3, 6, 3)
    with pytest.raises(BudgetExceeded) as info:
        max_matching(H, budget=1)
    assert info.value.best is not None and info.value.best.is_valid(H)
    with pytest.raises(BudgetExceeded) as info:
        min_vertex_cover(H, budget=1)
    assert info.value.best.covers(H)


def test_env_budget(monkeypatch):
    monkeypatch.delenv("HYPERSTAB_BUDGET", raising=False)
    assert default_budget() is None
    monkeypatch.setenv("HYPERSTAB_BUDGET", "500")
    assert default_budget() == 500


# ---------------------------------------------------- properties vs oracles

@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_nu_tau_match_reference(H):
    M = max_matching(H)
    C = min_vertex_cover(H)
    assert M.is_valid(H) and C.covers(H)
    assert M.size == O.nu(H.edges)
    assert C.size == O.tau(H.edges, H.sizes)
    assert M.size <= C.size <= H.k * M.size


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_edges=10))
def test_matching_is_lex_least(H):
    M = max_matching(H)
    assert M.edges == min(O.all_max_matchings(H.edges, M.size), default=())


@settings(max_examples=40, deadline=None)
@given(hypergraphs(k=4, max_size=2, max_edges=12))
def test_four_partite_against_reference(H):
    assert max_matching(H).size == O.nu(H.edges)
    assert min_vertex_cover(H).size == O.tau(H.edges, H.sizes)


def test_solvers_deterministic():
    H = random_hypergraph(3, (4, 4, 4), 30, 11)
    assert max_matching(H) == max_matching(H)
    assert min_vertex_cover(H) == min_vertex_cover(H)


# ------------------------------------------------------------- bipartite

def test_bipartite_examples():
    assert bipartite_max_matching(BipartiteGraph(2, 2, [(0, 0), (1, 1)])).size == 2
    assert bipartite_max_matching(BipartiteGraph(3, 3, [(0, 0), (0, 1), (0, 2)])).size == 1
    G = BipartiteGraph(3, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 2)])
    assert bipartite_max_matching(G).size == 2
    C = bipartite_min_cover(BipartiteGraph(2, 1, [(0, 0), (1, 0)]))
    assert C.vertices == {VertexRef(1, 0)}
    assert bipartite_min_cover(BipartiteGraph(3, 3, [(i, i) for i in range(3)])).size == 3
    assert bipartite_min_cover(BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])).size == 2


@settings(max_examples=150, deadline=None)
@given(bipartite())
def test_konig(G):
    M = bipartite_max_matching(G)
    C = bipartite_min_cover(G)
    assert M.is_valid(G)
    assert C.covers(G)
    assert M.size == C.size
    assert M.size == O.nu(G.edges)


# --------------------------------------------------------------- rainbow

def test_rainbow_examples():
    G1 = BipartiteGraph(2, 2, [(0, 0)])
    assert rainbow_matching([G1, BipartiteGraph(2, 2, [(1, 1)])]) is not None
    assert rainbow_matching([G1, BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0)])]) is None
    assert rainbow_matching(rainbow_tight_family(3, 2)) is None
    assert rainbow_matching(rainbow_tight_family(4, 3)) is None
    assert rainbow_matching(rainbow_tight_family(2, 1)) is None
    assert len(rainbow_matching([])) == 0


@settings(max_examples=150, deadline=None)
@given(st.lists(bipartite(sides=(3, 3)), min_size=1, max_size=3))
def test_rainbow_against_reference(family):
    R = rainbow_matching(family)
    assert (R is not None) == O.has_rainbow([G.edges for G in family])
    if R is not None:
        assert R.is_valid(family) and len(R) == len(family)
