"""
Claim-level verification suites.

Each claim in :data:`CLAIMS` has an instance checker and a regime test.
The checker decides a single instance (``"ok"``, ``"violation"`` or
``"skip"`` when the hypotheses do not hold). The regime test says whether
the claim's hypotheses are reachable at the requested parameters; outside
the regime a suite reports ``EXPLORATORY`` and any violating instance is a
finding rather than a refutation.

Suites sample unconditionally and filter on the hypotheses. Trials are
independent and seeded by ``(seed, claim, params, trial index)``, so
reports are reproducible and ``jobs > 1`` gives identical output.
"""

from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Callable, Iterable

import numpy as np

from .constructions import (
    berge_decomposition,
    complete,
    extremal_edge_count,
    extremal_hknm,
    lemma24_tight_family,
    make_rng,
    rainbow_tight_family,
    random_bipartite,
    random_hypergraph,
    random_min_degree,
    stability_threshold,
)
from .core import BipartiteGraph, KPartiteHypergraph, VertexRef, min_l_degree
from .errors import BudgetExceeded
from .links import extension_lemma_census
from .report import EXPLORATORY, FAIL, PASS, VerificationReport, instance_hash
from .shifting import is_partitely_shifted, shift, shift_closure
from .solvers import (
    brute_nu,
    brute_tau,
    max_matching,
    min_vertex_cover,
    rainbow_matching,
)

__all__ = [
    "Claim",
    "CLAIMS",
    "recheck",
    "verify_construction",
    "verify_berge",
    "verify_aharoni_howard",
    "verify_rainbow_pairs",
    "verify_rainbow_theorem",
    "verify_intersecting_stability",
    "verify_shift_monotone",
    "verify_shifted_stability",
    "verify_main_stability",
    "verify_small_matching_stability",
    "verify_near_perfect_stability",
    "verify_daykin_haggkvist",
    "conjecture_search",
    "solver_cross_check",
    "verify_extension_census",
    "max_intersecting_size",
    "maximal_intersecting_families",
    "small_suite",
    "run_suite",
]

OK, VIOLATION, SKIP, BUDGET = "ok", "violation", "skip", "budget"


# ---------------------------------------------------------------- checkers

def _nu(H, budget):
    return max_matching(H, budget).size


def _tau(H, budget):
    return min_vertex_cover(H, budget).size


def _instance(H: KPartiteHypergraph, **extra) -> dict:
    return {**H.to_dict(), **extra}


def check_matching_threshold(H: KPartiteHypergraph, m: int, budget=None):
    """More than ``(m-1) n^(k-1)`` edges force a matching of size ``m``."""
    n = max(H.sizes)
    if H.e <= (m - 1) * n ** (H.k - 1):
        return SKIP, None
    nu = _nu(H, budget)
    if nu >= m:
        return OK, None
    return VIOLATION, _instance(H, m=m, nu=nu)


def check_intersecting(H: KPartiteHypergraph, budget=None):
    """An intersecting 3-graph with at least ``n1+n2+n3-1`` edges is a star."""
    if H.e < sum(H.sizes) - 1 or H.e == 0:
        return SKIP, None
    if _nu(H, budget) != 1:
        return SKIP, None
    tau = _tau(H, budget)
    if tau == 1:
        return OK, None
    return VIOLATION, _instance(H, nu=1, tau=tau)


def check_stability(H: KPartiteHypergraph, m: int, budget=None, require_shifted=False):
    """``e >= (m-1)n^2 + 3n - m`` and ``nu = m`` force ``tau = m``."""
    n = max(H.sizes)
    if H.e < stability_threshold(n, m):
        return SKIP, None
    if require_shifted and not is_partitely_shifted(H):
        return SKIP, None
    nu = _nu(H, budget)
    if nu != m:
        return SKIP, None
    tau = _tau(H, budget)
    if tau == m:
        return OK, None
    return VIOLATION, _instance(H, m=m, nu=nu, tau=tau)


def check_near_perfect(H: KPartiteHypergraph, budget=None):
    """``e > (n-2)n^2 + 2n`` and ``nu = n-1`` force ``tau = n-1``."""
    n = max(H.sizes)
    if H.e <= (n - 2) * n * n + 2 * n:
        return SKIP, None
    nu = _nu(H, budget)
    if nu != n - 1:
        return SKIP, None
    tau = _tau(H, budget)
    if tau == n - 1:
        return OK, None
    return VIOLATION, _instance(H, m=n - 1, nu=nu, tau=tau)


def check_min_degree_pm(H: KPartiteHypergraph, budget=None):
    """Minimum vertex degree at least ``2 n^(k-1) / 3`` forces a perfect matching."""
    n = H.sizes[0]
    if 3 * min_l_degree(H, 1) < 2 * n ** (H.k - 1):
        return SKIP, None
    nu = _nu(H, budget)
    if nu == n:
        return OK, None
    return VIOLATION, _instance(H, nu=nu)


def check_conjecture(H: KPartiteHypergraph, m: int, budget=None):
    """``e >= e(H_k(n,m)) + 1`` and ``nu = m`` force ``tau = m``."""
    n = max(H.sizes)
    if H.e < extremal_edge_count(H.k, n, m) + 1:
        return SKIP, None
    nu = _nu(H, budget)
    if nu != m:
        return SKIP, None
    tau = _tau(H, budget)
    if tau == m:
        return OK, None
    return VIOLATION, _instance(H, m=m, nu=nu, tau=tau)


def check_shift(H: KPartiteHypergraph, x: VertexRef, y: VertexRef, budget=None):
    """Shifting keeps the edge count and never raises the matching number."""
    G = shift(H, x, y)
    nu_h, nu_g = _nu(H, budget), _nu(G, budget)
    if G.e == H.e and nu_g <= nu_h:
        return OK, None
    return VIOLATION, _instance(H, shift=[list(x), list(y)], nu_before=nu_h, nu_after=nu_g)


def check_oracle(H: KPartiteHypergraph, budget=None):
    nu, tau = _nu(H, budget), _tau(H, budget)
    bnu, btau = brute_nu(H), brute_tau(H)
    if (nu, tau) == (bnu, btau):
        return OK, None
    return VIOLATION, _instance(H, nu=nu, tau=tau, brute_nu=bnu, brute_tau=btau)


def check_rainbow_family(family: list[BipartiteGraph], threshold: int):
    """Every member above ``threshold`` edges implies a rainbow matching."""
    if any(G.e <= threshold for G in family):
        return SKIP, None
    if rainbow_matching(family) is not None:
        return OK, None
    return VIOLATION, {"family": [G.to_dict() for G in family], "threshold": threshold}


def check_rainbow_pair(G1: BipartiteGraph, G2: BipartiteGraph):
    """Two non-empty graphs with more than ``2n`` edges in total admit a rainbow pair."""
    n = G1.left_size
    if G1.e == 0 or G2.e == 0 or G1.e + G2.e <= 2 * n:
        return SKIP, None
    if rainbow_matching([G1, G2]) is not None:
        return OK, None
    return VIOLATION, {"family": [G1.to_dict(), G2.to_dict()]}


# ------------------------------------------------------------- claim table

@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    in_regime: Callable[[dict], bool]


def _always(params: dict) -> bool:
    return True


def _never(params: dict) -> bool:
    return False


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("hknm", "H_k(n,m) has nu = m, tau = m+1 and the closed-form edge count", _always),
        Claim("thm-1.1", "complete k-partite k-graph splits into n^(k-1) perfect matchings", _always),
        Claim("thm-1.2", "e > (m-1) n^(k-1) implies nu >= m", _always),
        Claim("lem-2.1", "5 or more link edges give a one-per-colour disjoint triple", _always),
        Claim("thm-2.2", "every e(G_i) > (m-1) n gives a rainbow matching", _always),
        Claim("lem-2.3", "shifting never increases nu", _always),
        Claim(
            "lem-2.4",
            "intersecting, e >= n1+n2+n3-1 implies tau = 1 (min class >= 5)",
            lambda p: min(p["sizes"]) >= 5,
        ),
        Claim("lem-2.5", "e(G1), e(G2) >= 1 and e(G1)+e(G2) > 2n give a rainbow pair", lambda p: p["n"] >= 2),
        Claim("lem-2.6", "stability for n >= 12m, m >= 2", lambda p: p["m"] >= 2 and p["n"] >= 12 * p["m"]),
        Claim(
            "lem-3.1",
            "stability for partitely shifted graphs, n >= m+2, m >= 2",
            lambda p: p["m"] >= 2 and p["n"] >= p["m"] + 2,
        ),
        Claim("thm-3.2", "min vertex degree >= 2n^(k-1)/3 gives a perfect matching", _always),
        Claim("lem-3.3", "stability for m = n-1, n >= 162", lambda p: p["n"] >= 162),
        Claim("thm-1.3", "stability for n > max(m, 162)", lambda p: p["n"] > max(p["m"], 162)),
        Claim("conj-1.4", "k >= 4 stability above e(H_k(n,m)), n large", _never),
        Claim("oracle", "branch-and-bound solvers agree with brute force", _always),
    ]
}


def recheck(claim_id: str, instance: dict, budget=None) -> bool:
    """True iff ``instance`` (an archived counterexample) still violates ``claim_id``."""
    if claim_id in ("thm-2.2", "lem-2.5"):
        family = [BipartiteGraph.from_dict(g) for g in instance["family"]]
        if claim_id == "lem-2.5":
            outcome, _ = check_rainbow_pair(*family)
        else:
            outcome, _ = check_rainbow_family(family, instance["threshold"])
        return outcome == VIOLATION
    H = KPartiteHypergraph.from_dict(instance)
    if claim_id == "thm-1.2":
        outcome, _ = check_matching_threshold(H, instance["m"], budget)
    elif claim_id == "lem-2.4":
        outcome, _ = check_intersecting(H, budget)
    elif claim_id in ("thm-1.3", "lem-2.6"):
        outcome, _ = check_stability(H, instance["m"], budget)
    elif claim_id == "lem-3.1":
        outcome, _ = check_stability(H, instance["m"], budget, require_shifted=True)
    elif claim_id == "lem-3.3":
        outcome, _ = check_near_perfect(H, budget)
    elif claim_id == "thm-3.2":
        outcome, _ = check_min_degree_pm(H, budget)
    elif claim_id == "conj-1.4":
        outcome, _ = check_conjecture(H, instance["m"], budget)
    elif claim_id == "lem-2.3":
        x, y = (VertexRef(*v) for v in instance["shift"])
        outcome, _ = check_shift(H, x, y, budget)
    elif claim_id == "oracle":
        outcome, _ = check_oracle(H, budget)
    else:
        raise KeyError(f"no instance checker for claim {claim_id!r}")
    return outcome == VIOLATION


# ---------------------------------------------------------------- plumbing

def _salt(claim_id: str, *params: int) -> tuple[int, ...]:
    return (zlib.crc32(claim_id.encode()), *(int(p) for p in params))


def _map_trials(fn, trials: int, jobs: int = 1) -> list:
    if jobs <= 1 or trials < 2 * jobs:
        return [fn(i) for i in range(trials)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, range(trials), chunksize=max(1, trials // (8 * jobs))))


def _finish(claim_id: str, params: dict, seed: int, start: float, outcomes: Iterable, details=None) -> VerificationReport:
    report = VerificationReport(claim_id=claim_id, params=params, seed=seed, details=details or {})
    seen = set()
    for outcome, inst in outcomes:
        if outcome == SKIP:
            report.skipped += 1
        elif outcome == BUDGET:
            report.budget_skipped += 1
        else:
            report.instances_tested += 1
            if outcome == VIOLATION:
                h = instance_hash(inst)
                if h not in seen:
                    seen.add(h)
                    report.counterexamples.append(inst)
    if not CLAIMS[claim_id].in_regime(params):
        report.status = EXPLORATORY
    else:
        report.status = FAIL if report.counterexamples else PASS
    report.wall_time = time.perf_counter() - start
    return report


def _guard(check, *args):
    try:
        return check(*args)
    except BudgetExceeded:
        return BUDGET, None


def _relabel(H: KPartiteHypergraph, rng: np.random.Generator) -> KPartiteHypergraph:
    perms = [rng.permutation(s).tolist() for s in H.sizes]
    edges = frozenset(tuple(perms[c][p] for c, p in enumerate(t)) for t in H.edges)
    return KPartiteHypergraph._trusted(H.k, H.sizes, edges)


def _perturb(H: KPartiteHypergraph, rng: np.random.Generator, max_remove: int, max_add: int) -> KPartiteHypergraph:
    edges = set(H.edges)
    present = sorted(edges)
    for idx in rng.permutation(len(present))[: int(rng.integers(0, max_remove + 1))]:
        edges.discard(present[idx])
    absent = [t for t in product(*(range(s) for s in H.sizes)) if t not in H.edges]
    for idx in rng.permutation(len(absent))[: int(rng.integers(0, max_add + 1))]:
        edges.add(absent[idx])
    return KPartiteHypergraph._trusted(H.k, H.sizes, frozenset(edges))


def _grow_intersecting(candidates: list[tuple], masks: list[int], rng: np.random.Generator, start=()) -> list[int]:
    """Indices of a random maximal intersecting subfamily of ``candidates``."""
    chosen = list(start)
    for idx in rng.permutation(len(candidates)).tolist():
        if idx in chosen:
            continue
        m = masks[idx]
        if all(m & masks[j] for j in chosen):
            chosen.append(idx)
    return chosen


def _random_intersecting(sizes: tuple[int, ...], rng: np.random.Generator) -> KPartiteHypergraph:
    H0 = complete(len(sizes), sizes)
    cands, masks = list(H0.edge_list), list(H0.edge_masks)
    mode = int(rng.integers(3))
    start: list[int] = []
    if mode == 1:
        # seed with a random part of a star
        c = int(rng.integers(len(sizes)))
        p = int(rng.integers(sizes[c]))
        keep = rng.uniform(0.3, 1.0)
        start = [i for i, t in enumerate(cands) if t[c] == p and rng.random() < keep][:]
    elif mode == 2:
        # seed with a random part of the two-of-three family
        tight = lemma24_tight_family(*sizes) if len(sizes) == 3 else H0
        tight = _relabel(tight, rng)
        index = {t: i for i, t in enumerate(cands)}
        start = [index[t] for t in sorted(tight.edges) if rng.random() < 0.9]
    chosen = _grow_intersecting(cands, masks, rng, start)
    return KPartiteHypergraph._trusted(len(sizes), tuple(sizes), frozenset(cands[i] for i in chosen))


def _stability_instance(n: int, m: int, rng: np.random.Generator) -> KPartiteHypergraph:
    """Adversarial pool for the stability claims.

    Mixes (a) dense edges through ``m-1`` chosen vertices plus a random
    maximal intersecting family on the rest, (b) relabelled and perturbed
    copies of the extremal graph, (c) plain random graphs at the threshold.
    """
    thr = stability_threshold(n, m)
    mode = int(rng.integers(5))
    if mode <= 2 and m >= 2:
        A: set[tuple[int, int]] = set()
        spread = mode == 0
        while len(A) < m - 1:
            c = int(rng.integers(3)) if spread else 0
            A.add((c, int(rng.integers(n))))
        keep = rng.uniform(0.85, 1.0)
        edges = set()
        rest = []
        for t in product(range(n), repeat=3):
            if any((c, p) in A for c, p in enumerate(t)):
                if rng.random() < keep:
                    edges.add(t)
            else:
                rest.append(t)
        H0 = KPartiteHypergraph._trusted(3, (n,) * 3, frozenset(rest))
        masks = [H0.edge_mask(t) for t in rest]
        start: list[int] = []
        if mode == 2:
            # two-of-three core on the remaining vertices
            free = [[p for p in range(n) if (c, p) not in A] for c in range(3)]
            core = tuple(int(rng.choice(f)) for f in free)
            start = [i for i, t in enumerate(rest) if sum(a == b for a, b in zip(t, core)) >= 2]
        chosen = _grow_intersecting(rest, masks, rng, start)
        edges.update(rest[i] for i in chosen)
        return KPartiteHypergraph._trusted(3, (n,) * 3, frozenset(edges))
    if mode == 3 and n >= m + 1:
        return _perturb(_relabel(extremal_hknm(3, n, m), rng), rng, 2, 2)
    e = min(n ** 3, thr + int(rng.integers(0, n + 1)))
    return random_hypergraph(3, (n,) * 3, e, int(rng.integers(2**31)))


# ------------------------------------------------------------------ suites

def verify_construction(n_max: int = 6, k: int = 3) -> VerificationReport:
    """Exact check of ``H_k(n,m)`` for every ``m + 1 <= n <= n_max``."""
    start = time.perf_counter()
    rows, outcomes = [], []
    for n in range(2, n_max + 1):
        for m in range(1, n):
            H = extremal_hknm(k, n, m)
            nu, tau = _nu(H, None), _tau(H, None)
            row = {"n": n, "m": m, "e": H.e, "formula": extremal_edge_count(k, n, m), "nu": nu, "tau": tau}
            if k == 3:
                row["threshold"] = stability_threshold(n, m)
            good = H.e == row["formula"] and nu == m and tau == m + 1
            if k == 3:
                good = good and H.e == row["threshold"] - 1
            rows.append(row)
            outcomes.append((OK, None) if good else (VIOLATION, _instance(H, m=m, nu=nu, tau=tau)))
    return _finish("hknm", {"k": k, "n_max": n_max}, 0, start, outcomes, {"rows": rows})


def verify_berge(k: int, n: int) -> VerificationReport:
    start = time.perf_counter()
    matchings = berge_decomposition(k, n)
    K = complete(k, n)
    seen: set[tuple] = set()
    disjoint = True
    for M in matchings:
        for t in M.edges:
            if t in seen:
                disjoint = False
            seen.add(t)
    good = (
        len(matchings) == n ** (k - 1)
        and all(M.is_perfect(K) for M in matchings)
        and disjoint
        and seen == set(K.edges)
    )
    outcome = (OK, None) if good else (VIOLATION, {"k": k, "n": n})
    return _finish("thm-1.1", {"k": k, "n": n}, 0, start, [outcome], {"matchings": len(matchings)})


def max_intersecting_size(k: int, sizes) -> int:
    """Largest intersecting family of legal k-tuples, by exact max-clique search."""
    H = complete(k, sizes)
    masks = list(H.edge_masks)
    N = len(masks)
    adj = [sum(1 << j for j in range(N) if j != i and masks[i] & masks[j]) for i in range(N)]
    best = 0

    def colour_bound(cand: int) -> int:
        # greedy partition into pairwise-disjoint groups; a clique meets each group once
        colours = 0
        while cand:
            colours += 1
            q = cand
            while q:
                b = q & -q
                v = b.bit_length() - 1
                cand &= ~b
                q &= ~b & ~adj[v]
        return colours

    def rec(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        b = cand & -cand
        v = b.bit_length() - 1
        rec(size + 1, cand & adj[v])
        rec(size, cand & ~b)

    rec(0, (1 << N) - 1)
    return best


def _trial_threshold(n: int, m: int, seed: int, budget, i: int):
    rng = make_rng(seed, *_salt("thm-1.2", n, m), i)
    e = (m - 1) * n * n + 1
    H = random_hypergraph(3, (n,) * 3, e, int(rng.integers(2**31)))
    return _guard(check_matching_threshold, H, m, budget)


def verify_aharoni_howard(n: int, m: int, trials: int = 1000, seed: int = 0, exhaustive: bool = False,
                          budget=None, jobs: int = 1) -> VerificationReport:
    """Random (or, with ``exhaustive``, all) 3-graphs above ``(m-1) n^2`` edges have ``nu >= m``."""
    start = time.perf_counter()
    params = {"n": n, "m": m, "trials": trials if not exhaustive else "all"}
    details: dict = {}
    if exhaustive:
        K = complete(3, n)
        universe = K.edge_list
        outcomes = []
        for bits in range(1 << len(universe)):
            H = KPartiteHypergraph._trusted(3, (n,) * 3, frozenset(t for j, t in enumerate(universe) if bits >> j & 1))
            outcomes.append(_guard(check_matching_threshold, H, m, budget))
    else:
        outcomes = _map_trials(partial(_trial_threshold, n, m, seed, budget), trials, jobs)
    if m == 2 and n <= 3:
        best = max_intersecting_size(3, (n,) * 3)
        details["max_edges_nu_1"] = best
        if best > n * n:
            outcomes = list(outcomes) + [(VIOLATION, {"max_edges_nu_1": best, "n": n})]
    return _finish("thm-1.2", params, seed, start, outcomes, details)


def verify_rainbow_pairs(n: int) -> VerificationReport:
    """Every pair of bipartite graphs on ``n + n`` vertices, with a star-blocked negative control."""
    start = time.perf_counter()
    slots = [(u, v) for u in range(n) for v in range(n)]
    graphs = [
        BipartiteGraph(n, n, frozenset(s for j, s in enumerate(slots) if bits >> j & 1))
        for bits in range(1 << len(slots))
    ]
    outcomes = []
    for G1 in graphs:
        for G2 in graphs:
            outcomes.append(check_rainbow_pair(G1, G2))
    # a single edge uv against every edge meeting {u, v}: total exactly 2n, no rainbow
    G1 = BipartiteGraph(n, n, frozenset({(0, 0)}))
    G2 = BipartiteGraph(n, n, frozenset((u, v) for u, v in slots if u == 0 or v == 0))
    control = rainbow_matching([G1, G2]) is None and G1.e + G2.e == 2 * n
    return _finish("lem-2.5", {"n": n, "exhaustive": True}, 0, start, outcomes,
                   {"pairs": len(graphs) ** 2, "control_no_rainbow": control})


def _trial_rainbow(n: int, m: int, seed: int, i: int):
    rng = make_rng(seed, *_salt("thm-2.2", n, m), i)
    low = (m - 1) * n + 1
    family = [random_bipartite(n, int(rng.integers(low, n * n + 1)), rng) for _ in range(m)]
    return check_rainbow_family(family, (m - 1) * n)


def verify_rainbow_theorem(n: int, m: int, trials: int = 500, seed: int = 0, exhaustive: bool = False,
                           jobs: int = 1) -> VerificationReport:
    """Sampled families with every ``e(G_i) > (m-1) n`` have rainbow matchings.

    With ``exhaustive`` and ``m == 2`` this runs the all-pairs check instead.
    The tight family is included as a negative control.
    """
    if exhaustive and m == 2:
        return verify_rainbow_pairs(n)
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_rainbow, n, m, seed), trials, jobs)
    control = rainbow_matching(rainbow_tight_family(n, m)) is None
    return _finish("thm-2.2", {"n": n, "m": m, "trials": trials}, seed, start, outcomes,
                   {"control_no_rainbow": control})


def maximal_intersecting_families(k: int, sizes) -> Iterable[KPartiteHypergraph]:
    """Every maximal intersecting family of legal k-tuples (Bron-Kerbosch with pivoting)."""
    H = complete(k, sizes)
    edges, masks = H.edge_list, H.edge_masks
    N = len(edges)
    adj = [sum(1 << j for j in range(N) if j != i and masks[i] & masks[j]) for i in range(N)]
    stack = [(0, (1 << N) - 1, 0)]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                yield KPartiteHypergraph._trusted(k, H.sizes, frozenset(edges[j] for j in range(N) if R >> j & 1))
            continue
        pool = P | X
        pivot = max((v for v in range(N) if pool >> v & 1), key=lambda v: (P & adj[v]).bit_count())
        cand = P & ~adj[pivot]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            stack.append((R | b, P & adj[v], X & adj[v]))
            P &= ~b
            X |= b


def _trial_intersecting(sizes: tuple, seed: int, budget, i: int):
    rng = make_rng(seed, *_salt("lem-2.4", *sizes), i)
    H = _random_intersecting(sizes, rng)
    return _guard(check_intersecting, H, budget)


def verify_intersecting_stability(n1: int, n2: int, n3: int, trials: int = 2000, seed: int = 0,
                                  budget=None, jobs: int = 1, exhaustive: bool = False) -> VerificationReport:
    """Random maximal intersecting families (grown from nothing, from partial
    stars, or from partial two-of-three families) must be stars once they
    reach ``n1 + n2 + n3 - 1`` edges.

    With ``exhaustive`` every maximal intersecting family is checked
    instead. That settles the sizes completely: a large non-star family
    would sit inside a maximal one that is also large and not a star.
    """
    start = time.perf_counter()
    sizes = (n1, n2, n3)
    tight = lemma24_tight_family(*sizes)
    details: dict = {
        "boundary": {"e": tight.e, "nu": _nu(tight, None), "tau": _tau(tight, None)},
    }
    if exhaustive:
        outcomes = []
        largest_non_star = 0
        families = 0
        for F in maximal_intersecting_families(3, sizes):
            families += 1
            if F.e > largest_non_star and _tau(F, budget) > 1:
                largest_non_star = F.e
            outcomes.append(_guard(check_intersecting, F, budget))
        details.update(maximal_families=families, largest_non_star=largest_non_star)
        params = {"sizes": list(sizes), "exhaustive": True}
    else:
        outcomes = _map_trials(partial(_trial_intersecting, sizes, seed, budget), trials, jobs)
        params = {"sizes": list(sizes), "trials": trials}
    return _finish("lem-2.4", params, seed, start, outcomes, details)


def _trial_shift(n: int, e: int, seed: int, budget, i: int):
    rng = make_rng(seed, *_salt("lem-2.3", n, e), i)
    H = random_hypergraph(3, (n,) * 3, e, int(rng.integers(2**31)))
    c = int(rng.integers(3))
    x, y = sorted(rng.choice(n, size=2, replace=False).tolist())
    return _guard(check_shift, H, VertexRef(c, x), VertexRef(c, y), budget)


def verify_shift_monotone(n: int, e: int, trials: int = 1000, seed: int = 0, budget=None,
                          jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_shift, n, e, seed, budget), trials, jobs)
    return _finish("lem-2.3", {"n": n, "e": e, "trials": trials}, seed, start, outcomes)


def _trial_stability(claim_id: str, n: int, m: int, shifted: bool, seed: int, budget, i: int):
    rng = make_rng(seed, *_salt(claim_id, n, m), i)
    H = _stability_instance(n, m, rng)
    if shifted:
        H = shift_closure(H)
    return _guard(check_stability, H, m, budget, shifted)


def _tightness(n: int, m: int) -> dict:
    H = extremal_hknm(3, n, m)
    return {"e": H.e, "threshold": stability_threshold(n, m), "nu": _nu(H, None), "tau": _tau(H, None)}


def verify_shifted_stability(n: int, m: int, trials: int = 1000, seed: int = 0, budget=None,
                             jobs: int = 1) -> VerificationReport:
    """Shift-closed instances at or above the threshold with ``nu = m`` must have ``tau = m``."""
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_stability, "lem-3.1", n, m, True, seed, budget), trials, jobs)
    return _finish("lem-3.1", {"n": n, "m": m, "trials": trials}, seed, start, outcomes)


def verify_main_stability(n: int, m: int, trials: int = 1000, seed: int = 0, budget=None,
                          jobs: int = 1, claim_id: str = "thm-1.3") -> VerificationReport:
    """Unshifted stability sweep; exploratory at every reachable ``n``.

    Always records the exact tightness check for ``H_3(n, m)``.
    """
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_stability, claim_id, n, m, False, seed, budget), trials, jobs)
    details = {"tightness": _tightness(n, m)} if n >= m + 1 else {}
    return _finish(claim_id, {"n": n, "m": m, "trials": trials}, seed, start, outcomes, details)


def verify_small_matching_stability(n: int, m: int, trials: int = 1000, seed: int = 0, budget=None,
                                    jobs: int = 1) -> VerificationReport:
    return verify_main_stability(n, m, trials, seed, budget, jobs, claim_id="lem-2.6")


def _near_perfect_instance(n: int, rng: np.random.Generator) -> KPartiteHypergraph:
    thr = (n - 2) * n * n + 2 * n
    mode = int(rng.integers(3))
    if mode == 0:
        # one isolated vertex, everything else random and dense
        c, p = int(rng.integers(3)), int(rng.integers(n))
        pool = [t for t in product(range(n), repeat=3) if t[c] != p]
        e = int(rng.integers(min(thr + 1, len(pool)), len(pool) + 1))
        picks = rng.choice(len(pool), size=e, replace=False)
        return KPartiteHypergraph._trusted(3, (n,) * 3, frozenset(pool[j] for j in picks))
    if mode == 1:
        return _perturb(_relabel(extremal_hknm(3, n, n - 1), rng), rng, 1, 3)
    e = int(rng.integers(thr + 1, n ** 3 + 1))
    return random_hypergraph(3, (n,) * 3, e, int(rng.integers(2**31)))


def _trial_near_perfect(n: int, seed: int, budget, i: int):
    rng = make_rng(seed, *_salt("lem-3.3", n), i)
    return _guard(check_near_perfect, _near_perfect_instance(n, rng), budget)


def verify_near_perfect_stability(n: int, trials: int = 1000, seed: int = 0, budget=None,
                                  jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_near_perfect, n, seed, budget), trials, jobs)
    return _finish("lem-3.3", {"n": n, "m": n - 1, "trials": trials}, seed, start, outcomes)


def _trial_min_degree(n: int, seed: int, budget, i: int):
    delta = math.ceil(2 * n * n / 3)
    H = random_min_degree(3, n, delta, seed, *_salt("thm-3.2", n), i)
    return _guard(check_min_degree_pm, H, budget)


def verify_daykin_haggkvist(n: int, trials: int = 1000, seed: int = 0, budget=None,
                            jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    outcomes = _map_trials(partial(_trial_min_degree, n, seed, budget), trials, jobs)
    K = complete(3, n)
    details = {"delta": math.ceil(2 * n * n / 3), "complete_has_pm": _nu(K, None) == n}
    return _finish("thm-3.2", {"n": n, "trials": trials}, seed, start, outcomes, details)


def _trial_oracle(n: int, e, seed: int, i: int):
    rng = make_rng(seed, *_salt("oracle", n, 0 if e is None else e + 1), i)
    total = n ** 3
    size = int(rng.integers(0, min(total, 24) + 1)) if e is None else e
    H = random_hypergraph(3, (n,) * 3, size, int(rng.integers(2**31)))
    return check_oracle(H)


def solver_cross_check(n: int, e=None, trials: int = 500, seed: int = 0, exhaustive: bool = False,
                       jobs: int = 1) -> VerificationReport:
    """Branch-and-bound against brute force; ``e=None`` draws the edge count per trial."""
    start = time.perf_counter()
    if exhaustive:
        universe = complete(3, n).edge_list
        outcomes = [
            check_oracle(KPartiteHypergraph._trusted(3, (n,) * 3, frozenset(t for j, t in enumerate(universe) if bits >> j & 1)))
            for bits in range(1 << len(universe))
        ]
        params = {"n": n, "exhaustive": True}
    else:
        outcomes = _map_trials(partial(_trial_oracle, n, e, seed), trials, jobs)
        params = {"n": n, "e": e, "trials": trials}
    return _finish("oracle", params, seed, start, outcomes)


def verify_extension_census() -> VerificationReport:
    return extension_lemma_census()


def _conjecture_start(base: KPartiteHypergraph, m: int, rng: np.random.Generator, index: int) -> KPartiteHypergraph:
    """Alternate between relabelled extremal graphs and cover-plus-intersecting graphs."""
    if index % 2 == 0:
        return _relabel(base, rng)
    k, n = base.k, base.sizes[0]
    A = set()
    while len(A) < m - 1:
        A.add((int(rng.integers(k)), int(rng.integers(n))))
    edges, rest = set(), []
    for t in product(range(n), repeat=k):
        if any((c, p) in A for c, p in enumerate(t)):
            edges.add(t)
        else:
            rest.append(t)
    masks = [base.edge_mask(t) for t in rest]
    edges.update(rest[i] for i in _grow_intersecting(rest, masks, rng))
    return KPartiteHypergraph._trusted(k, base.sizes, frozenset(edges))


def conjecture_search(n: int, m: int, budget: int = 10_000, seed: int = 0, k: int = 4,
                      keep: int = 5, solver_budget=None) -> VerificationReport:
    """Annealed local search for a graph with ``nu = m``, ``tau > m`` and more
    edges than ``H_k(n, m)``.

    States always keep ``nu = m`` (re-checked exactly after each move). The
    score counts edges plus a bonus for ``tau > m``; worse moves are taken
    with probability ``exp(delta / T)`` under a linear cooling schedule.
    ``budget`` is the number of proposed moves. The ``keep`` best states
    with ``tau > m`` are archived in ``details["candidates"]``.
    """
    start = time.perf_counter()
    params = {"k": k, "n": n, "m": m, "budget": budget}
    details: dict = {"extremal_edges": extremal_edge_count(k, n, m), "candidates": []}
    outcomes: list = []
    if budget <= 0:
        return _finish("conj-1.4", params, seed, start, outcomes, details)
    rng = make_rng(seed, *_salt("conj-1.4", k, n, m))
    base = extremal_hknm(k, n, m)
    details["extremal"] = {"e": base.e, "nu": _nu(base, None), "tau": _tau(base, None)}
    universe = list(complete(k, n).edge_list)
    bonus = n ** (k - 1)

    def score(e: int, tau: int) -> float:
        return e + (bonus if tau > m else 0)

    restart_every = max(1, budget // 10)
    best: dict[str, tuple] = {}
    temp0 = 2.0
    seen_violations = set()
    restarts = 0
    H = tau = cur = None
    for step in range(budget):
        if step % restart_every == 0:
            H = _conjecture_start(base, m, rng, restarts)
            restarts += 1
            try:
                tau = _tau(H, solver_budget)
            except BudgetExceeded:
                outcomes.append((BUDGET, None))
                continue
            cur = score(H.e, tau)
        temp = max(1e-3, temp0 * (1 - (step % restart_every) / restart_every))
        edges = set(H.edges)
        move = int(rng.integers(3))
        if move != 1 and len(edges) < len(universe):
            absent = [t for t in universe if t not in edges]
            edges.add(absent[int(rng.integers(len(absent)))])
        if move != 0 and H.edges:
            present = sorted(H.edges)
            edges.discard(present[int(rng.integers(len(present)))])
        G = KPartiteHypergraph._trusted(k, (n,) * k, frozenset(edges))
        try:
            if _nu(G, solver_budget) != m:
                continue
            g_tau = _tau(G, solver_budget)
        except BudgetExceeded:
            outcomes.append((BUDGET, None))
            continue
        new = score(G.e, g_tau)
        if new >= cur or rng.random() < math.exp((new - cur) / temp):
            H, tau, cur = G, g_tau, new
            outcome, inst = check_conjecture(G, m, solver_budget)
            if outcome != VIOLATION:
                outcomes.append((outcome, None))
            elif instance_hash(inst) not in seen_violations:
                seen_violations.add(instance_hash(inst))
                outcomes.append((outcome, inst))
            if tau > m:
                best[H.dumps()] = (H.e, H)
    details["restarts"] = restarts
    ranked = sorted(best.values(), key=lambda p: (-p[0], p[1].dumps()))[:keep]
    details["candidates"] = [_instance(G, m=m, tau_gt_m=True) for _, G in ranked]
    details["best_edges_with_tau_gt_m"] = ranked[0][0] if ranked else None
    return _finish("conj-1.4", params, seed, start, outcomes, details)


# ------------------------------------------------------------- curated set

def small_suite(seed: int = 42, jobs: int = 1) -> list[tuple[str, Callable[[], VerificationReport]]]:
    """The pinned parameter set run by ``verify all --small``."""
    s, j = seed, jobs
    return [
        ("hknm", lambda: verify_construction(6)),
        ("thm-1.1", lambda: verify_berge(3, 3)),
        ("thm-1.1", lambda: verify_berge(3, 5)),
        ("thm-1.1", lambda: verify_berge(4, 3)),
        ("lem-2.1", verify_extension_census),
        ("oracle", lambda: solver_cross_check(2, exhaustive=True)),
        ("oracle", lambda: solver_cross_check(3, None, 500, s, jobs=j)),
        ("thm-1.2", lambda: verify_aharoni_howard(2, 2, exhaustive=True)),
        ("thm-1.2", lambda: verify_aharoni_howard(3, 2, 1000, s, jobs=j)),
        ("thm-1.2", lambda: verify_aharoni_howard(3, 3, 500, s, jobs=j)),
        ("lem-2.5", lambda: verify_rainbow_pairs(2)),
        ("lem-2.5", lambda: verify_rainbow_pairs(3)),
        ("thm-2.2", lambda: verify_rainbow_theorem(3, 2, 500, s, jobs=j)),
        ("thm-2.2", lambda: verify_rainbow_theorem(4, 3, 500, s, jobs=j)),
        ("lem-2.3", lambda: verify_shift_monotone(3, 12, 1000, s, jobs=j)),
        ("lem-2.3", lambda: verify_shift_monotone(4, 20, 500, s, jobs=j)),
        ("lem-2.4", lambda: verify_intersecting_stability(5, 5, 5, 2000, s, jobs=j)),
        ("lem-2.4", lambda: verify_intersecting_stability(3, 3, 3, 500, s, jobs=j)),
        ("lem-2.4", lambda: verify_intersecting_stability(5, 5, 5, exhaustive=True)),
        ("lem-2.4", lambda: verify_intersecting_stability(3, 4, 4, exhaustive=True)),
        ("thm-3.2", lambda: verify_daykin_haggkvist(3, 1000, s, jobs=j)),
        ("thm-3.2", lambda: verify_daykin_haggkvist(4, 500, s, jobs=j)),
        ("lem-3.1", lambda: verify_shifted_stability(4, 2, SHIFTED_TRIALS[(4, 2)], s, jobs=j)),
        ("lem-3.1", lambda: verify_shifted_stability(5, 2, SHIFTED_TRIALS[(5, 2)], s, jobs=j)),
        ("lem-3.1", lambda: verify_shifted_stability(5, 3, SHIFTED_TRIALS[(5, 3)], s, jobs=j)),
        ("thm-1.3", lambda: verify_main_stability(4, 2, 500, s, jobs=j)),
        ("thm-1.3", lambda: verify_main_stability(5, 2, 300, s, jobs=j)),
        ("thm-1.3", lambda: verify_main_stability(5, 4, 300, s, jobs=j)),
        ("lem-2.6", lambda: verify_small_matching_stability(5, 2, 300, s, jobs=j)),
        ("lem-3.3", lambda: verify_near_perfect_stability(3, 500, s, jobs=j)),
        ("lem-3.3", lambda: verify_near_perfect_stability(4, 300, s, jobs=j)),
        ("conj-1.4", lambda: conjecture_search(3, 2, 2000, s)),
    ]


# sized so each run yields at least 500 hypothesis-satisfying instances
SHIFTED_TRIALS = {(4, 2): 2400, (5, 2): 2400, (5, 3): 3000}


def run_suite(claim: str = "all", seed: int = 42, jobs: int = 1) -> list[VerificationReport]:
    return [fn() for cid, fn in small_suite(seed, jobs) if claim in ("all", cid)]
