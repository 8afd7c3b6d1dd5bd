import json

import pytest

from hyperstab import harness
from hyperstab.constructions import extremal_hknm, lemma24_tight_family
from hyperstab.core import KPartiteHypergraph, Matching
from hyperstab.report import EXPLORATORY, FAIL, PASS, VerificationReport, archive_counterexamples, instance_hash


def _strip(report):
    d = report.to_dict()
    d.pop("wall_time")
    return json.dumps(d, sort_keys=True)


# ------------------------------------------------------------ claim table

def test_claim_regimes():
    C = harness.CLAIMS
    assert C["lem-2.4"].in_regime({"sizes": [5, 5, 5]})
    assert not C["lem-2.4"].in_regime({"sizes": [3, 3, 3]})
    assert C["lem-3.1"].in_regime({"n": 4, "m": 2})
    assert not C["lem-3.1"].in_regime({"n": 3, "m": 2})
    assert not C["thm-1.3"].in_regime({"n": 6, "m": 2})
    assert C["thm-1.3"].in_regime({"n": 163, "m": 2})
    assert not C["lem-2.6"].in_regime({"n": 23, "m": 2})
    assert not C["lem-3.3"].in_regime({"n": 161})
    assert not C["conj-1.4"].in_regime({"n": 10 ** 6, "m": 2})


# --------------------------------------------------------- exact suites

def test_construction_rows():
    r = harness.verify_construction(6)
    assert r.status == PASS and r.instances_tested == 15
    for row in r.details["rows"]:
        assert row["e"] == row["threshold"] - 1 == row["formula"]
        assert (row["nu"], row["tau"]) == (row["m"], row["m"] + 1)


def test_berge_suite():
    assert harness.verify_berge(3, 1).status == PASS
    r = harness.verify_berge(4, 3)
    assert r.status == PASS and r.details["matchings"] == 27


def test_aharoni_howard_exhaustive():
    r = harness.verify_aharoni_howard(2, 2, exhaustive=True)
    assert r.status == PASS
    # graphs on [2,2,2] with at least 5 edges
    assert r.instances_tested == sum(1 for b in range(256) if bin(b).count("1") >= 5)
    assert r.details["max_edges_nu_1"] == 4


def test_rainbow_pairs_n2():
    r = harness.verify_rainbow_pairs(2)
    assert r.status == PASS
    assert r.details["pairs"] == 256
    assert r.details["control_no_rainbow"]


def test_max_intersecting_size():
    assert harness.max_intersecting_size(3, (3, 3, 3)) == 9
    assert harness.max_intersecting_size(3, (2, 2, 2)) == 4


def test_exhaustive_intersecting():
    r = harness.verify_intersecting_stability(5, 5, 5, exhaustive=True)
    assert r.status == PASS
    assert r.details["largest_non_star"] == 13
    assert r.details["boundary"] == {"e": 13, "nu": 1, "tau": 2}
    small = harness.verify_intersecting_stability(3, 3, 3, exhaustive=True)
    assert small.status == EXPLORATORY and not small.counterexamples
    assert small.details["largest_non_star"] == 7


def test_maximal_families_are_maximal():
    fams = list(harness.maximal_intersecting_families(3, (2, 2, 2)))
    assert all(F.e >= 1 for F in fams)
    stars = [F for F in fams if F.e == 4 and any(len({t[c] for t in F.edges}) == 1 for c in range(3))]
    assert len(stars) == 6


# ------------------------------------------------------- sampled suites

def test_sampled_suites_deterministic():
    for run in (
        lambda: harness.verify_aharoni_howard(3, 2, 60, seed=5),
        lambda: harness.verify_intersecting_stability(5, 5, 5, 60, seed=5),
        lambda: harness.verify_shifted_stability(4, 2, 60, seed=5),
        lambda: harness.verify_rainbow_theorem(3, 2, 60, seed=5),
        lambda: harness.solver_cross_check(3, None, 30, seed=5),
    ):
        assert _strip(run()) == _strip(run())


def test_seed_changes_sample():
    a = harness.verify_main_stability(4, 2, 40, seed=1)
    b = harness.verify_main_stability(4, 2, 40, seed=2)
    assert (a.instances_tested, a.skipped) != (b.instances_tested, b.skipped) or _strip(a) != _strip(b)


def test_jobs_do_not_change_reports():
    one = harness.verify_shift_monotone(3, 12, 40, seed=3, jobs=1)
    two = harness.verify_shift_monotone(3, 12, 40, seed=3, jobs=2)
    assert _strip(one) == _strip(two)


def test_skips_are_counted_separately():
    r = harness.verify_shifted_stability(4, 2, 100, seed=0)
    assert r.instances_tested + r.skipped + r.budget_skipped == 100
    assert r.skipped > 0


def test_out_of_regime_is_exploratory():
    assert harness.verify_main_stability(4, 2, 20).status == EXPLORATORY
    assert harness.verify_small_matching_stability(5, 2, 20).status == EXPLORATORY
    assert harness.verify_near_perfect_stability(3, 20).status == EXPLORATORY
    assert harness.verify_intersecting_stability(3, 3, 3, 20).status == EXPLORATORY


def test_tightness_recorded():
    r = harness.verify_main_stability(5, 2, 5)
    assert r.details["tightness"] == {"e": 37, "threshold": 38, "nu": 2, "tau": 3}


def test_budget_skips():
    r = harness.verify_main_stability(5, 2, 20, seed=0, budget=1)
    assert r.budget_skipped > 0
    assert r.instances_tested + r.skipped + r.budget_skipped == 20


# ---------------------------------------------------- conjecture search

def test_zero_budget_search_is_empty():
    r = harness.conjecture_search(3, 2, budget=0)
    assert r.status == EXPLORATORY
    assert r.instances_tested == 0 and r.counterexamples == [] and r.details["candidates"] == []


def test_search_reproducible_and_well_formed():
    a = harness.conjecture_search(3, 2, budget=300, seed=4)
    b = harness.conjecture_search(3, 2, budget=300, seed=4)
    assert _strip(a) == _strip(b)
    assert a.status == EXPLORATORY
    assert a.details["extremal"] == {"e": 47, "nu": 2, "tau": 3}
    for cand in a.details["candidates"]:
        G = KPartiteHypergraph.from_dict(cand)
        assert G.k == 4 and cand["tau_gt_m"]


# ------------------------------------------- archive and re-verification

_genuine_max_matching = harness.max_matching


def _faulty_max_matching(H, budget=None):
    # deliberately wrong: loses an edge whenever the true answer is at least 2
    M = _genuine_max_matching(H, budget)
    return Matching(M.edges[:-1]) if M.size >= 2 else M


@pytest.fixture
def faulty_solver(monkeypatch):
    monkeypatch.setattr(harness, "max_matching", _faulty_max_matching)


def test_planted_fault_is_caught_archived_and_refails(faulty_solver, monkeypatch, tmp_path):
    r = harness.solver_cross_check(2, exhaustive=True)
    assert r.status == FAIL and r.counterexamples
    assert len({instance_hash(c) for c in r.counterexamples}) == len(r.counterexamples)
    paths = archive_counterexamples(r, tmp_path)
    assert len(paths) == len(r.counterexamples)
    for path in paths:
        inst = json.loads(path.read_text())
        assert path.name == f"oracle-{instance_hash(inst)}.json"
        assert harness.recheck("oracle", inst)
    # with the genuine solver back in place none of them re-fails
    monkeypatch.undo()
    assert not any(harness.recheck("oracle", json.loads(p.read_text())) for p in paths)


def test_recheck_rejects_non_violations():
    H = extremal_hknm(3, 5, 2)
    assert not harness.recheck("thm-1.3", {**H.to_dict(), "m": 2})
    F = lemma24_tight_family(5, 5, 5)
    assert not harness.recheck("lem-2.4", F.to_dict())
    with pytest.raises(KeyError):
        harness.recheck("no-such-claim", H.to_dict())


def test_report_json_round_trip():
    r = harness.verify_berge(3, 2)
    back = VerificationReport.from_dict(json.loads(r.to_json()))
    assert back == r


def test_run_suite_filters_by_claim():
    reports = harness.run_suite("thm-1.1")
    assert [r.claim_id for r in reports] == ["thm-1.1"] * 3
