"""
Acceptance criteria, one test each, at the stated tolerances and time limits.

The terminal summary (see conftest.py) prints one PASS/FAIL line per
criterion.
"""

import json
import subprocess
import sys
import time

import pytest

from hyperstab import harness
from hyperstab.constructions import make_rng, random_hypergraph
from hyperstab.core import KPartiteHypergraph
from hyperstab.report import EXPLORATORY, PASS, VerificationReport, archive_counterexamples
from hyperstab.shifting import is_partitely_shifted, shift_closure

criterion = pytest.mark.criterion


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@criterion(1, "H_3(n,m) tightness for 2 <= m+1 <= n <= 6 (< 10 s)")
def test_construction_tightness():
    with Timer() as t:
        r = harness.verify_construction(6, 3)
    assert r.status == PASS and not r.counterexamples
    pairs = {(row["n"], row["m"]) for row in r.details["rows"]}
    assert pairs == {(n, m) for n in range(2, 7) for m in range(1, n)}
    for row in r.details["rows"]:
        n, m = row["n"], row["m"]
        assert row["e"] == (m - 1) * n * n + 3 * n - m - 1
        assert row["nu"] == m and row["tau"] == m + 1
    assert t.elapsed < 10


@criterion(2, "Berge decomposition, k=3 n<=5 and k=4 n<=3 (< 5 s)")
def test_berge_decomposition():
    with Timer() as t:
        reports = [harness.verify_berge(3, n) for n in range(1, 6)]
        reports += [harness.verify_berge(4, n) for n in range(1, 4)]
    for r in reports:
        assert r.status == PASS
        assert r.details["matchings"] == r.params["n"] ** (r.params["k"] - 1)
    assert t.elapsed < 5


@criterion(3, "extension-lemma census over 64 link configurations (< 1 s)")
def test_extension_census():
    with Timer() as t:
        r = harness.verify_extension_census()
    rows = r.details["rows"]
    assert len(rows) == 64
    assert all(row["extension"] for row in rows if row["total"] >= 5)
    assert any(not row["extension"] for row in rows if row["total"] == 4)
    assert r.status == PASS
    assert t.elapsed < 1


@criterion(4, "rainbow pairs exhaustive for n in {2,3} plus the tight control (< 30 s)")
def test_rainbow_pairs_exhaustive():
    with Timer() as t:
        reports = [harness.verify_rainbow_pairs(2), harness.verify_rainbow_pairs(3)]
    for r in reports:
        assert r.status == PASS and not r.counterexamples
        assert r.details["control_no_rainbow"]
    assert reports[1].details["pairs"] == 2 ** 18
    assert t.elapsed < 30


@criterion(5, "branch-and-bound equals brute force: all 2^8 on [2,2,2], 500 on [3,3,3] (< 60 s)")
def test_oracle_equivalence():
    with Timer() as t:
        full = harness.solver_cross_check(2, exhaustive=True)
        sampled = harness.solver_cross_check(3, None, 500, seed=42)
    assert full.status == PASS and full.instances_tested == 256
    assert sampled.status == PASS and sampled.instances_tested >= 500
    assert t.elapsed < 60


@criterion(6, "shift preserves e, never raises nu; closure idempotent and shifted (< 60 s)")
def test_shift_properties():
    with Timer() as t:
        reports = [
            harness.verify_shift_monotone(3, 12, 600, seed=42),
            harness.verify_shift_monotone(4, 20, 400, seed=42),
        ]
        closures = 0
        for i in range(300):
            rng = make_rng(42, 6, i)
            n = int(rng.integers(2, 5))
            e = int(rng.integers(0, min(n ** 3, 30) + 1))
            H = random_hypergraph(3, (n,) * 3, e, 42, 6, i, 1)
            G = shift_closure(H)
            assert G.e == H.e
            assert shift_closure(G) == G
            assert is_partitely_shifted(G)
            closures += 1
    assert all(r.status == PASS for r in reports)
    assert sum(r.instances_tested for r in reports) >= 1000
    assert closures == 300
    assert t.elapsed < 60


@criterion(7, "shifted stability at (4,2), (5,2), (5,3): >= 500 instances each, tau = m (< 5 min)")
def test_shifted_stability():
    with Timer() as t:
        reports = [
            harness.verify_shifted_stability(n, m, harness.SHIFTED_TRIALS[(n, m)], seed=42)
            for n, m in [(4, 2), (5, 2), (5, 3)]
        ]
    for r in reports:
        assert r.status == PASS, r.counterexamples[:1]
        assert r.instances_tested >= 500, (r.params, r.instances_tested)
    assert t.elapsed < 300


@criterion(8, "sampled suites for thm-1.2, thm-2.2, lem-2.4, thm-3.2: PASS with >= 500 each (< 10 min)")
def test_sampled_suites():
    with Timer() as t:
        reports = [
            harness.verify_aharoni_howard(3, 2, 1000, seed=42),
            harness.verify_aharoni_howard(3, 3, 500, seed=42),
            harness.verify_rainbow_theorem(3, 2, 500, seed=42),
            harness.verify_rainbow_theorem(4, 3, 500, seed=42),
            harness.verify_intersecting_stability(5, 5, 5, 2000, seed=42),
            harness.verify_daykin_haggkvist(3, 1000, seed=42),
            harness.verify_daykin_haggkvist(4, 500, seed=42),
        ]
    for r in reports:
        assert r.status == PASS and not r.counterexamples, r.claim_id
        assert r.instances_tested >= 500, (r.claim_id, r.params, r.instances_tested)
    assert t.elapsed < 600


@criterion(9, "out-of-reach claims run EXPLORATORY, emit valid reports, archive findings")
def test_exploratory_claims(tmp_path):
    reports = [
        harness.verify_main_stability(4, 2, 500, seed=42),
        harness.verify_main_stability(5, 3, 300, seed=42),
        harness.verify_small_matching_stability(5, 2, 300, seed=42),
        harness.verify_near_perfect_stability(3, 500, seed=42),
        harness.verify_near_perfect_stability(4, 300, seed=42),
        harness.conjecture_search(3, 2, 2000, seed=42),
    ]
    for r in reports:
        assert r.status == EXPLORATORY
        back = VerificationReport.from_dict(json.loads(r.to_json()))
        assert back == r
        for path in archive_counterexamples(r, tmp_path / r.claim_id):
            inst = json.loads(path.read_text())
            KPartiteHypergraph.from_dict(inst)
            assert harness.recheck(r.claim_id, inst)


def _jsonl_without_wall_time(text):
    lines = []
    for line in text.splitlines():
        d = json.loads(line)
        d.pop("wall_time")
        lines.append(json.dumps(d, sort_keys=True))
    return lines


@criterion(10, "verify all --small --seed 42 is byte-identical across runs (modulo wall_time)")
def test_determinism():
    cmd = [sys.executable, "-m", "hyperstab", "verify", "all", "--small", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0 == second.returncode, first.stderr[-2000:]
    a, b = _jsonl_without_wall_time(first.stdout), _jsonl_without_wall_time(second.stdout)
    assert len(a) == len(harness.small_suite())
    assert a == b
