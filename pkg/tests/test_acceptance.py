"""Acceptance criteria 1-11.  Each test records a PASS/FAIL line; the lines
are printed together at the end of the run (see conftest.py)."""

from __future__ import annotations

import time

from metamour import verify as V

RESULTS: dict[int, str] = {}


def record(number, title, report, limit_s, started):
    elapsed = time.perf_counter() - started
    ok = report.passed and elapsed <= limit_s
    reasons = sorted({c.reason for c in report.counterexamples})
    line = f"CRITERION {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.1f}s, limit {limit_s}s)"
    if reasons:
        line += "  failures: " + "; ".join(reasons[:6])
    RESULTS[number] = line
    print(line)
    assert elapsed <= limit_s, f"criterion {number} took {elapsed:.1f}s"
    assert report.passed, "\n".join(f"{c.reason}: {c.witness}" for c in report.counterexamples[:10])


def test_criterion_01_period_three_classification():
    t = time.perf_counter()
    rep = V.period3_suite(max_n=9, samples=10_000, sample_n=(10, 11, 12), seed=0)
    assert rep.data["witnesses"] == [["C7"], ["C9"]]
    record(1, "period 3 on <= 9 vertices is exactly C7, C9", rep, 300, t)


def test_criterion_02_period_one():
    t = time.perf_counter()
    rep = V.period1_suite(7)
    assert rep.graphs_scanned == 1 + 2 + 4 + 11 + 34 + 156 + 1044
    record(2, "M(G) = G iff edgeless, n <= 7", rep, 60, t)


def test_criterion_03_period_two_structure():
    t = time.perf_counter()
    rep = V.period2_suite(8)
    assert sum(v["period2"] for v in rep.data["per_n"].values()) > 0
    record(3, "period-2 structure, connected n <= 8", rep, 600, t)


def test_criterion_04_mu_and_cycles():
    t = time.perf_counter()
    rep = V.mu_suite(33)
    assert len(V.MU_A003558) == 44
    record(4, "mu(n) values and odd cycles up to C33", rep, 60, t)


def test_criterion_05_dream_catcher():
    t = time.perf_counter()
    rep = V.dream_catcher_report()
    assert rep.data["n"] == 14 and rep.data["period"] == 6 and rep.data["pseudo_period"] == 2
    record(5, "decorated C7 period 6, pseudo-period 2", rep, 60, t)


def test_criterion_06_embeddings():
    t = time.perf_counter()
    rep = V.embedding_suite(count=20, max_n=6, ks=(2, 4), seed=0)
    record(6, "period / self-complementary / pseudo-period embeddings", rep, 120, t)


def test_criterion_07_paley():
    t = time.perf_counter()
    rep = V.paley_suite((5, 13, 17, 29))
    record(7, "Paley q in {5, 13, 17, 29}", rep, 60, t)


def test_criterion_08_petersen():
    t = time.perf_counter()
    rep = V.petersen_range_suite(5, 12)
    for m in range(5, 13):
        assert rep.data[f"G({m},2)"]["period"] == 2
    record(8, "G(m,2) limit sets and M(G(m,j)) connectivity, m in [5,12]", rep, 300, t)


def test_criterion_09_trees():
    t = time.perf_counter()
    rep = V.trees_range_suite(large=((5, 2), (5, 3), (6, 2), (7, 2), (8, 2)), small_m=(2, 3, 4), k_max=7)
    record(9, "m-ary trees, large closed forms and small-height formulas", rep, 600, t)


def test_criterion_10_inverse_image():
    t = time.perf_counter()
    rep = V.diameter_suite(6)
    assert rep.data["preimage_bruteforce_max_n"] == 5
    record(10, "inverse-image conditions, n <= 6 (brute force n <= 5)", rep, 120, t)


def test_criterion_11_oracle_coherence():
    t = time.perf_counter()
    rep = V.walks_suite(max_n=8, max_k=3)
    record(11, "walk oracles against iteration and recursion, n <= 8", rep, 300, t)


