"""Acceptance suite: one test per criterion, each printing a pass/fail line."""

import random
import time

import pytest

import netskel as ns
from conftest import random_connected_graph, tree_with_chords
from oracle import brute_force_pair_bits
from test_contraction import check_simplified_invariants


def report(num: int, name: str, ok: bool, detail: str = "") -> None:
    print(f"[acceptance] {num:02d} {name}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {num} ({name}): {detail}"


def test_01_chain_closed_form():
    t0 = time.perf_counter()
    bad = [
        n
        for n in range(2, 101)
        if ns.total_search_information(ns.gen_chain(n)).total_bits
        != float((n - 2) * (n - 1))
    ]
    elapsed = time.perf_counter() - t0
    report(
        1,
        "chain closed form",
        not bad and elapsed < 1.0,
        f"mismatches={bad} elapsed={elapsed:.2f}s",
    )


def test_02_ring_minimum():
    t0 = time.perf_counter()
    res12 = ns.minimize_h_simp(ns.gen_ring(12), 500, 42)
    ok = res12.best_info.h_simp == pytest.approx(24.0) and (
        res12.worst_info.h_simp == pytest.approx(78.0)
    )
    details = [f"ring12 best={res12.best_info.h_simp} worst={res12.worst_info.h_simp}"]
    for n in (6, 9, 12, 15):
        best = ns.minimize_h_simp(ns.gen_ring(n), 500, 42).best_info.h_simp
        want = n**2 / 3 - 3 * n + 12
        ok = ok and best == pytest.approx(want)
        details.append(f"N={n}:{best}/{want:g}")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    report(2, "ring minimum", ok, " ".join(details) + f" elapsed={elapsed:.2f}s")


def test_03_triangle_skeleton():
    bits = ns.total_search_information(ns.gen_ring(3)).total_bits
    report(3, "triangle is 6 bits", bits == 6.0, f"got {bits}")


def test_04_karate_regression(karate):
    t0 = time.perf_counter()
    total = ns.total_search_information(karate).total_bits
    cyclo = ns.cyclomatic_number(karate)
    res = ns.minimize_h_simp(karate, 500, 42)
    elapsed = time.perf_counter() - t0
    ok = (
        abs(total - 6061) <= 1
        and cyclo == 45
        and res.best_info.h_simp <= 4320
        and 28 <= res.best.skeleton.node_count <= 31
        and elapsed < 30.0
    )
    report(
        4,
        "karate regression",
        ok,
        f"H={total:.1f} C={cyclo} best={res.best_info.h_simp:.1f} "
        f"skel={res.best.skeleton.node_count} elapsed={elapsed:.1f}s",
    )


def test_05_brute_force_oracle():
    rng = random.Random(1234)
    worst = 0.0
    for _ in range(200):
        n = rng.randint(3, 8)
        g = random_connected_graph(n, rng.uniform(0.3, 0.7), rng.randrange(1 << 30))
        for s in range(n):
            for d in range(n):
                delta = abs(
                    ns.pair_search_information(g, s, d) - brute_force_pair_bits(g, s, d)
                )
                worst = max(worst, delta)
    report(5, "brute-force oracle", worst < 1e-9, f"max |delta|={worst:.2e} bits")


def test_06_structural_invariants():
    rng = random.Random(4321)
    checked = 0
    for _ in range(500):
        n = rng.randint(5, 60)
        g = random_connected_graph(n, max(0.1, 2.5 / n), rng.randrange(1 << 30))
        for _ in range(5):
            simp = ns.tree_contract(g, ns.order_links_random(g, rng.randrange(1 << 30)))
            check_simplified_invariants(g, simp)
            sk = simp.skeleton
            again = ns.tree_contract(sk, ns.order_links_random(sk, rng.randrange(1 << 30)))
            assert again.skeleton.node_count == sk.node_count
            assert again.skeleton.links == sk.links
            checked += 1
    report(6, "structural invariants", checked == 2500, f"{checked} contractions checked")


def test_07_tree_scaling():
    t0 = time.perf_counter()
    rows, fit = ns.tree_scaling_experiment(10, 100, 10, 1000, 42)
    elapsed = time.perf_counter() - t0
    assert fit is not None
    ok = 2.45 <= fit.exponent <= 2.65 and fit.r_squared >= 0.99 and elapsed < 600
    report(
        7,
        "tree scaling",
        ok,
        f"exponent={fit.exponent:.3f} r2={fit.r_squared:.4f} "
        f"amplitude={fit.amplitude:.3f} elapsed={elapsed:.0f}s",
    )


def test_08_estimator_sanity(karate):
    details = []
    ok = True
    for n in (4, 5, 6, 8):
        g = ns.Graph.from_links(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        simp = ns.tree_contract(g, ns.order_links_degree(g))
        assert simp.skeleton.node_count == n  # complete graphs never contract
        h_o = ns.total_search_information(g).total_bits
        est = ns.estimate_h_from_skeleton(h_o, n, n)
        ok = ok and est == pytest.approx(1.012 * h_o)
        details.append(f"K{n}:{est / h_o:.4f}")
    simp = ns.tree_contract(karate, ns.order_links_degree(karate))
    h_sk = ns.total_search_information(simp.skeleton).total_bits
    est = ns.skeleton_estimate(h_sk, simp.skeleton.node_count, karate.node_count)
    h_o = ns.total_search_information(karate).total_bits
    err = ns.relative_error(est.estimate_bits, h_o)
    ok = ok and abs(err) < 0.5 and est.ratio >= 0.3 and not est.low_confidence
    details.append(f"karate ratio={est.ratio:.3f} err={err:+.3f} lowconf={est.low_confidence}")
    report(8, "estimator sanity", ok, " ".join(details))


def test_09_randomization():
    rng = random.Random(99)
    checked = 0
    for _ in range(50):
        n = rng.randint(4, 30)
        g = random_connected_graph(n, max(0.15, 2.5 / n), rng.randrange(1 << 30))
        for seed in (rng.randrange(1 << 30), rng.randrange(1 << 30)):
            out = ns.rewire_degree_preserving(g, 4 * g.link_count, seed)
            assert sorted(out.degrees) == sorted(g.degrees)
            assert ns.is_connected(out)
            checked += 1
    report(9, "randomization invariants", checked == 100, f"{checked} rewirings checked")


def test_10_synthetic_scaling_corpus():
    corpus = []
    for n in range(12, 42, 3):
        corpus.append(ns.gen_ring(n))
    for i, n in enumerate(range(15, 45, 3)):
        corpus.append(tree_with_chords(n, 3 + i % 4, 1000 + i))
    for i, n in enumerate(range(12, 42, 3)):
        corpus.append(random_connected_graph(n, 0.25, 2000 + i))
    assert len(corpus) == 30
    points = []
    for g in corpus:
        h_o = ns.total_search_information(g).total_bits
        simp = ns.tree_contract(g, ns.order_links_degree(g))
        n_sk = simp.skeleton.node_count
        if n_sk > 1:
            h_sk = ns.total_search_information(simp.skeleton).total_bits
            points.append((n_sk / g.node_count, h_sk / h_o))
    fit = ns.fit_power_law(points)
    ok = fit.exponent > 0 and fit.r_squared >= 0.9
    report(
        10,
        "synthetic scaling corpus",
        ok,
        f"points={len(points)} exponent={fit.exponent:.3f} r2={fit.r_squared:.3f}",
    )
