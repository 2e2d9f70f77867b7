"""Acceptance suite: one test per release criterion, printed pass/fail.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the criterion
lines.
"""

import math
import random
import time

from domatlas.atlas import AtlasConfig, build_atlas, render
from domatlas.enumeration import canonical_form, enumerate_graphs
from domatlas.graph import Graph
from domatlas.polynomial import count_dominating_sets, evaluate, poly_by_components
from domatlas.roots import deflate_zero, find_roots, reconstruct_coeffs
from oracles import (
    complete,
    cycle,
    disjoint_union,
    iso_class_count,
    naive_domination_counts,
    path,
    permute_graph,
    star,
)


def report(num, text):
    print(f"PASS criterion {num}: {text}")


def atlas_entries(connected_only):
    return build_atlas(AtlasConfig(max_order=6, connected_only=connected_only))


def test_criterion_1_atlas_cardinality():
    start = time.monotonic()
    connected = atlas_entries(True)
    elapsed = time.monotonic() - start
    everything = atlas_entries(False)

    def counts(entries):
        out = {}
        for e in entries:
            out[e.order] = out.get(e.order, 0) + 1
        return out

    assert len(connected) == 143
    assert counts(connected) == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    assert len(everything) == 208
    assert counts(everything) == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    # independent labeled-graph oracle (frozenset-of-edges orbit sweep)
    for n in range(1, 7):
        assert counts(connected)[n] == iso_class_count(n, True)
        assert counts(everything)[n] == iso_class_count(n, False)
    assert elapsed < 5.0
    report(1, f"143 connected / 208 total entries, oracle-checked, built in {elapsed:.2f}s")


def test_criterion_2_known_polynomials():
    cases = [
        (complete(2), (0, 2, 1), "x^2 + 2x"),
        (complete(3), (0, 3, 3, 1), "x^3 + 3x^2 + 3x"),
        (path(3), (0, 1, 3, 1), "x^3 + 3x^2 + x"),
        (path(4), (0, 0, 4, 4, 1), "x^4 + 4x^3 + 4x^2"),
        (cycle(4), (0, 0, 6, 4, 1), "x^4 + 4x^3 + 6x^2"),
        (star(4), (0, 1, 3, 4, 1), "x^4 + 4x^3 + 3x^2 + x"),
    ]
    for g, coeffs, text in cases:
        p = count_dominating_sets(g)
        assert p.coeffs == coeffs
        assert p.to_text() == text
    report(2, "K2, K3, P3, P4, C4, K_{1,3} polynomials match exactly")


def test_criterion_3_component_factorization():
    for n in range(1, 7):
        for g in enumerate_graphs(n, False):
            assert poly_by_components(g) == count_dominating_sets(g)
    rng = random.Random(2024)
    pool = []
    for n in range(1, 6):
        pool.extend(enumerate_graphs(n, True))
    for _ in range(200):
        parts = [rng.choice(pool)]
        while True:
            g = rng.choice(pool)
            if sum(p.n for p in parts) + g.n > 10:
                break
            parts.append(g)
        union = disjoint_union(parts)
        assert poly_by_components(union) == count_dominating_sets(union)
    report(3, "component product = whole-graph brute force on 208 graphs + 200 unions")


def test_criterion_4_coefficient_invariants():
    for e in atlas_entries(False):
        c, n, gamma = e.poly.coeffs, e.order, e.gamma
        assert c[n] == 1
        assert all(c[i] == 0 for i in range(gamma))
        assert c[gamma] > 0
        assert all(c[i] <= math.comb(n, i) for i in range(n + 1))
        for i in range(gamma, n):
            assert c[i + 1] * (i + 1) >= c[i] * (n - i)
    report(4, "coefficient invariants hold on all 208 polynomials")


def test_criterion_5_root_certificates():
    def quadratic_roots(c0, c1, c2):
        disc = complex(c1 * c1 - 4 * c2 * c0) ** 0.5
        return sorted(
            [(-c1 - disc) / (2 * c2), (-c1 + disc) / (2 * c2)],
            key=lambda z: (z.real, z.imag),
        )

    for e in atlas_entries(False):
        p, rs = e.poly, e.roots
        total = sum(p.coeffs)
        assert all(abs(evaluate(p, r)) <= 1e-9 * total for r in rs.nonzero_roots)
        rebuilt = reconstruct_coeffs(rs)
        for got, want in zip(rebuilt, p.coeffs):
            assert abs(got - want) <= 1e-6 * max(abs(want), 1)
        assert rs.zero_multiplicity == p.gamma
        for r in rs.nonzero_roots:
            if r.imag != 0:
                assert r.conjugate() in rs.nonzero_roots
            else:
                assert r.real < 0
        _, reduced = deflate_zero(p)
        if len(reduced) == 3:
            for got, want in zip(rs.nonzero_roots, quadratic_roots(*reduced)):
                assert abs(got - want) <= 1e-10
    # the two spot checks called out for the quadratic oracle
    p3 = find_roots(count_dominating_sets(path(3)))
    assert abs(p3.nonzero_roots[0] - (-3 - math.sqrt(5)) / 2) <= 1e-10
    assert abs(p3.nonzero_roots[1] - (-3 + math.sqrt(5)) / 2) <= 1e-10
    c4 = find_roots(count_dominating_sets(cycle(4)))
    assert c4.zero_multiplicity == 2
    assert abs(c4.nonzero_roots[0] - complex(-2, -math.sqrt(2))) <= 1e-10
    assert abs(c4.nonzero_roots[1] - complex(-2, math.sqrt(2))) <= 1e-10
    report(5, "residual, reconstruction, conjugacy, and quadratic-oracle certificates hold")


def test_criterion_6_isomorphism_invariance():
    rng = random.Random(99)
    for n in range(1, 7):
        for _ in range(200):
            g = Graph.from_edges(
                n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
            )
            relabeled = permute_graph(g, rng.sample(range(n), n))
            assert canonical_form(g) == canonical_form(relabeled)
            assert count_dominating_sets(g) == count_dominating_sets(relabeled)
    report(6, "canonical form and polynomial invariant under 200 relabelings per order")


def test_criterion_7_parallel_determinism():
    serial = render(build_atlas(AtlasConfig(max_order=6, jobs=1)), "csv")
    parallel = render(build_atlas(AtlasConfig(max_order=6, jobs=8)), "csv")
    assert serial.encode() == parallel.encode()
    report(7, "jobs=1 and jobs=8 builds are byte-identical")
