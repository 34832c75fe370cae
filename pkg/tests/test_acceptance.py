"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact (zero tolerance). Run alone with

    pytest tests/test_acceptance.py -s

or as a script: ``python tests/test_acceptance.py``.
"""

import functools
import random
import time
from fractions import Fraction

from conftest import M43_UPPER, M53_UPPER, full_from_upper
from mobius_hosoya.cli import main
from mobius_hosoya.closed_forms import hosoya_coeffs_closed, indices_closed, pair_total
from mobius_hosoya.graph_core import Graph, distance_matrix, hosoya_from_distances, hosoya_polynomial, path_graph
from mobius_hosoya.ladder import LadderSpec, assemble_block_distance_matrix, build_ladder
from mobius_hosoya.polynomial import indices_from_polynomial
from mobius_hosoya.verify import Status, verify_graph_relations, verify_indices

RESULTS: list[str] = []


def criterion(number, title):
    def wrap(test):
        @functools.wraps(test)
        def run(*args, **kwargs):
            try:
                test(*args, **kwargs)
            except BaseException as exc:
                reason = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                line = f"criterion {number} FAIL: {title} ({reason})"
                RESULTS.append(line)
                print(line, flush=True)
                raise
            line = f"criterion {number} PASS: {title}"
            RESULTS.append(line)
            print(line, flush=True)

        return run

    return wrap


def ladder3(m):
    return build_ladder(LadderSpec(m, 3))


@criterion(1, "even m in 6..60: BFS coefficients equal the even-m closed form, < 5 s")
def test_c1_even_coefficients():
    start = time.perf_counter()
    for m in range(6, 61, 2):
        c = hosoya_polynomial(ladder3(m)).coeffs
        expected = (5 * (m - 1), 8 * (m - 1)) + (9 * (m - 1),) * (m // 2 - 3) + (8 * (m - 1),)
        assert c == expected == hosoya_coeffs_closed(m).coeffs, m
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f} s"


@criterion(2, "odd m in 7..61: BFS coefficients equal the odd-m closed form")
def test_c2_odd_coefficients():
    for m in range(7, 62, 2):
        c = hosoya_polynomial(ladder3(m)).coeffs
        assert c == hosoya_coeffs_closed(m).coeffs, m
        assert c[(m - 1) // 2 - 1] * 2 == 17 * (m - 1)
        assert c[(m + 1) // 2 - 1] == 4 * (m - 1)
        assert len(c) == (m + 1) // 2
        assert c[2:(m - 3) // 2] == (9 * (m - 1),) * ((m - 7) // 2)


@criterion(3, "M(4,3) -> [15, 21] and M(5,3) -> [20, 30, 16], printed matrices entrywise")
def test_c3_special_cases():
    g4, g5 = ladder3(4), ladder3(5)
    assert hosoya_polynomial(g4).coeffs == (15, 21)
    assert hosoya_polynomial(g5).coeffs == (20, 30, 16)
    for name, g, upper in (("M(4,3)", g4, M43_UPPER), ("M(5,3)", g5, M53_UPPER)):
        printed = full_from_upper(upper)
        dm = distance_matrix(g)
        diffs = [
            f"(row {i + 1}, col {j + 1}): printed {printed[i][j]}, BFS {dm[i, j]}"
            for i in range(dm.size)
            for j in range(i + 1, dm.size)
            if dm[i, j] != printed[i][j]
        ]
        assert not diffs, f"{name} differs from the printed matrix at " + "; ".join(diffs)


@criterion(4, "block-assembled matrix equals BFS matrix for every m in 6..41")
def test_c4_block_equivalence():
    for m in range(6, 42):
        assert assemble_block_distance_matrix(m) == distance_matrix(ladder3(m)), m


@criterion(5, "worked example m=10: closed coefficients 45,72,81,81,72 and W, WW, Ha")
def test_c5_worked_example(capsys):
    assert main(["poly", "--m", "10", "--method", "closed"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "H = 45x + 72x^2 + 81x^3 + 81x^4 + 72x^5"
    poly = indices_from_polynomial(hosoya_polynomial(ladder3(10)))
    closed = indices_closed(10)
    assert (closed.wiener, closed.hyper_wiener, closed.harary) == (1116, 2637, Fraction(2853, 20))
    assert (poly.wiener, poly.hyper_wiener, poly.harary) == (1116, 2637, Fraction(2853, 20))
    assert main(["indices", "--m", "10", "--source", "closed"]) == 0
    out = capsys.readouterr().out
    assert "W   = 1116" in out and "WW  = 2637" in out and "Ha  = 2853/20" in out


@criterion(6, "polynomial-derived W, WW, Ha, TSZ equal direct pair sums on every tested graph")
def test_c6_relation_consistency():
    graphs = [ladder3(m) for m in range(4, 62)]
    graphs += [Graph.from_edges(2, [(0, 1)])] + [path_graph(n) for n in range(2, 11)]
    for g in graphs:
        check = verify_graph_relations(g)
        assert check.status is Status.MATCH, (g.vertex_count, check)


@criterion(7, "W, WW, Ha closed forms match for m in 6..61; TSZ mismatches as a known discrepancy")
def test_c7_closed_form_indices(capsys):
    for m in range(6, 62):
        r = verify_indices(m)
        for name in ("wiener", "hyper_wiener", "harary"):
            assert r.check(f"indices.{name}").status is Status.MATCH, (m, name)
        t = r.check("indices.tsz")
        assert t.status is Status.MISMATCH and t.known, m
        assert t.expected is not None and t.actual is not None
        assert r.unexpected_mismatches() == [], m
    assert (verify_indices(10).check("indices.tsz").expected, verify_indices(10).check("indices.tsz").actual) == (5283, 1368)
    assert (verify_indices(7).check("indices.tsz").expected, verify_indices(7).check("indices.tsz").actual) == (1212, 416)
    assert main(["verify", "--m-min", "4", "--m-max", "61", "--strict"]) == 0
    out = capsys.readouterr().out
    assert "indices.tsz: expected 5283, got 1368 (known discrepancy)" in out
    assert "indices.tsz: expected 1212, got 416 (known discrepancy)" in out


@criterion(8, "sum of coefficients equals 3(m-1)(3m-4)/2 for m in 4..61, oracle and closed form")
def test_c8_pair_identity():
    for m in range(4, 62):
        total = 3 * (m - 1) * (3 * m - 4) // 2
        assert total == pair_total(m)
        assert hosoya_polynomial(ladder3(m)).pair_count() == total
        assert hosoya_coeffs_closed(m).pair_count() == total


@criterion(9, "distance axioms (V <= 30), relabel invariance (20 perms), simple ladders m 4..61, n 2..5")
def test_c9_property_suite():
    small = [build_ladder(LadderSpec(m, n)) for n in range(2, 6) for m in range(4, 62) if n * (m - 1) <= 30]
    small += [path_graph(n) for n in range(2, 11)]
    for g in small:
        dm = distance_matrix(g)
        n = dm.size
        for i in range(n):
            assert dm[i, i] == 0
            for j in range(n):
                assert dm[i, j] == dm[j, i]
                assert i == j or dm[i, j] >= 1
                for k in range(n):
                    assert dm[i, j] <= dm[i, k] + dm[k, j]

    rnd = random.Random(20240601)
    for g in small:
        base = hosoya_polynomial(g)
        for _ in range(20):
            perm = list(range(g.vertex_count))
            rnd.shuffle(perm)
            assert hosoya_from_distances(distance_matrix(g.relabel(perm))) == base

    for m in range(4, 62):
        for n in range(2, 6):
            g = build_ladder(LadderSpec(m, n))
            assert g.edge_count == (m - 1) * (2 * n - 1)
            assert len(set(g.edges())) == g.edge_count
            assert all(v not in g.adjacency[v] for v in range(g.vertex_count))
            assert g.is_connected()


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
