"""Acceptance gate. Each test records one PASS/FAIL line shown at the end of the run."""

import random
import time

import pytest

from bupoly.divisor_sums import is_bup, sigma, sigma_bistar, sigma_bistar_oracle
from bupoly.factor import factorize, is_irreducible, is_odd_poly
from bupoly.gf2poly import ONE, X, X1, Poly, gcd, reciprocal, translate
from bupoly.mersenne import BUP_NAMES, enumerate_mersenne
from bupoly.search import (
    blind_search,
    expected_closure,
    omega2_family,
    search_omega3,
    search_omega4_mersenne,
    search_omega4_nonmersenne,
)
from conftest import ACCEPTANCE_LINES, random_poly


def gate(number, title, limit, check):
    """Run check(), time it, record the line, then assert."""
    t0 = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - t0
    in_time = elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    ACCEPTANCE_LINES.append(
        f"[{status}] {number}. {title}: {detail} ({elapsed:.2f}s, limit {limit:g}s)"
    )
    assert ok, detail
    assert in_time, f"took {elapsed:.2f}s, limit {limit}s"


def test_criterion_1_catalog_soundness(bup_catalog):
    def check():
        polys = list(bup_catalog.values())
        polys += [translate(p) for p in polys]
        bad = [p for p in polys if sigma_bistar(p) != p]
        return not bad and len(bup_catalog) == 15, f"{len(polys) - len(bad)}/{len(polys)} fixed points"

    gate(1, "catalog soundness", 1.0, check)


def test_criterion_2_omega2_family():
    def check():
        found = [a for a in range(1, 64) if is_bup(X**a * X1**a)]
        want = [2] + [2**n - 1 for n in range(1, 7)]
        helper = [r.poly for r in omega2_family(126)] == [X**a * X1**a for a in sorted(want)]
        return found == sorted(want) and helper, f"exponents {found}"

    gate(2, "omega=2 family", 1.0, check)


def _closure_check(report, names, size):
    want = {r.poly.mask for r in expected_closure(names)}
    ok = report.verdict and report.hit_masks == want and len(want) == size
    return ok, f"{len(report.hits)} hits, expected {size}, {report.candidate_count} candidates"


def test_criterion_3_omega3_search():
    gate(3, "bounded omega=3 search", 10.0,
         lambda: _closure_check(search_omega3(), [f"C{j}" for j in range(1, 8)], 12))


def test_criterion_4_omega4_mersenne_search():
    gate(4, "bounded omega=4 Mersenne search", 120.0,
         lambda: _closure_check(search_omega4_mersenne(), [f"C{j}" for j in range(8, 14)], 9))


def test_criterion_5_omega4_nonmersenne_search():
    def check():
        report = search_omega4_nonmersenne()
        subs = {s.case_id: len(s.hits) for s in report.subreports}
        want = {r.poly.mask for r in expected_closure(["D1", "D2"])}
        ok = (
            report.verdict
            and subs == {"omega4_nonmersenne_PQ": 0, "omega4_nonmersenne_Q": 0, "omega4_nonmersenne_QP": 4}
            and report.hit_masks == want
        )
        return ok, f"sub-case hits {subs}"

    gate(5, "non-Mersenne omega=4 searches", 30.0, check)


def test_criterion_6_blind_search():
    def check():
        report = blind_search(24, 4)
        catalog = {r.poly.mask for r in expected_closure(BUP_NAMES) if r.degree <= 24}
        family = {r.poly.mask for r in omega2_family(24)}
        want = catalog | family
        ok = report.verdict and report.hit_masks == want
        extra = len(report.hit_masks - want)
        missing = len(want - report.hit_masks)
        return ok, f"{len(report.hits)} hits, {missing} missing, {extra} extra"

    gate(6, "blind search to degree 24", 600.0, check)


def test_criterion_7_oracle_equivalence():
    def check():
        inputs = [Poly(m) for m in range(1, 1 << 11)]
        rng = random.Random(7)
        inputs += [random_poly(rng, 16) for _ in range(1000)]
        bad = [s for s in inputs if sigma_bistar(s) != sigma_bistar_oracle(s)]
        return not bad, f"{len(inputs) - len(bad)}/{len(inputs)} agree"

    gate(7, "closed form vs divisor oracle", 60.0, check)


def _coprime_pairs(rng, count, max_degree):
    out = []
    while len(out) < count:
        s, t = random_poly(rng, max_degree), random_poly(rng, max_degree)
        if gcd(s, t) == ONE:
            out.append((s, t))
    return out


def _properties():
    results = {}
    pairs = _coprime_pairs(random.Random(77), 500, 20)
    results["multiplicativity"] = all(sigma_bistar(s * t) == sigma_bistar(s) * sigma_bistar(t) for s, t in pairs)

    primes = [Poly(m) for m in range(2, 1 << 7) if is_irreducible(Poly(m))]
    results["non-divisibility"] = all(sigma_bistar(t**c) % t for t in primes for c in range(13))

    results["split criterion"] = all(
        all(p in (X, X1) for p, _ in factorize(sigma_bistar(X**a))) == (a == 2 or (a + 1) & a == 0)
        for a in range(1, 65)
    )

    bases = [X, X1] + [m.poly for m in enumerate_mersenne(4)]
    results["squarefreeness"] = all(
        is_odd_poly(sigma(t ** (2 * m))) and all(e == 1 for _, e in factorize(sigma(t ** (2 * m))))
        for m in range(1, 13) for t in bases
    )

    results["equality set"] = [n for n in range(63) if sigma(X**n) == sigma(X1**n)] == [0, 2, 6, 14, 30, 62]

    results["irreducibility nu"] = [
        nu for nu in range(1, 6) if is_irreducible(ONE + X * X1 ** (2**nu - 1))
    ] == [1, 2]

    fixed = [m.poly for m in enumerate_mersenne(12) if reciprocal(m.poly) == m.poly]
    results["self-reciprocal"] = fixed == [ONE + X * X1, ONE + X * X1**3]
    return results


def test_criterion_8_property_suites():
    def check():
        results = _properties()
        failed = [k for k, v in results.items() if not v]
        return not failed, f"{len(results) - len(failed)}/{len(results)} suites" + (
            f", failed: {', '.join(failed)}" if failed else ""
        )

    gate(8, "property suites", 60.0, check)


def _mutants(poly):
    factors = factorize(poly).factors
    for i in range(len(factors)):
        out = ONE
        for j, (p, e) in enumerate(factors):
            out *= p ** (e + (i == j))
        yield out


def test_criterion_9_negative_control(bup_catalog):
    def check():
        mutants = [m for p in bup_catalog.values() for m in _mutants(p)]
        survivors = [m for m in mutants if is_bup(m)]
        return not survivors and len(mutants) >= 45, f"{len(mutants) - len(survivors)}/{len(mutants)} mutants rejected"

    gate(9, "single-exponent mutants rejected", 60.0, check)


@pytest.mark.parametrize("name", sorted(BUP_NAMES))
def test_mutants_per_entry(name, bup_catalog):
    assert all(not is_bup(m) for m in _mutants(bup_catalog[name]))
