import random

import pytest
from hypothesis import given, settings

from bupoly.gf2poly import (
    NEG_INF,
    ONE,
    X,
    X1,
    ZERO,
    Poly,
    PolySyntaxError,
    _div_x1,
    _val_x1,
    add,
    divrem,
    format_poly,
    gcd,
    mul,
    parse_poly,
    power,
    reciprocal,
    translate,
)
from conftest import P, polys, random_poly


def test_add_examples():
    assert add(X1, X) == ONE
    p = P("x^2+x+1")
    assert add(p, p) == ZERO
    assert add(Poly(0x3), Poly(0x5)) == Poly(0x6) == P("x+x^2")


def test_mul_examples():
    assert mul(X1, X1) == P("x^2+1")
    assert mul(X1, P("x^2+x+1")) == P("x^3+1")
    assert mul(X, ZERO) == ZERO


def test_divrem_examples():
    assert divrem(P("x^3+1"), X1) == (P("x^2+x+1"), ZERO)
    assert divrem(P("x^2+x+1"), P("x^2")) == (ONE, P("x+1"))
    assert divrem(ONE, X) == (ZERO, ONE)


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(X, ZERO)


def test_gcd_examples():
    assert gcd(P("x^2+1"), X1) == X1
    assert gcd(X, X1) == ONE
    assert gcd(P("x^3+1"), P("x^2+x+1")) == P("x^2+x+1")
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


def test_power_examples():
    assert power(X1, 4) == P("x^4+1")
    assert power(X, 3) == P("x^3")
    assert power(P("x^2+x+1"), 2) == P("x^4+x^2+1")
    assert power(P("x^5+x+1"), 0) == ONE


def test_translate_examples(catalog):
    assert translate(catalog["M4"]) == P("1+x^3+x^4") == catalog["M5"]
    assert translate(catalog["M2"]) == catalog["M3"]
    # (x+1)^2 + (x+1) + 1 = x^2 + x + 1
    assert translate(catalog["M1"]) == catalog["M1"]
    assert translate(X) == X1


def test_reciprocal_examples(catalog):
    assert reciprocal(catalog["M1"]) == catalog["M1"]
    assert reciprocal(catalog["M2"]) == Poly(0xD) == catalog["M3"]
    assert reciprocal(ONE) == ONE
    with pytest.raises(ValueError):
        reciprocal(P("x^2+x"))


def test_parse_examples(catalog):
    assert parse_poly("x^4+x+1") == Poly(0x13)
    c1 = parse_poly("x^3*(x+1)^4*(x^2+x+1)")
    assert c1 == catalog["C1"]
    assert parse_poly("0x7") == P("x^2+x+1")
    assert parse_poly(" x ^ 2 + 1 ") == Poly(0b101)
    assert parse_poly("0") == ZERO


@pytest.mark.parametrize(
    "text, pos",
    [("x^^2", 2), ("x+", 2), ("x+2", 2), ("(x+1", 4), ("y", 0), ("", 0), ("x^99999999", 2)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as err:
        parse_poly(text)
    assert err.value.pos == pos


def test_catalog_references(catalog):
    assert parse_poly("@C6", catalog) == catalog["C6"]
    with pytest.raises(PolySyntaxError):
        parse_poly("@C99", catalog)


def test_format_examples(catalog):
    assert format_poly(ZERO) == "0"
    assert format_poly(P("1+x+x^2")) == "x^2+x+1"
    assert format_poly(catalog["C1"], "factored") == "x^3*(x+1)^4*(x^2+x+1)"
    assert format_poly(Poly(0x13), "hex") == "0x13"


def test_zero_degree_sentinel():
    assert ZERO.degree is NEG_INF
    assert NEG_INF < 0 and not NEG_INF > -(10**9)
    with pytest.raises(TypeError):
        ZERO.degree + 1
    assert ONE.degree == 0


def test_div_by_x_plus_one_helper():
    rng = random.Random(5)
    for _ in range(300):
        q = random_poly(rng, 40)
        k = rng.randint(0, 5)
        m = mul(q, power(X1, k))
        assert _div_x1(mul(q, X1).mask) == q.mask
        assert _val_x1(m.mask) == k + _val_x1(q.mask)


@given(polys(40), polys(40), polys(40))
def test_ring_laws(p, q, r):
    assert mul(p, q) == mul(q, p)
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
    assert add(p, p) == ZERO


@given(polys(40, nonzero=True), polys(40, nonzero=True))
def test_degree_additive(p, q):
    assert mul(p, q).degree == p.degree + q.degree


@given(polys(60), polys(30, nonzero=True))
def test_divrem_reconstructs(num, den):
    q, r = divrem(num, den)
    assert add(mul(q, den), r) == num
    assert r.degree < den.degree


@given(polys(50), polys(50))
def test_translate_is_ring_homomorphism_and_involution(p, q):
    assert translate(translate(p)) == p
    assert translate(mul(p, q)) == mul(translate(p), translate(q))
    assert translate(add(p, q)) == add(translate(p), translate(q))
    assert translate(p).degree == p.degree


@given(polys(50, nonzero=True))
def test_reciprocal_involution(p):
    if p(0):
        assert reciprocal(reciprocal(p)) == p
        assert reciprocal(p).degree == p.degree


def test_power_matches_repeated_multiplication():
    rng = random.Random(11)
    for _ in range(200):
        p = random_poly(rng, 12)
        n = rng.randint(0, 9)
        expect = ONE
        for _ in range(n):
            expect = mul(expect, p)
        assert power(p, n) == expect


@pytest.mark.parametrize("style", ["sum", "hex", "factored"])
def test_format_parse_round_trip(style):
    rng = random.Random({"sum": 1, "hex": 2, "factored": 3}[style])
    for _ in range(1000):
        p = random_poly(rng, 64, nonzero=False)
        assert parse_poly(format_poly(p, style)) == p


@settings(max_examples=200)
@given(polys(64))
def test_sum_round_trip_property(p):
    assert parse_poly(str(p)) == p
