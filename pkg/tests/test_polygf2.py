"""Polynomial arithmetic: pinned examples plus algebraic laws."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibgrid import (
    ONE,
    X,
    ZERO,
    PolyGF2,
    add,
    divrem,
    gcd,
    mul,
    multiplicity,
    ore_product_gcd,
    subst_x_plus_1,
)

P = PolyGF2.parse

polys = st.binary(max_size=256).map(lambda b: PolyGF2(int.from_bytes(b, "little")))
small_polys = st.binary(max_size=48).map(lambda b: PolyGF2(int.from_bytes(b, "little")))
nonzero_polys = polys.filter(bool)
nonzero_small = small_polys.filter(bool)


# -- pinned examples ----------------------------------------------------------


def test_construction_and_degree():
    assert PolyGF2().bits == 0
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert X.degree == 1
    assert P("x^5 + x").degree == 5
    assert PolyGF2.monomial(7) == P("x^7")
    assert PolyGF2.from_coeffs([1, 0, 1]) == P("x^2 + 1")
    assert P("x^2 + 1").coefficient(0) == 1
    assert P("x^2 + 1").coefficient(1) == 0
    assert P("x^2 + 1").coefficient(100) == 0


def test_equality_is_structural():
    assert P("x^2 + x") == PolyGF2(0b110)
    assert hash(P("x^2 + x")) == hash(PolyGF2(6))
    assert P("x") != P("x + 1")
    assert not ZERO
    assert ONE


def test_add_examples():
    assert P("x^2 + 1") + P("x^2 + x") == P("x + 1")
    assert P("x^5 + x") + P("x^5 + x") == ZERO
    assert add(P("x^3"), ZERO) == P("x^3")
    # x*f_3 + f_2 = f_4
    assert X * P("x^2 + 1") + X == P("x^3")
    # subtraction is the same operation
    assert P("x^2 + 1") - P("x^2 + x") == P("x + 1")


def test_mul_examples():
    assert X * P("x^2 + 1") == P("x^3 + x")
    assert P("x + 1") * P("x + 1") == P("x^2 + 1")
    assert mul(P("x^2 + 1"), P("x^2 + 1")) == P("x^4 + 1")
    assert X * P("x^2 + 1") * P("x^2 + 1") == P("x^5 + x")
    assert ZERO * P("x^9 + x") == ZERO


def test_divrem_examples():
    assert divrem(P("x^3 + x"), P("x + 1")) == (P("x^2 + x"), ZERO)
    assert divrem(X, X) == (ONE, ZERO)
    assert divrem(P("x^4 + x^2 + 1"), P("x^3")) == (X, P("x^2 + 1"))
    assert P("x^4 + x^2 + 1") // P("x^3") == X
    assert P("x^4 + x^2 + 1") % P("x^3") == P("x^2 + 1")
    assert divmod(P("x^3 + x"), P("x + 1")) == (P("x^2 + x"), ZERO)
    assert divrem(ZERO, P("x + 1")) == (ZERO, ZERO)
    assert divrem(X, P("x^5")) == (ZERO, X)


def test_divrem_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        divrem(P("x^3"), ZERO)
    with pytest.raises(ZeroDivisionError):
        P("x^3") % ZERO


def test_gcd_examples():
    assert gcd(X, P("x + 1")) == ONE
    assert gcd(P("x^4 + x^2 + 1"), P("x^4 + x^2 + 1")) == P("x^4 + x^2 + 1")
    assert gcd(P("x^3"), ZERO) == P("x^3")
    assert gcd(ZERO, P("x^3")) == P("x^3")
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


def test_subst_examples():
    assert subst_x_plus_1(X) == P("x + 1")
    assert subst_x_plus_1(P("x^2 + 1")) == P("x^2")
    assert subst_x_plus_1(ZERO) == ZERO
    assert subst_x_plus_1(ONE) == ONE


def test_multiplicity_examples():
    assert multiplicity(P("x^2 + 1"), P("x + 1")) == 2
    assert multiplicity(P("x^3"), X) == 3
    assert multiplicity(P("x^2 + x + 1"), X) == 0
    # f_6 = x * (x+1)^4
    assert multiplicity(P("x^5 + x"), X) == 1
    assert multiplicity(P("x^5 + x"), P("x + 1")) == 4
    with pytest.raises(ValueError):
        multiplicity(ZERO, X)
    with pytest.raises(ValueError):
        multiplicity(P("x^3"), ONE)


def test_ore_example():
    # the factors of f_6(x) and f_6(x+1); the combined gcd is x^2 + x
    got = ore_product_gcd(X, P("x^4 + 1"), P("x + 1"), P("x^4"))
    assert got == P("x^2 + x")
    assert got == gcd(X * P("x^4 + 1"), P("x + 1") * P("x^4"))
    with pytest.raises(ValueError):
        ore_product_gcd(ZERO, ONE, ONE, ONE)


def test_pow_and_shift():
    assert P("x + 1") ** 2 == P("x^2 + 1")
    assert P("x + 1") ** 5 == P("x + 1") * P("x + 1") * P("x + 1") * P("x + 1") * P("x + 1")
    assert X**0 == ONE
    assert ZERO**0 == ONE
    assert ZERO**3 == ZERO
    assert (P("x + 1") << 3) == P("x^4 + x^3")
    with pytest.raises(ValueError):
        X ** (-1)
    with pytest.raises(ValueError):
        X << -1


def test_validation():
    with pytest.raises(ValueError):
        PolyGF2(-1)
    with pytest.raises(ValueError):
        PolyGF2.monomial(-2)
    with pytest.raises(ValueError):
        PolyGF2.from_coeffs([1, 2])
    with pytest.raises(ValueError):
        P("x^2 + y")
    with pytest.raises(ValueError):
        P("x + x")
    with pytest.raises(ValueError):
        P("")


# -- formats ------------------------------------------------------------------


def test_text_format():
    assert P("x^5 + x").to_text() == "x^5 + x"
    assert str(P("x^5 + x")) == "x^5 + x"
    assert ZERO.to_text() == "0"
    assert ONE.to_text() == "1"
    assert (X + ONE).to_text() == "x + 1"
    assert PolyGF2(0b10101).to_text() == "x^4 + x^2 + 1"
    assert repr(X) == "PolyGF2('x')"


def test_hex_format():
    assert P("x^5 + x").to_hex() == "22"
    assert ZERO.to_hex() == ""
    assert PolyGF2.from_hex("") == ZERO
    assert PolyGF2.from_hex("22") == P("x^5 + x")
    # little-endian byte order: low coefficients come first
    assert P("x^8 + 1").to_hex() == "0101"
    assert PolyGF2.from_hex("0101") == P("x^8 + 1")


@given(polys)
def test_text_round_trip(p):
    assert PolyGF2.parse(p.to_text()) == p


@given(polys)
def test_hex_round_trip(p):
    assert PolyGF2.from_hex(p.to_hex()) == p


# -- algebraic laws -----------------------------------------------------------


@given(polys, polys)
def test_add_laws(p, q):
    assert p + q == q + p
    assert p + q == PolyGF2(p.bits ^ q.bits)
    assert p + p == ZERO
    assert p + ZERO == p


@given(polys, polys, polys)
def test_add_associative(p, q, r):
    assert (p + q) + r == p + (q + r)


@given(polys, polys)
def test_mul_commutative_with_degree_sum(p, q):
    assert p * q == q * p
    if p and q:
        assert (p * q).degree == p.degree + q.degree
    assert p * ONE == p
    assert p * ZERO == ZERO


@given(small_polys, small_polys, small_polys)
def test_mul_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, nonzero_polys)
def test_divrem_reconstructs(p, q):
    quot, rem = divrem(p, q)
    assert quot * q + rem == p
    assert rem.degree < q.degree


@given(polys, polys)
def test_gcd_divides_both(p, q):
    if not p and not q:
        return
    g = gcd(p, q)
    assert g == gcd(q, p)
    for v in (p, q):
        if v:
            assert v % g == ZERO


@given(small_polys, small_polys, nonzero_small)
def test_gcd_scales(p, q, r):
    if not p and not q:
        return
    assert gcd(p * r, q * r) == r * gcd(p, q)


@given(polys)
def test_subst_involution(p):
    assert subst_x_plus_1(subst_x_plus_1(p)) == p
    assert subst_x_plus_1(p).degree == p.degree


@given(small_polys, small_polys)
def test_subst_is_ring_homomorphism(p, q):
    assert subst_x_plus_1(p + q) == subst_x_plus_1(p) + subst_x_plus_1(q)
    assert subst_x_plus_1(p * q) == subst_x_plus_1(p) * subst_x_plus_1(q)


@given(polys)
def test_square_consistency(p):
    assert p**2 == p * p


@given(nonzero_small, nonzero_small, nonzero_small, nonzero_small)
def test_ore_matches_direct_product_gcd(a, b, c, d):
    assert ore_product_gcd(a, b, c, d) == gcd(a * b, c * d)
