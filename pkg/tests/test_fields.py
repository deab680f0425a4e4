from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whopf.errors import FieldMismatch, ParseError
from whopf.fields import QQ, Cyc, CyclotomicField, cyclotomic_polynomial, make_field

Z3 = CyclotomicField(3)
Z4 = CyclotomicField(4)
Z12 = CyclotomicField(12)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_rational_arithmetic():
    assert QQ.parse("1/2") + QQ.parse("1/3") == Fraction(5, 6)
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.parse("0/5") == 0
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(ParseError):
        QQ.parse("z")


def test_zeta4_squares_to_minus_one():
    z = Z4.zeta()
    assert z * z == Z4.from_int(-1)


def test_inverse_of_zeta3():
    # oracle: brute-force a + b*z with (a + b*z) * z = 1 over small rationals
    z = Z3.zeta()
    found = None
    for a in range(-2, 3):
        for b in range(-2, 3):
            cand = Z3.from_int(a) + Z3.from_int(b) * z
            if cand * z == Z3.one():
                found = cand
    assert found == Z3.from_int(-1) - z  # zeta3^2 = -1 - zeta3
    assert z.inv() == found
    assert Z3.parse("z^2") == found


def test_zeta_order_and_vanishing_sum():
    for field in (Z3, Z4, Z12):
        n = field.order
        z = field.zeta()
        power = field.one()
        for k in range(1, n):
            power = power * z
            assert power != field.one(), (n, k)
        assert power * z == field.one()
        total = field.zero()
        for k in range(n):
            total = total + field.zeta(k)
        assert not total


def test_parse_format_roundtrip_examples():
    for text in ["0", "1", "-1/2", "z", "-z", "2*z^2", "1-2*z^2", "-1/2+3*z-z^2"]:
        v = Z4.parse(text)
        assert Z4.parse(Z4.format(v)) == v
    assert Z3.format(Z3.parse("1-2*z^2")) == "3+2*z"  # reduced mod z^2+z+1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Z3.zeta() + Z4.zeta()


def test_make_field_canonicalizes_small_orders():
    assert make_field("cyclotomic", 1) is QQ
    assert make_field("cyclotomic", 2) is QQ
    assert make_field("cyclotomic", 5).order == 5
    assert make_field("rational") is QQ


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def cyc3(draw):
    a = draw(rationals)
    b = draw(rationals)
    return Z3.from_fraction(a) + Z3.from_fraction(b) * Z3.zeta()


@settings(max_examples=60, deadline=None)
@given(cyc3(), cyc3(), cyc3())
def test_field_axioms_cyclotomic(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if a:
        assert a * a.inv() == Z3.one()
    assert a + (-a) == Z3.zero()


@settings(max_examples=60, deadline=None)
@given(cyc3())
def test_parse_format_identity_cyclotomic(a):
    assert Z3.parse(Z3.format(a)) == a


def test_mixed_fraction_cyc_coercion():
    z = Z3.zeta()
    assert Fraction(1, 2) + z == z + Fraction(1, 2)
    assert 2 * z == z + z
    assert (1 - z) - 1 == -z
    assert hash(Z3.from_int(7)) == hash(7)
