from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecketrace.cyclotomic import CyclotomicNumber, cyclotomic_polynomial


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(105)[7] == -2  # first coefficient outside {0,+-1}


def test_roots_of_unity_relations():
    z4 = CyclotomicNumber.zeta(4)
    assert z4 * z4 == -1
    z3 = CyclotomicNumber.zeta(3)
    assert 1 + z3 + z3 * z3 == 0
    for m in (1, 2, 3, 4, 5, 6, 8, 12):
        z = CyclotomicNumber.zeta(m)
        prod = CyclotomicNumber.one(m)
        for _ in range(m):
            prod = prod * z
        assert prod == 1


def test_embedding_round_trip():
    x = CyclotomicNumber.from_rational(-1, 2)
    assert x.embed(12) == CyclotomicNumber.from_rational(-1)
    z6 = CyclotomicNumber.zeta(6)
    assert z6.embed(12) == CyclotomicNumber.zeta(12, 2)
    with pytest.raises(ValueError):
        CyclotomicNumber.zeta(4).embed(6)


def test_cross_field_equality():
    assert CyclotomicNumber.zeta(2) == CyclotomicNumber.from_rational(-1, 12)
    assert CyclotomicNumber.zeta(6, 3) == CyclotomicNumber.zeta(4, 2)


def test_canonical_zero():
    z8 = CyclotomicNumber.zeta(8)
    x = z8 * z8 * z8 * z8 + 1  # zeta_8^4 = -1
    assert not x
    assert x.coeffs == (Fraction(0),) * 4


small = st.integers(-6, 6)


@st.composite
def cyclo(draw, m=12):
    from hecketrace.arith import euler_phi
    return CyclotomicNumber(m, [Fraction(draw(small), draw(st.integers(1, 4)))
                                for _ in range(euler_phi(m))])


@settings(max_examples=120)
@given(cyclo(), cyclo(), cyclo())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == 0
    assert a * (b * c) == (a * b) * c


def test_rational_detection_and_json():
    x = CyclotomicNumber.zeta(5) + CyclotomicNumber.zeta(5, 2) \
        + CyclotomicNumber.zeta(5, 3) + CyclotomicNumber.zeta(5, 4)
    assert x.is_rational() and x.rational_value() == -1
    assert x.to_json() == {"int": -1}
    y = CyclotomicNumber.from_rational(Fraction(-1, 12))
    assert y.to_json() == {"rat": "-1/12"}
    z = CyclotomicNumber.zeta(8) + 1
    again = CyclotomicNumber.from_json(z.to_json())
    assert again == z


def test_algebraic_integer_flag():
    assert CyclotomicNumber.zeta(7).is_algebraic_integer()
    assert not CyclotomicNumber.from_rational(Fraction(1, 2), 7).is_algebraic_integer()


def test_exponent_weights_constructor():
    w = {0: 2, 3: Fraction(1, 2), 11: -1}
    direct = CyclotomicNumber.from_exponent_weights(12, w)
    expected = (CyclotomicNumber.from_rational(2, 12)
                + CyclotomicNumber.zeta(12, 3) * Fraction(1, 2)
                - CyclotomicNumber.zeta(12, 11))
    assert direct == expected
