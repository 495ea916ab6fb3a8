from fractions import Fraction
from math import gcd

import pytest

from hecketrace.classnum import (class_number, hurwitz_class_number,
                                 hurwitz_weighted_count, inversion_check,
                                 kronecker_hurwitz_check, primitive_hurwitz,
                                 reduced_forms, unit_count,
                                 class_number_relations_check)


def test_reduced_forms_examples():
    assert reduced_forms(-3) == ((1, 1, 1),)
    assert reduced_forms(-4) == ((1, 0, 1),)
    assert set(reduced_forms(-12)) == {(1, 0, 3), (2, 2, 2)}
    assert set(reduced_forms(-23)) == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}


def test_reduced_forms_rejects_non_discriminants():
    for D in (0, 5, -1, -2, -5, -6):
        with pytest.raises(ValueError):
            reduced_forms(D)


def test_reduced_forms_are_reduced_with_right_discriminant():
    for D in range(-400, 0):
        if D % 4 not in (0, 1):
            continue
        for a, b, c in reduced_forms(D):
            assert b * b - 4 * a * c == D
            assert abs(b) <= a <= c
            if abs(b) == a or a == c:
                assert b >= 0


def test_class_number_and_units():
    assert (class_number(-3), unit_count(-3)) == (1, 6)
    assert (class_number(-4), unit_count(-4)) == (1, 4)
    assert (class_number(-23), unit_count(-23)) == (3, 2)


def test_hurwitz_examples():
    H = hurwitz_class_number
    assert H(0) == Fraction(-1, 12)
    assert H(3) == Fraction(1, 3)
    assert H(4) == Fraction(1, 2)
    assert H(-9) == Fraction(-3, 2)
    assert H(5) == 0
    assert H(7) == 1
    assert H(23) == 3


def test_primitive_hurwitz_examples():
    assert primitive_hurwitz(0) == Fraction(-1, 12)
    assert primitive_hurwitz(4) == Fraction(-1, 2)   # -phi(2)/2
    assert primitive_hurwitz(-3) == Fraction(1, 3)
    assert primitive_hurwitz(-7) == 1
    assert primitive_hurwitz(2) == 0


def test_hurwitz_against_primitive_bookkeeping():
    # H(D) as a stabilizer-weighted count equals the h0 sum over square divisors
    for D in range(1, 2001):
        lhs = hurwitz_class_number(D)
        rhs = sum((primitive_hurwitz(-D // (d * d)) for d in range(1, D + 1)
                   if d * d <= D and D % (d * d) == 0), Fraction(0))
        assert lhs == rhs, D


def test_inversion_small():
    report = inversion_check(500)
    assert report.ok, report.first_failure()


def test_kronecker_hurwitz_examples():
    # n = 1: 1/2 + 2*(1/3) + 2*(-1/12) = 1
    assert kronecker_hurwitz_check(1)
    # n = 2 includes H(-1) = -1/2 at t = +-3
    assert kronecker_hurwitz_check(2)
    assert all(kronecker_hurwitz_check(n) for n in range(1, 101))


def test_relation_table_spot_values():
    H = hurwitz_class_number
    assert H(12) == 4 * H(3) == Fraction(4, 3)
    assert H(28) == 2 * H(7) == 2
    assert H(16) == 3 * H(4) - 2 * H(1) == Fraction(3, 2)
    assert class_number_relations_check(300).ok
