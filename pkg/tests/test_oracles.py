from fractions import Fraction

import pytest

from hecketrace.oracles import (bernoulli, consistency_suite, delta_qexp,
                                eigenform_qexp, eisenstein_qexp, genus_x0)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(26) == Fraction(8553103, 6)
    assert bernoulli(7) == 0


def test_delta_coefficients():
    d = delta_qexp(24)
    known = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830, 6: -6048, 7: -16744,
             11: 534612, 12: -370944, 24: 21288960}
    for n, tau in known.items():
        assert d[n] == tau


def test_eisenstein_normalization():
    e4 = eisenstein_qexp(4, 6)
    assert e4[0] == 1 and e4[1] == 240 and e4[2] == 2160
    e6 = eisenstein_qexp(6, 6)
    assert e6[1] == -504 and e6[2] == -16632


def test_eigenform_examples():
    assert eigenform_qexp(12, 6) == delta_qexp(6)
    assert eigenform_qexp(16, 4)[2] == 216
    assert eigenform_qexp(18, 4)[2] == -528
    assert eigenform_qexp(20, 4)[2] == 456
    assert eigenform_qexp(22, 4)[2] == -288
    assert eigenform_qexp(26, 4)[2] == -48
    with pytest.raises(ValueError):
        eigenform_qexp(14, 4)


def test_eigenforms_are_hecke_eigenforms():
    # coefficient multiplicativity certifies each series is the eigenform
    from math import gcd
    from hecketrace.arith import divisors
    for k in (12, 16, 18, 20, 22, 26):
        f = eigenform_qexp(k, 60)
        assert f[1] == 1
        for m in range(2, 61):
            for n in range(2, 61):
                if m * n > 60:
                    continue
                rhs = sum(d ** (k - 1) * f[m * n // (d * d)]
                          for d in divisors(gcd(m, n)))
                assert f[m] * f[n] == rhs, (k, m, n)


def test_genus_values():
    known = {1: 0, 2: 0, 10: 0, 11: 1, 22: 2, 23: 2, 30: 3, 37: 2, 49: 1,
             50: 2, 64: 3, 97: 7, 100: 7}
    for N, g in known.items():
        assert genus_x0(N) == g, N


def test_consistency_suite_small_bounds():
    report = consistency_suite(max_level=6, max_weight=4, max_index=6,
                               classnum_bound=300)
    assert report.ok, report.first_failure()
    assert report.cases > 1000
