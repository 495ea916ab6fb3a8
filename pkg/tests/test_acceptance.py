"""Acceptance suite: every criterion exact (tolerance zero), one line per criterion.

Run as `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
"""

import random
from fractions import Fraction
from math import gcd

import pytest

from hecketrace.arith import divisors, euler_phi, sigma1_coprime
from hecketrace.atkin_lehner import ALQuery, trace_tn_wl
from hecketrace.characters import (enumerate_characters, product_character,
                                   trivial_character)
from hecketrace.classnum import (hurwitz_class_number, inversion_check,
                                 kronecker_hurwitz_check,
                                 class_number_relations_check)
from hecketrace.cyclotomic import CyclotomicNumber
from hecketrace.gamma0 import (TraceQuery, char_weight, char_weight_mobius,
                               cusp_sum, trace_cusp, trace_full)
from hecketrace.gamma1 import (gamma1_cusp_sum, trace_cusp_gamma1,
                               trace_cusp_stable, trace_full_gamma1,
                               trace_full_stable)
from hecketrace.level4 import (trace_even_index, trace_even_weight_odd_index,
                               trace_level4, trace_odd_weight_odd_index)
from hecketrace.oracles import EIGENFORM_WEIGHTS, eigenform_qexp, genus_x0


def _announce(num, name):
    print(f"\nACCEPTANCE {num} ({name}): PASS", flush=True)


def test_criterion_1_level_one_eigenvalues():
    triv = trivial_character(1)
    for k in EIGENFORM_WEIGHTS:
        oracle = eigenform_qexp(k, 50)
        for n in range(1, 51):
            got = trace_cusp(TraceQuery(1, k, triv, n)).as_integer()
            assert got == oracle[n], (k, n, got, oracle[n])
    _announce(1, "level-1 eigenvalues, k in {12,16,18,20,22,26}, n <= 50")


def test_criterion_2_genus_dimension():
    for N in range(1, 101):
        got = trace_cusp(TraceQuery(N, 2, trivial_character(N), 1)).as_integer()
        assert got == genus_x0(N), (N, got, genus_x0(N))
    _announce(2, "tr(T_1, S_2(N)) = genus X_0(N), N <= 100")


def test_criterion_3_kronecker_hurwitz():
    for n in range(1, 501):
        assert kronecker_hurwitz_check(n), n
    _announce(3, "Kronecker-Hurwitz sum_t H(4n-t^2) = sigma_1(n), n <= 500")


def test_criterion_4_class_number_inversion():
    report = inversion_check(10 ** 4)
    assert report.ok, report.first_failure()
    table = class_number_relations_check(2000)
    assert table.ok, table.first_failure()
    _announce(4, "inversion identities |D| <= 10^4 and H(4D) table D <= 2000")


def test_criterion_5_character_sum_consistency():
    for N in range(1, 17):
        chars = enumerate_characters(N)
        for k in range(2, 7):
            for n in range(1, 13):
                total = CyclotomicNumber.zero()
                for chi in chars:
                    val = trace_cusp(TraceQuery(N, k, chi, n)).value
                    if chi.parity() != (-1) ** k:
                        assert not val, (N, k, n, chi)   # wrong parity contributes 0
                    total = total + val
                # imaginary parts must cancel identically: the sum is a rational integer
                assert total.is_rational(), (N, k, n)
                assert total.as_integer() == trace_cusp_gamma1(N, k, n), (N, k, n)
    _announce(5, "sum over chi of tr = Gamma_1 trace, N <= 16, k <= 6, n <= 12")


def test_criterion_6_atkin_lehner():
    for N in range(1, 31):
        triv = trivial_character(N)
        for k in (2, 4, 6):
            for n in range(1, 21):
                assert trace_tn_wl(ALQuery(N, 1, k, n)) \
                    == trace_cusp(TraceQuery(N, k, triv, n)).as_integer(), (N, k, n)
    for N in range(1, 51):
        g = genus_x0(N)
        for ell in divisors(N):
            if ell > 1 and gcd(ell, N // ell) == 1:
                tr = trace_tn_wl(ALQuery(N, ell, 2, 1))
                assert abs(tr) <= g and (tr - g) % 2 == 0, (N, ell, tr, g)
    _announce(6, "W_ell: ell=1 degeneration (N <= 30) and involution bound (N <= 50)")


def test_criterion_7_stable_closed_forms():
    for n in range(2, 9):
        for k in (2, 3, 4, 6):
            for N in range(2 * n + 3, 61):
                assert trace_cusp_stable(N, k, n) == trace_cusp_gamma1(N, k, n), \
                    ("S", N, k, n)
                assert trace_full_stable(N, k, n) == trace_full_gamma1(N, k, n), \
                    ("MS", N, k, n)
                if k > 2 and gcd(N, n - 1) == 1:
                    ratio = Fraction(trace_cusp_gamma1(N, k, n), euler_phi(N))
                    assert ratio == Fraction(-1, 2), (N, k, n, ratio)
    _announce(7, "closed forms = Theorem-5 engine on 2n+2 < N <= 60; ratio -1/2")


def test_criterion_8_level_four_formulas():
    chars4 = enumerate_characters(4)
    for k in range(2, 9):
        chi = chars4[0] if k % 2 == 0 else chars4[1]
        for n in range(1, 101):
            assert trace_level4(k, n) \
                == trace_cusp(TraceQuery(4, k, chi, n)).as_integer(), (k, n)
    for n in range(1, 501):
        if n % 2:
            assert trace_even_weight_odd_index(2, n) == 0, n
            assert trace_odd_weight_odd_index(3, n) == 0, n
        else:
            assert trace_even_index(2, n) == 0, n
    for k in (3, 5, 7):
        for n in range(3, 501, 4):
            assert trace_odd_weight_odd_index(k, n) == 0, (k, n)
    _announce(8, "level-4 closed formulas vs engines (n <= 100) and trivial spaces")


def test_criterion_9_structural_invariants():
    # cusp-sum symmetry over the full stated grid
    for N in range(1, 25):
        for chi in enumerate_characters(N):
            for a in range(1, 41):
                for d in range(a + 1, 41):
                    assert cusp_sum(a, d, N, chi) == cusp_sum(d, a, N, chi), (N, a, d)
    # gamma1 cusp-sum symmetry
    for N in range(1, 25):
        for a in range(-12, 13):
            for d in range(-12, 13):
                assert gamma1_cusp_sum(a, d, N) == gamma1_cusp_sum(d, a, N)
    # reflection B(u,-t,n) = chi(-1) B(u,t,n) and Moebius round-trip, sampled
    rng = random.Random(404)
    for _ in range(400):
        N = rng.randrange(1, 25)
        chi = rng.choice(enumerate_characters(N))
        t = rng.randrange(-10, 11)
        n = rng.randrange(1, 31)
        for u in divisors(N):
            if (t * t - 4 * n) % (u * u):
                continue
            assert char_weight(u, -t, n, N, chi) \
                == char_weight(u, t, n, N, chi) * chi.parity()
            total = CyclotomicNumber.zero(chi.order())
            for d in divisors(u):
                total = total + char_weight_mobius(d, t, n, N, chi)
            assert total == char_weight(u, t, n, N, chi)
    # multiplicativity in the level
    for _ in range(60):
        N1, N2 = rng.choice([(4, 9), (3, 8), (5, 4), (7, 9), (8, 3), (16, 3)])
        chi1 = rng.choice(enumerate_characters(N1))
        chi2 = rng.choice(enumerate_characters(N2))
        chi = product_character(chi1, chi2)
        t, n = rng.randrange(-8, 9), rng.randrange(1, 13)
        for u1 in divisors(N1):
            for u2 in divisors(N2):
                u = u1 * u2
                if (t * t - 4 * n) % (u * u):
                    continue
                assert char_weight(u, t, n, N1 * N2, chi) \
                    == char_weight(u1, t, n, N1, chi1) * char_weight(u2, t, n, N2, chi2)
                assert char_weight_mobius(u, t, n, N1 * N2, chi) \
                    == char_weight_mobius(u1, t, n, N1, chi1) \
                    * char_weight_mobius(u2, t, n, N2, chi2)
    # integrality of final traces (raises IntegralityError on failure)
    for N in range(1, 25):
        triv = trivial_character(N)
        for k in (2, 4, 6, 8, 10, 12):
            for n in range(1, 31):
                val = trace_cusp(TraceQuery(N, k, triv, n)).value
                assert val.rational_value().denominator == 1
    # parity vanishing of the combined trace for wrong-parity characters
    for N in range(1, 25):
        for chi in enumerate_characters(N):
            for k in (2, 3):
                if chi.parity() == (-1) ** k:
                    continue
                for n in range(1, 31):
                    assert not trace_full(TraceQuery(N, k, chi, n)).value, (N, k, n)
    _announce(9, "symmetries, reflection, multiplicativity, integrality, parity")


def test_criterion_10_mutation_sensitivity(monkeypatch):
    # flipping the H(-u^2) sign must break the Kronecker-Hurwitz suite at n = 2
    import hecketrace.classnum as classnum_mod
    monkeypatch.setattr(classnum_mod, "_negative_square_value",
                        lambda u: Fraction(u, 2))
    assert not kronecker_hurwitz_check(2), "sign flip went undetected"
    monkeypatch.undo()
    assert kronecker_hurwitz_check(2)

    # a wrong chi-evaluation convention (dropping the coprimality zero in the
    # cusp sum) must break the character-sum consistency suite
    from hecketrace.characters import DirichletCharacter

    def sloppy_value_mod(self, a, M):
        c = self.conductor()
        a %= M
        if gcd(a, c) != 1:
            return CyclotomicNumber.zero(self.order())
        b = a
        while gcd(b, self.N) != 1:
            b += c
        return self(b)

    monkeypatch.setattr(DirichletCharacter, "value_mod", sloppy_value_mod)
    broken = False
    for N in (4, 8, 9, 12, 16):
        for k in (2, 3, 4):
            for n in range(1, 13):
                total = CyclotomicNumber.zero()
                try:
                    for chi in enumerate_characters(N):
                        total = total + trace_cusp(TraceQuery(N, k, chi, n)).value
                    if (not total.is_rational()
                            or total.rational_value() != trace_cusp_gamma1(N, k, n)):
                        broken = True
                except (ValueError, ArithmeticError):
                    broken = True
    assert broken, "wrong evaluation convention went undetected"
    monkeypatch.undo()
    _announce(10, "mutation sensitivity: seeded bugs break suites 3 and 5")
