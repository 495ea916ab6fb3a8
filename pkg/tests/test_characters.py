from math import gcd

import pytest

from hecketrace.arith import divisors, euler_phi
from hecketrace.characters import (DirichletCharacter, enumerate_characters,
                                   product_character, trivial_character,
                                   unit_group)
from hecketrace.cyclotomic import CyclotomicNumber


def test_unit_group_examples():
    assert unit_group(1).generators == ()
    assert sorted(unit_group(8).orders) == [2, 2]
    g7 = unit_group(7)
    assert g7.orders == (6,) and g7.generators == (3,)


def test_unit_group_structure():
    for N in range(1, 80):
        grp = unit_group(N)
        prod = 1
        for o in grp.orders:
            prod *= o
        assert prod == euler_phi(N)
        for g, o in zip(grp.generators, grp.orders):
            assert pow(g, o, N) == 1 % N
            for d in divisors(o):
                if d < o:
                    assert pow(g, d, N) != 1 % N or d == o
        # discrete log covers exactly the units
        units = [a for a in range(N) if gcd(a, N) == 1]
        for a in units:
            vec = grp.dlog(a)
            val = 1 % N
            for g, e in zip(grp.generators, vec):
                val = val * pow(g, e, N) % N
            assert val == a % N


def test_enumerate_characters_counts_and_parity():
    assert len(enumerate_characters(1)) == 1
    chars4 = enumerate_characters(4)
    assert len(chars4) == 2
    assert chars4[1](3) == -1     # the nontrivial character mod 4
    assert sorted(c.order() for c in enumerate_characters(5)) == [1, 2, 4, 4]
    for N in range(1, 40):
        chars = enumerate_characters(N)
        assert len(chars) == euler_phi(N)
        even = enumerate_characters(N, parity=1)
        odd = enumerate_characters(N, parity=-1)
        assert len(even) + len(odd) == len(chars)
        assert all(c.parity() == 1 for c in even)
        assert all(c.parity() == -1 for c in odd)


def test_orthogonality():
    for N in range(1, 61):
        for a in range(1, N + 1):
            if gcd(a, N) != 1:
                continue
            total = sum((chi(a) for chi in enumerate_characters(N)),
                        CyclotomicNumber.zero())
            assert total == (euler_phi(N) if a % N == 1 % N else 0), (N, a)


def test_eval_multiplicative_and_parity():
    for N in (1, 4, 5, 8, 9, 12, 16, 21):
        for chi in enumerate_characters(N):
            units = [a for a in range(1, N + 1) if gcd(a, N) == 1]
            for a in units[:6]:
                for b in units[:6]:
                    assert chi(a * b) == chi(a) * chi(b)
            assert chi(-1) == CyclotomicNumber.from_rational(chi.parity())
            assert chi(N + 1) == chi(1) == 1
            if N > 1:
                nonunit = next((x for x in range(2, N) if gcd(x, N) > 1), None)
                if nonunit is not None:
                    assert chi(nonunit) == 0


def test_conductor_examples():
    assert trivial_character(12).conductor() == 1
    chi4 = enumerate_characters(4)[1]
    assert chi4.conductor() == 4
    # chi4 induced to modulus 8 has conductor 4
    induced = [c for c in enumerate_characters(8)
               if c.conductor() == 4]
    assert induced and all(c.value_mod(3, 4) == -1 for c in induced)


def test_conductor_is_minimal_factoring_modulus():
    for N in range(1, 61):
        for chi in enumerate_characters(N):
            c = chi.conductor()
            assert N % c == 0
            for M in divisors(N):
                factors_through = all(
                    chi.exponent_of(a) == 0
                    for a in range(1, N + 1, M) if gcd(a, N) == 1)
                assert factors_through == (c <= M and M % c == 0), (N, chi, M)


def test_value_mod_examples():
    triv = trivial_character(12)
    assert triv.value_mod(5, 6) == 1
    assert triv.value_mod(4, 6) == 0
    chi4 = enumerate_characters(4)[1]
    assert chi4.value_mod(3, 4) == -1
    # a character mod 12 of conductor 3 evaluated mod 6
    chi = next(c for c in enumerate_characters(12) if c.conductor() == 3)
    assert chi.value_mod(5, 6) == chi(5)
    assert chi.value_mod(2, 6) == 0
    with pytest.raises(ValueError):
        chi.value_mod(1, 2)   # conductor 3 does not divide 2


def test_value_mod_consistent_with_eval():
    for N in (4, 8, 9, 12, 16, 18, 24):
        for chi in enumerate_characters(N):
            c = chi.conductor()
            for M in divisors(N):
                if M % c:
                    continue
                for a in range(M):
                    if gcd(a, N) == 1:
                        assert chi.value_mod(a, M) == chi(a), (N, chi, M, a)


def test_character_json_round_trip():
    for N in (1, 4, 5, 12):
        for chi in enumerate_characters(N):
            blob = chi.to_json()
            assert blob["conductor"] == chi.conductor()
            assert blob["parity"] == chi.parity()
            again = DirichletCharacter.from_json(blob)
            assert again == chi


def test_product_character():
    for chi1 in enumerate_characters(4):
        for chi2 in enumerate_characters(9):
            prod = product_character(chi1, chi2)
            assert prod.N == 36
            for a in range(1, 37):
                if gcd(a, 36) == 1:
                    lhs = prod(a)
                    rhs = chi1(a) * chi2(a)
                    assert lhs == rhs, (chi1, chi2, a)
