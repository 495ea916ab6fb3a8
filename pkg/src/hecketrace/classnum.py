"""Hurwitz class numbers and their primitive companions, with a reduced-forms oracle.

Conventions. hurwitz_class_number(D) counts (with stabilizer weights 1/2, 1/3)
the reduced positive definite binary quadratic forms of discriminant -D when
D > 0, is -1/12 at D = 0, is -u/2 at D = -u^2, and vanishes elsewhere.
primitive_hurwitz(D) is 2h(D)/w(D) on negative discriminants, -1/12 at 0,
-phi(u)/2 at positive squares u^2, and 0 elsewhere.  The two are Moebius
inverses of one another over square divisors, which inversion_check verifies
by computing both sides independently.

All values are Fractions with denominator dividing 12; nothing is ever rounded.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import divisors, euler_phi, isqrt_exact, mobius
from .report import CheckReport

__all__ = [
    "reduced_forms", "class_number", "unit_count", "hurwitz_class_number",
    "primitive_hurwitz", "hurwitz_weighted_count", "inversion_check",
    "kronecker_hurwitz_check", "class_number_relations_check",
]


def _require_discriminant(D: int):
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")


@lru_cache(maxsize=None)
def reduced_forms(D: int) -> tuple:
    """All reduced forms (a, b, c) of discriminant D < 0, imprimitive ones included.

    Reduced means |b| <= a <= c with b >= 0 when |b| = a or a = c.
    """
    _require_discriminant(D)
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        # b^2 - 4ac = D forces b = D (mod 2)
        start = -a if (a - D) % 2 == 0 else -a + 1
        for b in range(start, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue
            forms.append((a, b, c))
    return tuple(sorted(forms))


def class_number(D: int) -> int:
    """h(D): number of primitive reduced forms of discriminant D < 0."""
    return sum(1 for a, b, c in reduced_forms(D) if gcd(gcd(a, b), c) == 1)


def unit_count(D: int) -> int:
    """w(D): units of the quadratic order, 6 at -3, 4 at -4, else 2."""
    _require_discriminant(D)
    return {-3: 6, -4: 4}.get(D, 2)


def _form_weight(a: int, b: int, c: int) -> Fraction:
    # stabilizer weight: 1/3 for multiples of x^2+xy+y^2, 1/2 for x^2+y^2
    if a == b == c:
        return Fraction(1, 3)
    if b == 0 and a == c:
        return Fraction(1, 2)
    return Fraction(1)


@lru_cache(maxsize=None)
def hurwitz_weighted_count(D: int) -> Fraction:
    """Stabilizer-weighted count of all reduced forms of discriminant -D (D > 0)."""
    return sum((_form_weight(*f) for f in reduced_forms(-D)), Fraction(0))


def _negative_square_value(u: int) -> Fraction:
    # value of H at -u^2; isolated so the mutation-sensitivity test can flip it
    return Fraction(-u, 2)


def hurwitz_class_number(D: int) -> Fraction:
    """H(D), extended to all integers (total function)."""
    if D == 0:
        return Fraction(-1, 12)
    if D > 0:
        if (-D) % 4 in (0, 1):
            return hurwitz_weighted_count(D)
        return Fraction(0)
    u = isqrt_exact(-D)
    if u is not None:
        return _negative_square_value(u)
    return Fraction(0)


@lru_cache(maxsize=None)
def primitive_hurwitz(D: int) -> Fraction:
    """h0(D) = 2h(D)/w(D) on negative discriminants, extended to all integers."""
    if D == 0:
        return Fraction(-1, 12)
    if D < 0:
        if D % 4 in (0, 1):
            return Fraction(2 * class_number(D), unit_count(D))
        return Fraction(0)
    u = isqrt_exact(D)
    if u is not None:
        return Fraction(-euler_phi(u), 2)
    return Fraction(0)


def _square_divisors(D: int):
    # d with d^2 | D; for D = 0 only d = 1, matching the inversion convention
    if D == 0:
        return (1,)
    return tuple(d for d in divisors(abs(D)) if D % (d * d) == 0)


def inversion_check(D_max: int) -> CheckReport:
    """Verify H(-D) = sum h0(D/d^2) and h0(-D) = sum H(D/d^2) mu(d) for |D| <= D_max."""
    report = CheckReport("class-number inversion")
    for D in range(-D_max, D_max + 1):
        lhs_h = hurwitz_class_number(-D)
        rhs_h = sum((primitive_hurwitz(D // (d * d)) for d in _square_divisors(D)), Fraction(0))
        report.record(("H", D), lhs_h, rhs_h)
        lhs_h0 = primitive_hurwitz(-D)
        rhs_h0 = sum((hurwitz_class_number(D // (d * d)) * mobius(d)
                      for d in _square_divisors(D)), Fraction(0))
        report.record(("h0", D), lhs_h0, rhs_h0)
    return report


def hurwitz_sum_support(n: int) -> tuple:
    """All t with H(4n - t^2) possibly nonzero: |t| <= 2 sqrt(n) plus square-defect t.

    The t with t^2 > 4n contribute only when t^2 - 4n is a perfect square,
    enumerated from factor pairs e*f = 4n (e <= f, e = f mod 2, t = (e+f)/2).
    """
    ts = set(range(-isqrt(4 * n), isqrt(4 * n) + 1))
    for e in divisors(4 * n):
        f = 4 * n // e
        if e > f:
            break
        if (e + f) % 2 == 0:
            t = (e + f) // 2
            ts.update((t, -t))
    return tuple(sorted(ts))


def kronecker_hurwitz_check(n: int) -> bool:
    """Check sum_t H(4n - t^2) = sigma_1(n)."""
    total = sum((hurwitz_class_number(4 * n - t * t) for t in hurwitz_sum_support(n)),
                Fraction(0))
    return total == sum(divisors(n))


def class_number_relations_check(D_max: int) -> CheckReport:
    """Verify H(4D) = 4H(D), 2H(D), 3H(D) - 2H(D/4) on the three residue classes."""
    report = CheckReport("H(4D) relations")
    H = hurwitz_class_number
    for D in range(D_max + 1):
        if D % 8 == 3:
            report.record((D, "3 mod 8"), H(4 * D), 4 * H(D))
        elif D % 8 == 7:
            report.record((D, "7 mod 8"), H(4 * D), 2 * H(D))
        elif D % 4 == 0:
            report.record((D, "0 mod 4"), H(4 * D), 3 * H(D) - 2 * H(D // 4))
    return report
