"""Traces of Hecke operators on S_k(Gamma_1(N)) and M_k + S_k(Gamma_1(N)).

The elliptic weights collapse to a divisibility condition N*u | t - n - 1
(no character sums), the cusp weight is a two-sided divisor sum over
factorizations N = r*s, and for N > 2n + 2 everything degenerates to the
closed forms implemented alongside (no class numbers left).
"""

from fractions import Fraction
from math import gcd, isqrt

from .arith import (divisors, euler_phi, gegenbauer, index_gamma0, isqrt_exact,
                    mobius, sigma1_coprime)
from .classnum import hurwitz_class_number, hurwitz_sum_support
from .gamma0 import IntegralityError
from .report import CheckReport

__all__ = ["gamma1_weight", "gamma1_weight_mobius", "gamma1_cusp_sum",
           "trace_full_gamma1", "trace_cusp_gamma1", "trace_full_stable",
           "trace_cusp_stable", "stable_ratio_check"]


def gamma1_weight(u: int, t: int, n: int, N: int) -> Fraction:
    """phi_1(N)/phi_1(N/u) when N*u | t - n - 1, else 0."""
    if N % u:
        raise ValueError(f"u={u} does not divide N={N}")
    if (t * t - 4 * n) % (u * u):
        raise ValueError(f"u^2={u * u} does not divide t^2-4n={t * t - 4 * n}")
    if (t - n - 1) % (N * u):
        return Fraction(0)
    return Fraction(index_gamma0(N), index_gamma0(N // u))


def gamma1_weight_mobius(u: int, t: int, n: int, N: int) -> Fraction:
    """Moebius inverse of gamma1_weight in the u slot."""
    total = Fraction(0)
    for d in divisors(u):
        mu = mobius(d)
        if mu:
            total += mu * gamma1_weight(u // d, t, n, N)
    return total


def gamma1_cusp_sum(a: int, d: int, N: int) -> int:
    """Sum over N = r*s with r | a-1 and s | d-1 of phi((r,s)) phi(N/(r,s)).

    Negative arguments are evaluated literally (r | a-1 as integers), which
    makes the sum vanish for a, d < 0 once N exceeds max(|a|, |d|) + 1.
    """
    total = 0
    for r in divisors(N):
        s = N // r
        if (a - 1) % r == 0 and (d - 1) % s == 0:
            g = gcd(r, s)
            total += euler_phi(g) * euler_phi(N // g)
    return total


def _square_boundary_gamma1(N: int, k: int, n: int) -> Fraction:
    # chi-sum of the Gamma_0 scalar terms over parity-matching characters:
    # (phi_1(N)/12)(k-1) n^(k/2-1) * (phi(N)/2)([s=1 mod N] + (-1)^k [s=-1 mod N])
    s = isqrt_exact(n)
    if s is None:
        return Fraction(0)
    ind = 1 if s % N == 1 % N else 0
    ind += (-1) ** k * (1 if (s + 1) % N == 0 else 0)
    if ind == 0:
        return Fraction(0)
    return (Fraction(index_gamma0(N), 12) * (k - 1) * s ** (k - 2)
            * Fraction(euler_phi(N), 2) * ind)


def trace_full_gamma1(N: int, k: int, n: int) -> int:
    """Trace of T_n on S_k(Gamma_1(N)) + M_k(Gamma_1(N)), exact."""
    if N < 1 or n < 1 or k < 2:
        raise ValueError("need N, n >= 1 and k >= 2")
    total = Fraction(0)
    for t in hurwitz_sum_support(n):
        if (t - n - 1) % N:
            continue
        disc = 4 * n - t * t
        inner = Fraction(0)
        for u in divisors(N):
            if disc != 0 and disc % (u * u):
                continue
            H = hurwitz_class_number(disc // (u * u) if disc else 0)
            if H:
                inner += H * gamma1_weight_mobius(u, t, n, N)
        if inner:
            total += -gegenbauer(k - 2, t, n) * inner
    value = euler_phi(N) * total
    if k == 2:
        value += sigma1_coprime(n, N)
    if value.denominator != 1:
        raise IntegralityError(f"trace_full_gamma1(N={N}, k={k}, n={n}): {value}")
    return int(value)


def trace_cusp_gamma1(N: int, k: int, n: int) -> int:
    """Trace of T_n on S_k(Gamma_1(N)), exact."""
    if N < 1 or n < 1 or k < 2:
        raise ValueError("need N, n >= 1 and k >= 2")
    elliptic = Fraction(0)
    T = isqrt(4 * n)
    if T * T == 4 * n:
        T -= 1
    for t in range(-T, T + 1):
        if (t - n - 1) % N:
            continue
        disc = 4 * n - t * t
        inner = Fraction(0)
        for u in divisors(N):
            if disc % (u * u):
                continue
            H = hurwitz_class_number(disc // (u * u))
            if H:
                inner += H * gamma1_weight_mobius(u, t, n, N)
        if inner:
            elliptic += gegenbauer(k - 2, t, n) * inner
    value = -Fraction(euler_phi(N), 2) * elliptic + _square_boundary_gamma1(N, k, n)

    cusp = 0
    for a in divisors(n):
        d = n // a
        cusp += min(a, d) ** (k - 1) * (gamma1_cusp_sum(a, d, N)
                                        + (-1) ** k * gamma1_cusp_sum(-a, -d, N))
    value += Fraction(-cusp, 4)
    if k == 2:
        value += sigma1_coprime(n, N)
    if value.denominator != 1:
        raise IntegralityError(f"trace_cusp_gamma1(N={N}, k={k}, n={n}): {value}")
    return int(value)


# --- stable range N > 2n + 2 (closed forms, no class numbers) ---------------

def trace_full_stable(N: int, k: int, n: int) -> int:
    """Closed form of the combined trace, valid for N > 2n + 2, n > 1.

    Only t = n + 1 survives the congruence on t, leaving the geometric factor
    (n^(k-1)-1)/(n-1) times a divisor sum over n - 1.  The totient must sit on
    the cofactor (n-1)/u, not on u; the two differ once gcd(N, n-1) > 2.
    """
    if n <= 1 or N <= 2 * n + 2:
        raise ValueError("closed form needs n > 1 and N > 2n + 2")
    geom = Fraction(n ** (k - 1) - 1, n - 1)
    tail = sum(euler_phi((n - 1) // u)
               * Fraction(index_gamma0(N), index_gamma0(N // gcd(u, N)))
               for u in divisors(n - 1))
    value = Fraction(euler_phi(N), 2) * geom * tail
    if k == 2:
        value += sigma1_coprime(n, N)
    return int(value)


def trace_cusp_stable(N: int, k: int, n: int) -> int:
    """Closed form of the cuspidal trace, valid for N > 2n + 2, n > 1."""
    if n <= 1 or N <= 2 * n + 2:
        raise ValueError("closed form needs n > 1 and N > 2n + 2")
    total = sum(euler_phi(gcd(u, N // u)) * euler_phi(N // gcd(u, N // u))
                for u in divisors(gcd(N, n - 1)))
    value = Fraction(-total, 2)
    if k == 2:
        value += sigma1_coprime(n, N)
    return int(value)


def stable_ratio_check(n: int, k: int, levels) -> CheckReport:
    """Check trace_cusp_gamma1 / phi(N) = -1/2 on N > 2n+2 coprime to n-1.

    For k = 2 the delta term shifts the ratio by sigma_{1,N}(n)/phi(N).
    """
    if n <= 1:
        raise ValueError("the limit statement needs n > 1")
    report = CheckReport(f"stable trace ratio (n={n}, k={k})")
    for N in levels:
        if N <= 2 * n + 2 or gcd(N, n - 1) != 1:
            continue
        ratio = Fraction(trace_cusp_gamma1(N, k, n), euler_phi(N))
        expected = Fraction(-1, 2)
        if k == 2:
            expected += Fraction(sigma1_coprime(n, N), euler_phi(N))
        report.record(N, ratio, expected)
    return report
