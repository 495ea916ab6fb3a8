"""Trace of T_n composed with the Atkin-Lehner involution W_ell on S_k(N).

Requires an exact divisor ell || N and even weight.  The elliptic sum runs
over ell | t only; its coefficients factor as (solution count at level ell')
times a discriminant-dependent multiplicative weight given by explicit
prime-power tables.  Powers of ell^((k-2)/2) are carried exactly as Fractions
and only the assembled total is asserted integral.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import (divisors, euler_phi, eps4, factor, gegenbauer, index_gamma0,
                    isqrt_exact, kronecker, mobius, sigma1_coprime, valuation)
from .classnum import hurwitz_class_number
from .gamma0 import IntegralityError, unit_solutions

__all__ = ["ALQuery", "discriminant_weight", "solution_count", "al_cusp_sum",
           "trace_tn_wl"]

_INF = float("inf")


def _local_weight(p: int, a: int, i: int, D: int) -> int:
    """Weight at the prime p for N = p^a, u = p^i, with b = v_p(D) (b = inf at D = 0)."""
    if i == 0:
        return 1
    b = _INF if D == 0 else valuation(D, p)
    if i == a:
        # p^ceil(a/2) except in the low-valuation 2-adic corner, where the
        # Moebius-inverted solution count actually takes these values; the
        # corner never meets a nonzero Hurwitz factor, so traces agree either
        # way, but the factorization identity is exact only with the split.
        if p != 2 or b >= 2 * a + 2:
            return p ** ((a + 1) // 2)
        if b == 2 * a and eps4(D // 2 ** b) == 1:
            return 2 ** ((a + 1) // 2)
        return -(2 ** ((a + 1) // 2 - 1))
    parity_match = (i - a) % 2 == 0
    if p != 2:
        if parity_match and 1 <= i <= b - a:
            return p ** ((i + 1) // 2) - p ** ((i + 1) // 2 - 1)
        if parity_match and i == b - a + 1:
            return -(p ** ((i + 1) // 2 - 1))
        if not parity_match and i == b - a + 1:
            return p ** (i // 2) * kronecker(D // p ** b, p)
        return 0
    if parity_match and 1 <= i <= b - a - 2:
        return 2 ** ((i + 1) // 2 - 1)
    if parity_match and i == b - a - 1:
        return -(2 ** ((i + 1) // 2 - 1))
    if parity_match and i == b - a:
        return 2 ** ((i + 1) // 2 - 1) * eps4(D // 2 ** b)
    if not parity_match and i == b - a + 1 and (D // 2 ** b) % 4 == 1:
        return 2 ** (i // 2) * kronecker(D // 2 ** b, 2)
    return 0


@lru_cache(maxsize=None)
def discriminant_weight(u: int, D: int, N: int) -> int:
    """The multiplicative coefficient C_N(u, D); requires u | N and u^2 | D."""
    if N % u:
        raise ValueError(f"u={u} does not divide N={N}")
    if D != 0 and D % (u * u):
        raise ValueError(f"u^2={u * u} does not divide D={D}")
    out = 1
    for p, a in factor(N):
        out *= _local_weight(p, a, valuation(u, p) if u % p == 0 else 0, D)
        if out == 0:
            break
    return out


def solution_count(t: int, n: int, N: int) -> int:
    """Number of units alpha mod N with alpha^2 - t*alpha + n = 0 (mod N)."""
    return len(unit_solutions(1, t, n, N))


def trivial_weight_factored(u: int, t: int, n: int, N: int) -> int:
    """Trivial-character elliptic weight via the solution-count factorization."""
    count = solution_count(t, n, N)
    if count == 0:
        return 0
    return count * discriminant_weight(u, t * t - 4 * n, N)


def al_cusp_sum(a: int, d: int, N: int, ell: int) -> Fraction:
    """Cusp weight for T_n o W_ell: 0 unless ell | a+d, else a scaled divisor sum."""
    if (a + d) % ell:
        return Fraction(0)
    ellp = N // ell
    total = 0
    for r in divisors(ellp):
        s = ellp // r
        g = gcd(r, s)
        if (a - d) % g == 0 and gcd(r, a) == 1 and gcd(s, d) == 1:
            total += euler_phi(g)
    return Fraction(euler_phi(ell), ell) * total


@dataclass(frozen=True)
class ALQuery:
    """A (level, exact divisor, even weight, index) request for tr(T_n o W_ell)."""
    level: int
    ell: int
    weight: int
    index: int

    def __post_init__(self):
        if self.level < 1 or self.index < 1:
            raise ValueError("level and index must be positive")
        if self.weight < 2 or self.weight % 2:
            raise ValueError("weight must be even and at least 2")
        if self.level % self.ell or gcd(self.ell, self.level // self.ell) != 1:
            raise ValueError(f"ell={self.ell} is not an exact divisor of N={self.level}")


def trace_tn_wl(q: ALQuery) -> int:
    """Trace of T_n o W_ell on S_k(N), exact."""
    N, ell, k, n = q.level, q.ell, q.weight, q.index
    ellp = N // ell
    w = k - 2
    scale = Fraction(1, ell ** (w // 2))

    elliptic = Fraction(0)
    T = isqrt(4 * ell * n)
    if T * T == 4 * ell * n:
        T -= 1  # the boundary t^2 = 4*ell*n is handled separately
    for t in range(-T, T + 1):
        if t % ell:
            continue
        disc = 4 * ell * n - t * t
        inner = Fraction(0)
        for u in divisors(ell):
            mu = mobius(u)
            if mu == 0:
                continue
            for up in divisors(ellp):
                uu = u * up
                if disc % (uu * uu):
                    continue
                H = hurwitz_class_number(disc // (uu * uu))
                if H:
                    inner += H * trivial_weight_factored(up, t, ell * n, ellp) * mu
        if inner:
            elliptic += Fraction(-gegenbauer(w, t, ell * n), 2) * scale * inner
    # scalar boundary: present only in the Hecke specialization ell = 1
    if ell == 1:
        s = isqrt_exact(n)
        if s is not None and gcd(n, N) == 1:
            elliptic += Fraction(index_gamma0(N), 12) * (k - 1) * s ** w

    cusp = Fraction(0)
    for a in divisors(n * ell):
        d = n * ell // a
        phi = al_cusp_sum(a, d, N, ell)
        if phi:
            cusp += min(a, d) ** (k - 1) * scale * phi
    cusp = -cusp / 2

    delta = Fraction(sigma1_coprime(n, N)) if k == 2 else Fraction(0)

    total = elliptic + cusp + delta
    if total.denominator != 1:
        raise IntegralityError(
            f"trace_tn_wl(N={N}, ell={ell}, k={k}, n={n}): non-integral {total}")
    return int(total)
