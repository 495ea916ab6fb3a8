"""Integer substrate: factorization, multiplicative functions, CRT, quadratic symbols.

Everything here is exact (Python ints / fractions.Fraction) and pure, so all
functions are safe to call concurrently; the lru_cache memo tables are
idempotent fills.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
import random

__all__ = [
    "is_prime", "factor", "divisors", "mobius", "euler_phi", "index_gamma0",
    "sigma1_coprime", "gegenbauer", "crt_solve", "kronecker", "eps4",
    "isqrt_exact", "valuation", "CRTConflictError",
]


class CRTConflictError(ValueError):
    """Raised when simultaneous congruences are incompatible."""


# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd, composite, not a prime power of a
    # small prime.  Only reached for inputs beyond the trial-division bound.
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


_TRIAL_BOUND = 1 << 20


@lru_cache(maxsize=None)
def factor(n: int) -> tuple:
    """Prime factorization of n >= 1 as a tuple of (prime, exponent), primes ascending.

    Trial division up to 2^20, Pollard rho beyond; rejects n < 1.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    fac = {}
    for p in (2, 3, 5):
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    # wheel mod 30
    p, wheel = 7, (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < _TRIAL_BOUND:
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return tuple(sorted(fac.items()))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factor(n):
        divs = [d * p ** j for d in divs for j in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    """Moebius function."""
    fac = factor(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient."""
    out = 1
    for p, e in factor(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def index_gamma0(N: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): N * prod_{p|N} (1 + 1/p)."""
    out = 1
    for p, e in factor(N):
        out *= p ** (e - 1) * (p + 1)
    return out


def sigma1_coprime(n: int, N: int) -> int:
    """Sum of n/d over divisors d of n coprime to N."""
    return sum(n // d for d in divisors(n) if gcd(d, N) == 1)


def gegenbauer(w: int, t: int, n: int) -> int:
    """Coefficient of x^w in 1/(1 - t*x + n*x^2), by the linear recurrence."""
    if w < 0:
        raise ValueError("negative degree")
    prev, cur = 1, t
    if w == 0:
        return prev
    for _ in range(w - 1):
        prev, cur = cur, t * cur - n * prev
    return cur


def crt_solve(residues) -> tuple:
    """Solve simultaneous congruences x = r_i (mod m_i).

    Returns (x, M) with 0 <= x < M = lcm of the moduli.  Raises
    CRTConflictError when the congruences are incompatible.
    """
    x, M = 0, 1
    for r, m in residues:
        if m <= 0:
            raise ValueError("modulus must be positive")
        g = gcd(M, m)
        if (r - x) % g:
            raise CRTConflictError(f"x = {x} (mod {M}) conflicts with x = {r} (mod {m})")
        lcm = M // g * m
        # x + M*k = r (mod m)  =>  k = (r-x)/g * inv(M/g) (mod m/g)
        k = (r - x) // g * pow(M // g, -1, m // g) % (m // g) if m != g else 0
        x = (x + M * k) % lcm
        M = lcm
    return x, M


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n); the Legendre symbol when n is an odd prime."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out twos of n
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            sign = -sign
    a %= n
    # now n odd positive: Jacobi symbol by reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def eps4(a: int) -> int:
    """Nontrivial quadratic character mod 4: +1 at 1 mod 4, -1 at 3 mod 4, 0 on evens."""
    if a % 2 == 0:
        return 0
    return 1 if a % 4 == 1 else -1


def isqrt_exact(n: int):
    """Integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def valuation(n: int, p: int) -> int:
    """Exponent of p in n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def as_integer(x) -> int:
    """Assert a Fraction (or int) is integral and return it as int."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ValueError(f"expected an integer, got {x!r}")
