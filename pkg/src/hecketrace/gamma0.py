"""Trace of Hecke operators on S_k(Gamma_0(N), chi) and on M_k + S_k.

The elliptic weight is an index-scaled character sum over unit solutions of
alpha^2 - t*alpha + n = 0 (mod N*u), Moebius-inverted in u; the cusp weight
runs over factorizations N = r*s; the t^2 = 4n boundary is the scalar-class
term, nonzero only at square index.  All arithmetic is exact; assembled
traces are asserted to be algebraic integers (integer coordinates in the
power basis of Q(zeta)), and a failed assertion signals a convention bug
rather than a rounding problem.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import (crt_solve, divisors, euler_phi, factor, gegenbauer,
                    index_gamma0, isqrt_exact, mobius, sigma1_coprime, valuation)
from .characters import DirichletCharacter
from .classnum import hurwitz_class_number, hurwitz_sum_support
from .cyclotomic import CyclotomicNumber

__all__ = ["IntegralityError", "TraceQuery", "TraceResult", "unit_solutions",
           "unit_solutions_scan", "char_weight", "char_weight_mobius", "cusp_sum",
           "square_boundary_term", "square_boundary_via_h_zero", "trace_cusp",
           "trace_full"]


class IntegralityError(ArithmeticError):
    """An assembled trace failed the algebraic-integrality assertion."""


# --- solution sets S_N(u, t, n) -------------------------------------------

def _sqrt_mod_prime(a: int, p: int):
    """One square root of a mod an odd prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _roots_mod_prime_power(t: int, n: int, p: int, e: int) -> list:
    """Roots of x^2 - t*x + n modulo p^e, by Hensel lifting with branching."""
    if p == 2:
        roots = [x for x in range(2) if (x * x - t * x + n) % 2 == 0]
    else:
        disc = (t * t - 4 * n) % p
        inv2 = pow(2, -1, p)
        if disc == 0:
            roots = [t * inv2 % p]
        else:
            r = _sqrt_mod_prime(disc, p)
            roots = [] if r is None else sorted({(t + r) * inv2 % p, (t - r) * inv2 % p})
    mod = p
    for _ in range(e - 1):
        nextmod = mod * p
        lifted = []
        for r in roots:
            fr = r * r - t * r + n
            fpr = (2 * r - t) % p
            if fpr:
                s = -(fr // mod) * pow(fpr, -1, p) % p
                lifted.append(r + mod * s)
            elif fr % nextmod == 0:
                lifted.extend(r + mod * s for s in range(p))
        roots = lifted
        mod = nextmod
    return sorted(roots)


@lru_cache(maxsize=None)
def unit_solutions(u: int, t: int, n: int, N: int) -> tuple:
    """S_N(u,t,n): units alpha mod N with alpha^2 - t*alpha + n = 0 (mod N*u).

    Well defined on classes mod N because u | N and u^2 | t^2 - 4n (enforced).
    Computed prime-power-wise by lifting and combined by CRT.
    """
    if N % u:
        raise ValueError(f"u={u} does not divide N={N}")
    if (t * t - 4 * n) % (u * u):
        raise ValueError(f"u^2={u * u} does not divide t^2-4n={t * t - 4 * n}")
    M = N * u
    if M == 1:
        return (0,)
    sols = [0]
    mod = 1
    for p, e in factor(M):
        local = _roots_mod_prime_power(t, n, p, e)
        q = p ** e
        sols = [crt_solve([(s, mod), (r, q)])[0] for s in sols for r in local]
        mod *= q
    out = sorted({s % N for s in sols if gcd(s, N) == 1})
    return tuple(out)


def unit_solutions_scan(u: int, t: int, n: int, N: int) -> tuple:
    """Full residue scan oracle for unit_solutions (small N only)."""
    M = N * u
    return tuple(a for a in range(N) if gcd(a, N) == 1
                 and (a * a - t * a + n) % M == 0)


# --- elliptic weights -------------------------------------------------------

@lru_cache(maxsize=65536)
def char_weight(u: int, t: int, n: int, N: int, chi: DirichletCharacter) -> CyclotomicNumber:
    """Index-scaled character sum over unit solutions (Oesterle's weight)."""
    scale = Fraction(index_gamma0(N), index_gamma0(N // u))
    weights = {}
    for alpha in unit_solutions(u, t, n, N):
        e = chi.exponent_of(alpha)
        weights[e] = weights.get(e, 0) + 1
    val = CyclotomicNumber.from_exponent_weights(chi.order(), weights)
    return val * scale


def char_weight_mobius(u: int, t: int, n: int, N: int,
                       chi: DirichletCharacter) -> CyclotomicNumber:
    """Moebius inverse of char_weight in the u slot; multiplies class numbers."""
    total = CyclotomicNumber.zero(chi.order())
    for d in divisors(u):
        mu = mobius(d)
        if mu:
            total = total + char_weight(u // d, t, n, N, chi) * mu
    return total


# --- cusp sum ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _splittings(N: int) -> tuple:
    """(r, s, g=gcd(r,s), phi(g), lcm(r,s)) for every factorization N = r*s."""
    out = []
    for r in divisors(N):
        s = N // r
        g = gcd(r, s)
        out.append((r, s, g, euler_phi(g), N // g))
    return tuple(out)


def cusp_sum(a: int, d: int, N: int, chi: DirichletCharacter) -> CyclotomicNumber:
    """Hyperbolic/cusp weight: sum over N = r*s of phi((r,s)) chi(alpha_{r,s}).

    alpha solves alpha = a (mod r), alpha = d (mod s); chi is evaluated through
    its primitive character mod N/(r,s), zero when alpha is not a unit there.
    """
    cond = chi.conductor()
    total = CyclotomicNumber.zero(chi.order())
    for r, s, g, phi_g, M in _splittings(N):
        if (a - d) % g or (N // cond) % g:
            continue
        alpha, _ = crt_solve([(a % r, r), (d % s, s)])
        total = total + chi.value_mod(alpha, M) * phi_g
    return total


# --- boundary (t^2 = 4n) ----------------------------------------------------

def square_boundary_term(N: int, chi: DirichletCharacter, k: int, n: int) -> CyclotomicNumber:
    """Scalar-class contribution: (phi_1(N)/12)(k-1) n^(k/2-1) chi(sqrt n), else 0."""
    s = isqrt_exact(n)
    if s is None:
        return CyclotomicNumber.zero(chi.order())
    return chi(s) * (Fraction(index_gamma0(N), 12) * (k - 1) * s ** (k - 2))


def square_boundary_via_h_zero(N: int, chi: DirichletCharacter, k: int, n: int) -> CyclotomicNumber:
    """Same boundary through the literal H(0) route; debug cross-check only."""
    s = isqrt_exact(n)
    if s is None:
        return CyclotomicNumber.zero(chi.order())
    total = CyclotomicNumber.zero(chi.order())
    for t in (2 * s, -2 * s):
        inner = CyclotomicNumber.zero(chi.order())
        for u in divisors(N):
            inner = inner + char_weight_mobius(u, t, n, N, chi)
        total = total + inner * (Fraction(-gegenbauer(k - 2, t, n), 2)
                                 * hurwitz_class_number(0))
    return total


# --- assembled traces -------------------------------------------------------

@dataclass(frozen=True)
class TraceQuery:
    """A (level, weight, character, index) Hecke-trace request."""
    level: int
    weight: int
    character: DirichletCharacter
    index: int

    def __post_init__(self):
        if self.level < 1 or self.index < 1:
            raise ValueError("level and index must be positive")
        if self.weight < 2:
            raise ValueError("weight must be at least 2")
        if self.character.N != self.level:
            raise ValueError("character modulus must equal the level")


@dataclass(frozen=True)
class TraceResult:
    """Exact trace value with its term-by-term breakdown."""
    value: CyclotomicNumber
    elliptic: CyclotomicNumber  # elliptic + scalar boundary
    cusp: CyclotomicNumber
    delta: CyclotomicNumber     # the k = 2 correction

    def as_integer(self) -> int:
        return self.value.as_integer()

    def to_json(self, breakdown=False):
        out = {"value": self.value.to_json()}
        if breakdown:
            out["breakdown"] = {"elliptic": self.elliptic.to_json(),
                                "cusp": self.cusp.to_json(),
                                "delta": self.delta.to_json()}
        return out


def _assert_integral(value: CyclotomicNumber, context: str) -> None:
    if not value.is_algebraic_integer():
        raise IntegralityError(f"{context}: non-integral trace {value!r}")


def _elliptic_interior(N, chi, k, n):
    """-(1/2) sum over t^2 < 4n of p_{k-2}(t,n) sum_u H((4n-t^2)/u^2) C(u,t,n)."""
    total = CyclotomicNumber.zero(chi.order())
    T = isqrt(4 * n)
    if T * T == 4 * n:
        T -= 1
    for t in range(-T, T + 1):
        disc = 4 * n - t * t
        inner = CyclotomicNumber.zero(chi.order())
        for u in divisors(N):
            if disc % (u * u):
                continue
            H = hurwitz_class_number(disc // (u * u))
            if H:
                inner = inner + char_weight_mobius(u, t, n, N, chi) * H
        if inner:
            total = total + inner * Fraction(-gegenbauer(k - 2, t, n), 2)
    return total


def trace_cusp(q: TraceQuery) -> TraceResult:
    """Trace of T_n on S_k(N, chi); exactly 0 when chi(-1) != (-1)^k."""
    N, k, chi, n = q.level, q.weight, q.character, q.index
    zero = CyclotomicNumber.zero(chi.order())
    if chi.parity() != (-1) ** k:
        return TraceResult(zero, zero, zero, zero)
    elliptic = _elliptic_interior(N, chi, k, n) + square_boundary_term(N, chi, k, n)
    cusp = CyclotomicNumber.zero(chi.order())
    for a in divisors(n):
        d = n // a
        cusp = cusp + cusp_sum(a, d, N, chi) * min(a, d) ** (k - 1)
    cusp = cusp * Fraction(-1, 2)
    delta = CyclotomicNumber.zero(chi.order())
    if k == 2 and chi.is_trivial():
        delta = delta + sigma1_coprime(n, N)
    value = elliptic + cusp + delta
    _assert_integral(value, f"trace_cusp(N={N}, k={k}, n={n}, chi={list(chi.exponents)})")
    return TraceResult(value, elliptic, cusp, delta)


def trace_full(q: TraceQuery) -> TraceResult:
    """Combined trace of T_n on M_k(N, chi) + S_k(N, chi), any parity (vanishes if mixed)."""
    N, k, chi, n = q.level, q.weight, q.character, q.index
    total = CyclotomicNumber.zero(chi.order())
    for t in hurwitz_sum_support(n):
        disc = 4 * n - t * t
        inner = CyclotomicNumber.zero(chi.order())
        for u in divisors(N):
            if disc != 0 and disc % (u * u):
                continue
            H = hurwitz_class_number(disc // (u * u) if disc else 0)
            if H:
                inner = inner + char_weight_mobius(u, t, n, N, chi) * H
        if inner:
            total = total + inner * (-gegenbauer(k - 2, t, n))
    delta = CyclotomicNumber.zero(chi.order())
    if k == 2 and chi.is_trivial():
        delta = delta + sigma1_coprime(n, N)
    value = total + delta
    _assert_integral(value, f"trace_full(N={N}, k={k}, n={n}, chi={list(chi.exponents)})")
    return TraceResult(value, total, CyclotomicNumber.zero(chi.order()), delta)
