"""Independent ground truth: eta-product and Eisenstein q-expansions, the genus
of X_0(N), and the cross-formula consistency harness.

Nothing here shares class-number or character-sum code with the trace engines;
overlaps are limited to the elementary functions in arith.  That separation is
what makes the consistency suite an actual check and not a tautology.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

from .arith import divisors, euler_phi, factor, index_gamma0, kronecker
from .qexp import QExpansion
from .report import CheckReport

__all__ = ["bernoulli", "delta_qexp", "eisenstein_qexp", "eigenform_qexp",
           "genus_x0", "consistency_suite"]

EIGENFORM_WEIGHTS = (12, 16, 18, 20, 22, 26)


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m via sum_j C(m+1, j) B_j = 0."""
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2)
    if m % 2:
        return Fraction(0)
    acc = sum(comb(m + 1, j) * bernoulli(j) for j in range(m))
    return -acc / (m + 1)


def delta_qexp(P: int) -> QExpansion:
    """q * prod (1 - q^m)^24 to precision P, via Euler's pentagonal series."""
    if P < 1:
        raise ValueError("precision must be at least 1")
    eta = [0] * (P + 1)
    k = 0
    while k * (3 * k - 1) // 2 <= P:
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e <= P:
                eta[e] += -1 if kk % 2 else 1
        k += 1
    eta_q = QExpansion(eta, label="eta-series")
    coeffs = (eta_q ** 24).coeffs
    return QExpansion([0] + list(coeffs[: P]), label="delta", precision=P)


def eisenstein_qexp(k: int, P: int) -> QExpansion:
    """Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, exact."""
    if k < 2 or k % 2:
        raise ValueError("weight must be even and at least 2")
    scale = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)]
    for n in range(1, P + 1):
        coeffs.append(scale * sum(d ** (k - 1) for d in divisors(n)))
    return QExpansion(coeffs, label=f"E{k}", precision=P)


@lru_cache(maxsize=None)
def _eigenform_cached(k: int, P: int) -> QExpansion:
    delta = delta_qexp(P)
    e4 = eisenstein_qexp(4, P)
    e6 = eisenstein_qexp(6, P)
    products = {
        12: (delta, "delta"),
        16: (delta * e4, "delta*E4"),
        18: (delta * e6, "delta*E6"),
        20: (delta * (e4 ** 2), "delta*E4^2"),
        22: (delta * e4 * e6, "delta*E4*E6"),
        26: (delta * (e4 ** 2) * e6, "delta*E4^2*E6"),
    }
    series, label = products[k]
    coeffs = [int(c) if isinstance(c, Fraction) else c for c in series.coeffs]
    return QExpansion(coeffs, label=f"eigenform S_{k}(1) = {label}", precision=P)


def eigenform_qexp(k: int, P: int) -> QExpansion:
    """The unique normalized eigenform of S_k(SL_2(Z)) for the six 1-dim weights.

    Its coefficients equal tr(T_n, S_k(1)).
    """
    if k not in EIGENFORM_WEIGHTS:
        raise ValueError(f"S_{k}(1) is not one-dimensional; k must be in {EIGENFORM_WEIGHTS}")
    return _eigenform_cached(k, P)


def genus_x0(N: int) -> int:
    """Genus of the modular curve X_0(N), by the classical local counts."""
    if N < 1:
        raise ValueError("level must be positive")
    # local factors at p = 2 (for nu2) and p = 3 (for nu3) are 1, not 1 + (.|p)
    nu2 = 0 if N % 4 == 0 else _prod(1 + kronecker(-1, p) for p, _ in factor(N) if p != 2)
    nu3 = 0 if N % 9 == 0 else _prod(1 + kronecker(-3, p) for p, _ in factor(N) if p != 3)
    cusps = sum(euler_phi(gcd(d, N // d)) for d in divisors(N))
    g = 1 + Fraction(index_gamma0(N), 12) - Fraction(nu2, 4) - Fraction(nu3, 3) \
        - Fraction(cusps, 2)
    assert g.denominator == 1
    return int(g)


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# --- the cross-formula consistency harness ----------------------------------

def consistency_suite(max_level: int = 16, max_weight: int = 8, max_index: int = 12,
                      classnum_bound: int = 2000) -> CheckReport:
    """Run every cross-formula identity at desk bounds and report exact failures.

    Covers: Atkin-Lehner at ell = 1 vs the Gamma_0 engine; character sums vs
    Gamma_1; the stable closed forms; the level-4 formulas; tr(T_1) on weight 2
    vs the genus; level-1 traces vs the eigenform oracle; and the class-number
    identities (Kronecker-Hurwitz, inversion, the H(4D) table).
    """
    from .atkin_lehner import ALQuery, trace_tn_wl
    from .characters import enumerate_characters, trivial_character
    from .classnum import (class_number_relations_check, inversion_check,
                           kronecker_hurwitz_check)
    from .cyclotomic import CyclotomicNumber
    from .gamma0 import TraceQuery, trace_cusp
    from .gamma1 import (trace_cusp_gamma1, trace_cusp_stable,
                         trace_full_gamma1, trace_full_stable)
    from .level4 import trace_level4

    report = CheckReport("consistency suite")

    # (i) ell = 1 Atkin-Lehner degenerates to the Hecke trace
    for N in range(1, min(max_level, 16) + 1):
        for k in (2, 4, 6):
            for n in range(1, max_index + 1):
                report.record(
                    ("al-ell1", N, k, n),
                    trace_tn_wl(ALQuery(N, 1, k, n)),
                    trace_cusp(TraceQuery(N, k, trivial_character(N), n)).as_integer())

    # (ii) character sums recover the Gamma_1 trace
    for N in range(1, max_level + 1):
        for k in range(2, min(max_weight, 6) + 1):
            for n in range(1, max_index + 1):
                total = CyclotomicNumber.zero()
                for chi in enumerate_characters(N):
                    total = total + trace_cusp(TraceQuery(N, k, chi, n)).value
                report.record(("char-sum", N, k, n),
                              total.as_integer(), trace_cusp_gamma1(N, k, n))

    # (iii) stable closed forms against the full Theorem-5 engine
    for n in range(2, 7):
        for k in (2, 3, 4, 6):
            for N in range(2 * n + 3, 41):
                report.record(("stable-S", N, k, n),
                              trace_cusp_stable(N, k, n), trace_cusp_gamma1(N, k, n))
                report.record(("stable-MS", N, k, n),
                              trace_full_stable(N, k, n), trace_full_gamma1(N, k, n))

    # (iv) level-4 closed formulas against the general engines
    chars4 = enumerate_characters(4)
    for k in range(2, max_weight + 1):
        chi = chars4[0] if k % 2 == 0 else chars4[1]
        for n in range(1, max_index * 4 + 1):
            report.record(("level4", k, n), trace_level4(k, n),
                          trace_cusp(TraceQuery(4, k, chi, n)).as_integer())

    # (v) weight-2 trace of T_1 is the genus
    for N in range(1, 101):
        report.record(("genus", N),
                      trace_cusp(TraceQuery(N, 2, trivial_character(N), 1)).as_integer(),
                      genus_x0(N))

    # (vi) level-1 traces against the eigenform oracle
    for k in EIGENFORM_WEIGHTS:
        oracle = eigenform_qexp(k, max_index)
        for n in range(1, max_index + 1):
            report.record(("level1", k, n),
                          trace_cusp(TraceQuery(1, k, trivial_character(1), n)).as_integer(),
                          oracle[n])

    # (vii) class-number identities
    for n in range(1, 501):
        report.record_ok(("kronecker-hurwitz", n), kronecker_hurwitz_check(n))
    report.merge(inversion_check(classnum_bound))
    report.merge(class_number_relations_check(min(classnum_bound, 2000)))

    return report
