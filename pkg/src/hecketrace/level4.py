"""Level-4 specializations: closed trace formulas and trace-form q-expansions.

At level 4 the Gamma_1 trace collapses to the Gamma_0 trace with trivial
character for even weight and with the nontrivial character mod 4 for odd
weight, and the general machinery reduces to short class-number sums.  The
closed formulas here never pre-filter terms: vanishing must emerge from the
class numbers themselves.
"""

from fractions import Fraction
from math import isqrt

from .arith import divisors, eps4, gegenbauer
from .characters import trivial_character
from .classnum import hurwitz_class_number
from .gamma0 import IntegralityError, TraceQuery, trace_cusp
from .gamma1 import trace_cusp_gamma1
from .qexp import QExpansion
from .report import CheckReport

__all__ = ["trace_even_weight_odd_index", "trace_odd_weight_odd_index",
           "trace_even_index", "trace_level4", "trace_form", "relation_table_check"]


def _H(x) -> Fraction:
    # H on possibly non-integral arguments: arithmetic functions vanish there
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return Fraction(0)
        x = int(x)
    return hurwitz_class_number(x)


def trace_even_weight_odd_index(k: int, n: int) -> int:
    """tr(T_n, S_k(4)) for odd n and even k >= 2."""
    if n % 2 == 0 or k % 2 or k < 2:
        raise ValueError("need n odd and k >= 2 even")
    elliptic = Fraction(0)
    for s in range(-isqrt(n), isqrt(n) + 1):
        H = _H(n - s * s)
        if H:
            elliptic += gegenbauer(k - 2, 2 * s, n) * H
    cusp = sum(min(a, n // a) ** (k - 1) for a in divisors(n))
    total = -3 * elliptic - Fraction(3, 2) * cusp
    if k == 2:
        total += sum(divisors(n))
    if total.denominator != 1:
        raise IntegralityError(f"level-4 trace (k={k}, n={n}): {total}")
    return int(total)


def trace_odd_weight_odd_index(k: int, n: int) -> int:
    """tr(T_n, S_k(4, chi_4)) for odd n and odd k >= 3; 0 whenever n = 3 (mod 4)."""
    if n % 2 == 0 or k % 2 == 0 or k < 3:
        raise ValueError("need n odd and k >= 3 odd")
    elliptic = Fraction(0)
    for s in range(-isqrt(n), isqrt(n) + 1):
        if s % 2 == 0:
            continue
        H = _H(n - s * s) + 2 * _H(Fraction(n - s * s, 4))
        if not H:
            continue
        exp4, rem = divmod(2 * s - n - 1, 4)
        assert rem == 0, "nonzero term without the 4 | 2s-n-1 constraint"
        sign = -1 if exp4 % 2 else 1
        elliptic += sign * gegenbauer(k - 2, 2 * s, n) * H
    cusp = 0
    for a in divisors(n):
        d = n // a
        if (a - d) % 4 == 0:
            cusp += min(a, d) ** (k - 1) * eps4(a)
    total = -elliptic - cusp
    if total.denominator != 1:
        raise IntegralityError(f"level-4 trace (k={k}, n={n}, chi_4): {total}")
    return int(total)


def trace_even_index(k: int, n: int) -> int:
    """tr(T_n, S_k(4, chi)) for even n >= 2, chi the mod-4 character of parity (-1)^k."""
    if n % 2 or n < 2 or k < 2:
        raise ValueError("need n >= 2 even and k >= 2")
    elliptic = Fraction(0)
    for t in range(-isqrt(4 * n), isqrt(4 * n) + 1):
        if (t - n - 1) % 4:
            continue
        H = _H(4 * n - t * t)
        if H:
            elliptic += gegenbauer(k - 2, t, n) * H
    chi = (lambda a: 1) if k % 2 == 0 else eps4
    cusp = 0
    delta = 0
    for a in divisors(n):
        d = n // a
        if a % 2:
            cusp += chi(a) * min(a, d) ** (k - 1)
            delta += d
    total = -elliptic - cusp
    if k == 2:
        total += delta
    if total.denominator != 1:
        raise IntegralityError(f"level-4 trace (k={k}, n={n}, even index): {total}")
    return int(total)


def trace_level4(k: int, n: int) -> int:
    """Trace of T_n on S_k(Gamma_1(4)) through the closed level-4 formulas."""
    if n % 2:
        return trace_even_weight_odd_index(k, n) if k % 2 == 0 \
            else trace_odd_weight_odd_index(k, n)
    return trace_even_index(k, n)


def trace_form(group: str, level: int, weight: int, precision: int,
               character=None, parity: str = "all") -> QExpansion:
    """q-expansion whose n-th coefficient is tr(T_n) on the requested space.

    group is "gamma0" (needs a character; defaults to trivial) or "gamma1".
    parity in {"all", "odd", "even"} zeroes the complementary coefficients.
    Emitted coefficients are +tr(T_n); a_0 = 0.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"unknown parity filter {parity!r}")
    coeffs = [0]
    if group == "gamma0":
        chi = character if character is not None else trivial_character(level)
        for n in range(1, precision + 1):
            val = trace_cusp(TraceQuery(level, weight, chi, n)).value
            coeffs.append(val.rational_value() if val.is_rational() else val)
        label = f"trace form S_{weight}(Gamma0({level}), chi={list(chi.exponents)})"
    elif group == "gamma1":
        for n in range(1, precision + 1):
            coeffs.append(trace_cusp_gamma1(level, weight, n))
        label = f"trace form S_{weight}(Gamma1({level}))"
    else:
        raise ValueError(f"unknown group {group!r}")
    if parity != "all":
        keep = 1 if parity == "odd" else 0
        coeffs = [c if n % 2 == keep else 0 for n, c in enumerate(coeffs)]
        label += f" [{parity} part]"
    coeffs = [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c
              for c in coeffs]
    return QExpansion(coeffs, label=label, precision=precision)


def relation_table_check(D_max: int) -> CheckReport:
    """H(4D) relations on the three residue classes, every value through hurwitz_H."""
    from .classnum import class_number_relations_check
    return class_number_relations_check(D_max)
