"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are coefficient vectors of length deg(Phi_m) = phi(m) over Fraction,
always reduced modulo the m-th cyclotomic polynomial, so representations are
canonical and equality is decidable coefficient-wise.  Values from different
fields compare by embedding both into Q(zeta_lcm).  Complex conversion exists
for display only; no decision is ever made on floats.
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .arith import divisors, euler_phi

__all__ = ["cyclotomic_polynomial", "CyclotomicNumber"]

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of Phi_m, ascending degree, computed by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in divisors(m):
        if d == m:
            continue
        phi_d = cyclotomic_polynomial(d)
        poly = _polydiv_exact(poly, phi_d)
    return tuple(poly)


def _polydiv_exact(num, den):
    # exact division of integer polynomials, den monic
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    out = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    assert all(c == 0 for c in num[:dd]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _head_row(m: int) -> tuple:
    """x^phi(m) mod Phi_m as an integer vector (Phi_m is monic)."""
    phi = cyclotomic_polynomial(m)
    return tuple(-c for c in phi[:-1])


def _reduce(m: int, coeffs):
    """Reduce an arbitrary-length coefficient list mod Phi_m to length phi(m)."""
    deg = euler_phi(m)
    coeffs = list(coeffs)
    if len(coeffs) < deg:
        return coeffs + [_ZERO] * (deg - len(coeffs))
    row = _head_row(m)
    for j in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs.pop()
        if c:
            base = j - deg
            for i, r in enumerate(row):
                if r:
                    coeffs[base + i] += c * r
    return coeffs


@lru_cache(maxsize=None)
def _zeta_power_vector(m: int, e: int) -> tuple:
    """zeta_m^e as a reduced integer coefficient tuple of length phi(m)."""
    e %= m
    deg = euler_phi(m)
    raw = [0] * (e + 1)
    raw[e] = 1
    vec = _reduce(m, raw)
    return tuple(int(c) for c in vec)


class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        deg = euler_phi(m)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) != deg:
            cs = _reduce(m, cs)
            cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
        self.coeffs = tuple(cs)

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, m: int = 1):
        return cls(m, [_ZERO] * euler_phi(m))

    @classmethod
    def one(cls, m: int = 1):
        return cls.from_rational(Fraction(1), m)

    @classmethod
    def from_rational(cls, q, m: int = 1):
        coeffs = [_ZERO] * euler_phi(m)
        coeffs[0] = Fraction(q)
        return cls(m, coeffs)

    @classmethod
    def zeta(cls, m: int, e: int = 1):
        return cls(m, _zeta_power_vector(m, e))

    @classmethod
    def from_exponent_weights(cls, m: int, weights: dict):
        """Sum of weight * zeta_m^e over an {exponent: weight} dict."""
        deg = euler_phi(m)
        acc = [0] * deg
        for e, w in weights.items():
            if not w:
                continue
            vec = _zeta_power_vector(m, e)
            for i, v in enumerate(vec):
                if v:
                    acc[i] += w * v
        return cls(m, [Fraction(a) for a in acc])

    # ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.m == self.m:
                return self, other
            m = lcm(self.m, other.m)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.from_rational(other, self.m)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.m, [c * other for c in self.coeffs])
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        n1, n2 = len(a.coeffs), len(b.coeffs)
        prod = [_ZERO] * (n1 + n2 - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(a.m, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-field equality makes a consistent hash awkward

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicNumber({self.coeffs[0]})"
        return f"CyclotomicNumber(m={self.m}, {list(self.coeffs)})"

    # structure ------------------------------------------------------------

    def embed(self, m2: int) -> "CyclotomicNumber":
        """Image in Q(zeta_m2); requires m | m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"Q(zeta_{self.m}) does not embed in Q(zeta_{m2})")
        step = m2 // self.m
        weights = {}
        for i, c in enumerate(self.coeffs):
            if c:
                weights[i * step] = c
        return CyclotomicNumber.from_exponent_weights(m2, weights)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_algebraic_integer(self) -> bool:
        """True when all coordinates are integers (Z[zeta_m] is the ring of integers)."""
        return all(c.denominator == 1 for c in self.coeffs)

    def as_integer(self) -> int:
        q = self.rational_value()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return int(q)

    def to_complex(self) -> complex:
        """Float approximation, for display only."""
        return sum(float(c) * cmath.exp(2j * cmath.pi * i / self.m)
                   for i, c in enumerate(self.coeffs))

    # serialization --------------------------------------------------------

    def to_json(self):
        if self.is_rational():
            q = self.coeffs[0]
            if q.denominator == 1:
                return {"int": int(q)}
            return {"rat": f"{q.numerator}/{q.denominator}"}
        return {"m": self.m, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        if "int" in obj:
            return cls.from_rational(obj["int"])
        if "rat" in obj:
            return cls.from_rational(Fraction(obj["rat"]))
        return cls(obj["m"], [Fraction(c) for c in obj["coeffs"]])
