"""Dirichlet characters mod N with exact values in cyclotomic fields.

The unit group (Z/NZ)^x is presented as a product of cyclic groups via CRT:
smallest primitive roots at odd prime powers, the pair {-1, 5} at 2^a with
a >= 3, and {3} at 4.  A character is an exponent vector against those
generators; chi(gen_i) = zeta_m^(k_i * m / order_i) with m the group exponent.
Values live in Q(zeta_ord(chi)).  All structures are immutable after
construction, so evaluation is thread-safe.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from math import gcd, lcm

from .arith import divisors, euler_phi, factor
from .cyclotomic import CyclotomicNumber

__all__ = ["UnitGroup", "unit_group", "DirichletCharacter", "enumerate_characters",
           "product_character"]


def _primitive_root_prime_power(p: int, a: int) -> int:
    # smallest primitive root mod p, bumped by p if it fails to generate mod p^2
    qs = [q for q, _ in factor(p - 1)]
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    if a >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


class UnitGroup:
    """(Z/NZ)^x as an explicit product of cyclic groups with a discrete-log table."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("modulus must be positive")
        self.N = N
        gens, orders, local = [], [], []
        for p, a in factor(N):
            q = p ** a
            rest = N // q
            if p == 2:
                if a == 2:
                    local.append((q, [(q - 1, 2)]))
                elif a >= 3:
                    local.append((q, [(q - 1, 2), (5, 2 ** (a - 2))]))
                continue
            g = _primitive_root_prime_power(p, a)
            local.append((q, [(g, euler_phi(q))]))
        for q, gens_q in local:
            rest = N // q
            for g, order in gens_q:
                # lift to be g mod q and 1 mod N/q
                if rest == 1:
                    lifted = g % N
                else:
                    lifted = (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % N
                gens.append(lifted)
                orders.append(order)
        self.generators = tuple(gens)
        self.orders = tuple(orders)
        self.exponent = lcm(*self.orders) if self.orders else 1
        self._dlog = self._build_dlog()

    def _build_dlog(self):
        table = {1 % self.N: (0,) * len(self.generators)}
        for i, (g, order) in enumerate(zip(self.generators, self.orders)):
            new = {}
            for res, vec in table.items():
                x = res
                for e in range(1, order):
                    x = x * g % self.N
                    v = list(vec)
                    v[i] = e
                    new[x] = tuple(v)
            table.update(new)
        return table

    def dlog(self, a: int) -> tuple:
        """Exponent vector of a unit a; raises for non-units."""
        vec = self._dlog.get(a % self.N)
        if vec is None:
            raise ValueError(f"{a} is not a unit mod {self.N}")
        return vec

    def order(self) -> int:
        return euler_phi(self.N)

    def __repr__(self):
        pairs = list(zip(self.generators, self.orders))
        return f"UnitGroup({self.N}, generators={pairs})"


@lru_cache(maxsize=None)
def unit_group(N: int) -> UnitGroup:
    return UnitGroup(N)


class DirichletCharacter:
    """A character mod N given by exponents on the unit-group generators."""

    __slots__ = ("N", "exponents", "group", "_order", "_table", "_conductor",
                 "_parity", "_lifts")

    def __init__(self, N: int, exponents):
        self.N = N
        self.group = unit_group(N)
        exps = tuple(int(k) % order for k, order in zip(exponents, self.group.orders))
        if len(exps) != len(self.group.orders):
            raise ValueError("exponent vector length mismatch")
        self.exponents = exps
        m = self.group.exponent
        # chi(gen_i) = zeta_m^(k_i * m / order_i); order of chi = m / gcd of those
        weights = [k * (m // order) for k, order in zip(exps, self.group.orders)]
        g = gcd(m, *weights) if weights else m
        self._order = m // g
        if N == 1:
            table = [0]
        else:
            table = [None] * N
            for a, vec in self.group._dlog.items():
                e = sum(w * v for w, v in zip(weights, vec)) % m
                table[a] = e // g
        self._table = tuple(table)
        self._conductor = None
        self._parity = None
        self._lifts = {}

    # evaluation -----------------------------------------------------------

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def exponent_of(self, a: int):
        """Exponent e with chi(a) = zeta_ord^e, or None on non-units."""
        if self.N == 1:
            return 0
        return self._table[a % self.N]

    def __call__(self, a: int) -> CyclotomicNumber:
        e = self.exponent_of(a)
        if e is None:
            return CyclotomicNumber.zero(self._order)
        return CyclotomicNumber.zeta(self._order, e)

    def value_mod(self, a: int, M: int) -> CyclotomicNumber:
        """Value at a of the character mod M induced by the primitive character.

        Requires conductor | M | N; returns 0 when gcd(a, M) > 1, else the
        primitive value chi*(a), computed at a lift of a coprime to N.
        """
        N = self.N
        if N % M or M % self.conductor():
            raise ValueError(f"need c(chi) | M | N, got M={M}, c={self.conductor()}, N={N}")
        a %= M
        if gcd(a, M) != 1:
            return CyclotomicNumber.zero(self._order)
        b = self._lifts.get((a, M))
        if b is None:
            b = a
            while gcd(b, N) != 1:
                b += M
            self._lifts[(a, M)] = b
        return self(b)

    def parity(self) -> int:
        """chi(-1), as +1 or -1."""
        if self._parity is None:
            e = self.exponent_of(-1)
            self._parity = 1 if e == 0 else -1
        return self._parity

    def conductor(self) -> int:
        """Smallest c | N through which chi factors."""
        if self._conductor is None:
            N = self.N
            for c in divisors(N):
                if all(self.exponent_of(a) == 0
                       for a in range(1, N + 1, c) if gcd(a, N) == 1):
                    self._conductor = c
                    break
        return self._conductor

    # plumbing ---------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter)
                and self.N == other.N and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.N, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter(N={self.N}, exponents={list(self.exponents)})"

    def to_json(self):
        return {"modulus": self.N, "exponents": list(self.exponents),
                "conductor": self.conductor(), "parity": self.parity()}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["modulus"], obj["exponents"])


@lru_cache(maxsize=None)
def _all_characters(N: int) -> tuple:
    grp = unit_group(N)
    ranges = [range(order) for order in grp.orders]
    return tuple(DirichletCharacter(N, exps) for exps in iter_product(*ranges))


def enumerate_characters(N: int, parity=None) -> tuple:
    """The phi(N) characters mod N, in the documented mixed-radix order.

    Index 0 is the trivial character; the last generator's exponent varies
    fastest.  With parity given, only characters with chi(-1) = parity.
    """
    chars = _all_characters(N)
    if parity is None:
        return chars
    return tuple(chi for chi in chars if chi.parity() == parity)


def trivial_character(N: int) -> DirichletCharacter:
    return _all_characters(N)[0]


def product_character(chi1: DirichletCharacter, chi2: DirichletCharacter) -> DirichletCharacter:
    """The character mod N1*N2 with values chi1(a) chi2(a); moduli must be coprime."""
    N1, N2 = chi1.N, chi2.N
    if gcd(N1, N2) != 1:
        raise ValueError("moduli must be coprime")
    N = N1 * N2
    grp = unit_group(N)
    exps = []
    for g, order in zip(grp.generators, grp.orders):
        e1 = chi1.exponent_of(g)
        e2 = chi2.exponent_of(g)
        # zeta_o1^e1 * zeta_o2^e2 = zeta_L^(...) with L = lcm; restricted to <g>
        # this is a root of unity of order dividing order, so the combined
        # exponent against zeta_L is divisible by L/order.
        L = lcm(chi1.order(), chi2.order(), order)
        e = (e1 * (L // chi1.order()) + e2 * (L // chi2.order())) % L
        assert e * order % L == 0, "product value is not in <zeta_order>"
        exps.append(e * order // L)
    return DirichletCharacter(N, exps)
