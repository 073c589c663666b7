"""Dirichlet characters and classical multiplicative functions.

A character mod q is stored as an exponent vector against a fixed set of
generators of (Z/qZ)^x, so products, conjugates, restrictions to smaller
moduli, and parities are exact integer arithmetic.  Complex values appear
only at the boundary, when a caller evaluates a character.

The generator choice is deterministic (smallest primitive root per odd
prime power; -1 and 5 for 2^k with k >= 3), which makes the lexicographic
enumeration order of `characters(q)` reproducible across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iter_product
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "Factorization",
    "CharacterGroup",
    "DirichletCharacter",
    "factorize",
    "is_prime",
    "divisors",
    "unit_group",
    "characters",
    "parity",
    "conductor",
    "star",
    "product",
    "mobius",
    "euler_phi",
    "sigma0",
    "phi_star",
    "dirichlet_convolve",
    "count_primitive_with_parity",
]

_MAX_N = 2**63 - 1

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the 64-bit range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod p^e with primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def divisor_list(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor 1 <= n <= 2^63-1 (trial division below 10^6, then rho)."""
    if not 1 <= n <= _MAX_N:
        raise ValueError(f"factorize requires 1 <= n <= 2^63-1, got {n}")
    m = n
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    # wheel over 6k+-1
    p = 7
    while p * p <= m and p < 10**6:
        for q in (p - 2, p):
            while m % q == 0:
                factors[q] = factors.get(q, 0) + 1
                m //= q
        p += 6
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(factors.items())))


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors of n."""
    return factorize(n).divisor_list()


def _primitive_root(p: int, e: int) -> int:
    """Smallest primitive root mod p, nudged so it stays primitive mod p^e."""
    phi = p - 1
    prime_parts = [q for q, _ in factorize(phi).factors]
    g = 2
    while any(pow(g, phi // q, p) == 1 for q in prime_parts):
        g += 1
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p  # g is then primitive mod p^2, hence mod every p^e
    return g


@dataclass(frozen=True)
class _Component:
    """One prime-power block of (Z/qZ)^x and the generator slots it owns."""

    prime: int
    exponent: int
    start: int  # index of its first generator in the group lists
    count: int


class CharacterGroup:
    """Structure of (Z/qZ)^x: generators, their orders, and discrete logs.

    Discrete logs of every unit are tabulated once at construction; the
    table doubles as the exact evaluation engine for characters (values
    are roots of unity e(k/N) with N = lcm of the generator orders).
    """

    __slots__ = (
        "modulus",
        "generators",
        "orders",
        "value_order",
        "components",
        "_dlog",
        "_unit_mask",
        "_weights",
        "_roots",
        "_registry",
    )

    def __init__(self, q: int):
        if q < 1:
            raise ValueError(f"modulus must be positive, got {q}")
        self.modulus = q
        gens: list[int] = []
        orders: list[int] = []
        comps: list[_Component] = []
        for p, e in factorize(q).factors:
            pe = p**e
            start = len(gens)
            if p == 2:
                if e == 2:
                    local = [(3, 2)]
                elif e >= 3:
                    local = [(pe - 1, 2), (5, 2 ** (e - 2))]
                else:
                    local = []
            else:
                local = [(_primitive_root(p, e) % pe, (p - 1) * p ** (e - 1))]
            rest = q // pe
            for g, order in local:
                # CRT lift: g on this block, 1 on every other block
                if rest == 1:
                    lifted = g % q
                else:
                    inv = pow(pe, -1, rest)
                    lifted = (g + pe * ((1 - g) * inv % rest)) % q
                gens.append(lifted)
                orders.append(order)
            comps.append(_Component(p, e, start, len(gens) - start))
        self.generators = tuple(gens)
        self.orders = tuple(orders)
        self.components = tuple(comps)
        self.value_order = math.lcm(*orders) if orders else 1
        self._registry = {}
        self._build_tables()

    def _build_tables(self) -> None:
        q, gens, orders = self.modulus, self.generators, self.orders
        ng = len(gens)
        dlog = np.full((q, ng), -1, dtype=np.int64)
        unit = np.zeros(q, dtype=bool)
        idx = [0] * ng
        res = 1 % q
        total = self.phi
        for _ in range(total):
            dlog[res] = idx
            unit[res] = True
            # odometer increment, last digit fastest; g^order == 1 makes the
            # carry reset implicit
            i = ng - 1
            while i >= 0:
                idx[i] += 1
                res = res * gens[i] % q
                if idx[i] < orders[i]:
                    break
                idx[i] = 0
                i -= 1
        N = self.value_order
        weights = np.zeros((q, ng), dtype=np.int64)
        for i, o in enumerate(orders):
            weights[:, i] = dlog[:, i] * (N // o)
        weights[~unit] = 0
        self._dlog = dlog
        self._unit_mask = unit
        self._weights = weights
        self._roots = np.exp(2j * np.pi * np.arange(N) / N)

    @property
    def phi(self) -> int:
        return math.prod(self.orders)

    def is_unit(self, n: int) -> bool:
        return bool(self._unit_mask[n % self.modulus])

    def dlog(self, n: int) -> tuple[int, ...] | None:
        n %= self.modulus
        if not self._unit_mask[n]:
            return None
        return tuple(int(v) for v in self._dlog[n])

    def character(self, exponents: Sequence[int]) -> "DirichletCharacter":
        """Canonical (shared) character instance for an exponent vector."""
        key = tuple(int(e) for e in exponents)
        inst = self._registry.get(key)
        if inst is None:
            inst = DirichletCharacter(self, key)
            self._registry[key] = inst
        return inst

    def __repr__(self) -> str:
        return f"CharacterGroup(q={self.modulus}, orders={self.orders})"


@lru_cache(maxsize=None)
def unit_group(q: int) -> CharacterGroup:
    """The (cached) unit group mod q.  q = 1, 2 give an empty generator list."""
    return CharacterGroup(q)


def _as_integer(x) -> int | None:
    """Integer value of x, or None when x is a non-integer rational."""
    if isinstance(x, bool):
        raise TypeError("character argument must be an integer or Fraction")
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else None
    raise TypeError(f"character argument must be an integer or Fraction, got {type(x).__name__}")


class DirichletCharacter:
    """A Dirichlet character mod q, as exponents against the group generators.

    chi(g_i) = e(exponents[i] / orders[i]).  Arguments may be integers or
    Fractions; the value is 0 off the units and at non-integer rationals.
    """

    __slots__ = ("group", "exponents", "_hash", "_conductor", "_star", "_values", "_numerators")

    def __init__(self, group: CharacterGroup, exponents: Sequence[int]):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(group.orders):
            raise ValueError("exponent vector length does not match the generator count")
        for e, o in zip(exps, group.orders):
            if not 0 <= e < o:
                raise ValueError(f"exponent {e} out of range for generator order {o}")
        self.group = group
        self.exponents = exps
        self._hash = hash((group.modulus, exps))
        self._conductor = 0
        self._star = None
        self._values = None
        self._numerators = None

    # -- identity ---------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self.group.modulus

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirichletCharacter)
            and self.group.modulus == other.group.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"chi[{self.modulus};{','.join(map(str, self.exponents))}]"

    @property
    def label(self) -> str:
        return repr(self)

    # -- evaluation -------------------------------------------------------

    def log_at(self, x) -> Fraction | None:
        """Exact exponent t in [0,1) with chi(x) = e(t); None where chi(x) = 0."""
        n = _as_integer(x)
        if n is None:
            return None
        g = self.group
        n %= g.modulus
        if not g._unit_mask[n]:
            return None
        N = g.value_order
        k = int(g._weights[n] @ np.asarray(self.exponents, dtype=np.int64)) % N
        return Fraction(k, N)

    def __call__(self, x) -> complex:
        t = self.log_at(x)
        if t is None:
            return 0j
        g = self.group
        return complex(g._roots[int(t * g.value_order)])

    def numerators(self) -> np.ndarray:
        """Value exponents k(n) with chi(n) = e(k/N) for all n mod q; -1 off units."""
        if self._numerators is None:
            g = self.group
            N = g.value_order
            ks = g._weights @ np.asarray(self.exponents, dtype=np.int64) % N
            ks[~g._unit_mask] = -1
            self._numerators = ks
        return self._numerators

    def values(self) -> np.ndarray:
        """Complex value table over a full period (zeros off the units)."""
        if self._values is None:
            g = self.group
            ks = self.numerators()
            vals = np.where(ks >= 0, g._roots[np.maximum(ks, 0)], 0)
            vals.flags.writeable = False
            self._values = vals
        return self._values

    # -- algebra ----------------------------------------------------------

    def conj(self) -> DirichletCharacter:
        exps = tuple((-e) % o for e, o in zip(self.exponents, self.group.orders))
        return self.group.character(exps)

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        if other.group.modulus != self.group.modulus:
            raise ValueError("same-modulus product only; use product(chi, psi, M) across moduli")
        exps = tuple((a + b) % o for a, b, o in zip(self.exponents, other.exponents, self.group.orders))
        return self.group.character(exps)

    def lift(self, M: int) -> DirichletCharacter:
        """The character mod M (a multiple of q) induced by composition with reduction."""
        q = self.modulus
        if M % q:
            raise ValueError(f"lift target {M} is not a multiple of the modulus {q}")
        if M == q:
            return self
        return _lift(self, M)

    # -- structure --------------------------------------------------------

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def parity(self) -> int:
        """chi(-1) as an exact integer in {+1, -1}."""
        t = self.log_at(-1)
        return 1 if t == 0 else -1

    def conductor(self) -> int:
        """Minimal d | q such that chi is trivial on units congruent to 1 mod d."""
        if self._conductor:
            return self._conductor
        f = 1
        g = self.group
        for comp in g.components:
            p = comp.prime
            exps = self.exponents[comp.start : comp.start + comp.count]
            ords = g.orders[comp.start : comp.start + comp.count]
            if comp.count == 0 or all(e == 0 for e in exps):
                block = 1
            elif p == 2 and comp.exponent >= 3:
                a, b = exps
                if b == 0:
                    block = 4 if a else 1
                else:
                    # order of the part on 5 is 2^s; such a block first appears mod 2^(s+2)
                    s = (ords[1] // math.gcd(b, ords[1])).bit_length() - 1
                    block = 2 ** (s + 2)
            elif p == 2:
                block = 4
            else:
                m = ords[0] // math.gcd(exps[0], ords[0])
                s = 0
                while m % p == 0:
                    m //= p
                    s += 1
                block = p ** (s + 1)
            f *= block
        self._conductor = f
        return f

    @property
    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def star(self) -> DirichletCharacter:
        """The primitive character (mod the conductor) inducing this one."""
        if self._star is not None:
            return self._star
        f = self.conductor()
        if f == self.modulus:
            self._star = self
            return self
        q = self.modulus
        small = unit_group(f)
        exps = []
        for gen, order in zip(small.generators, small.orders):
            n = gen
            while math.gcd(n, q) != 1:  # lift gen mod f to a unit mod q
                n += f
            t = self.log_at(n)
            k = t * order
            assert k.denominator == 1, "star value must be an order-th root of unity"
            exps.append(int(k) % order)
        chi = small.character(exps)
        self._star = chi
        return chi


# -- module-level operations ----------------------------------------------


@lru_cache(maxsize=1 << 16)
def _lift(chi: DirichletCharacter, M: int) -> DirichletCharacter:
    big = unit_group(M)
    exps = []
    for gen, order in zip(big.generators, big.orders):
        t = chi.log_at(gen)
        k = t * order
        assert k.denominator == 1, "lifted value must be an order-th root of unity"
        exps.append(int(k) % order)
    return big.character(exps)


@lru_cache(maxsize=None)
def characters(q: int) -> tuple[DirichletCharacter, ...]:
    """All phi(q) characters mod q, lexicographic by exponent vector."""
    g = unit_group(q)
    return tuple(g.character(exps) for exps in _iter_product(*(range(o) for o in g.orders)))


def parity(chi: DirichletCharacter) -> int:
    return chi.parity()


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor()


def star(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.star()


@lru_cache(maxsize=1 << 16)
def product(chi: DirichletCharacter, psi: DirichletCharacter, M: int) -> DirichletCharacter:
    """The character mod M with values chi(n) * psi(n); needs q(chi), q(psi) | M."""
    if M % chi.modulus or M % psi.modulus:
        raise ValueError(f"modulus {M} must be divisible by both {chi.modulus} and {psi.modulus}")
    return chi.lift(M) * psi.lift(M)


def principal(q: int) -> DirichletCharacter:
    """The principal character mod q."""
    g = unit_group(q)
    return g.character((0,) * len(g.orders))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def sigma0(n: int) -> int:
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


def phi_star(n: int) -> int:
    """Number of primitive characters mod n: sum_{d|n} mu(n/d) phi(d)."""
    return sum(mobius(n // d) * euler_phi(d) for d in divisors(n))


def dirichlet_convolve(f: Callable[[int], complex], g: Callable[[int], complex], n: int) -> complex:
    """(f * g)(n) = sum_{k|n} f(k) g(n/k)."""
    return sum(f(k) * g(n // k) for k in divisors(n))


def count_primitive_with_parity(q: int, sign: int) -> int:
    """Exact count, by enumeration, of primitive characters mod q with chi(-1) = sign."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sum(1 for chi in characters(q) if chi.is_primitive and chi.parity() == sign)
