"""Bernoulli functions, Gauss sums, and L(1, chi) for odd characters.

The sawtooth B1 stays in exact rational arithmetic; complex doubles enter
only when rational values meet character values.  L(1, chi) is obtained in
closed form from the twisted sawtooth at 0 (odd characters only), with the
finite Euler-factor completion for imprimitive characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .chargroup import (
    DirichletCharacter,
    divisors,
    factorize,
    mobius,
    product,
)

__all__ = [
    "LValue",
    "b1",
    "gauss_sum",
    "gauss_sum_all",
    "gauss_sum_via_primitive",
    "b1_chi",
    "b1_chi_series",
    "l_one",
    "char_sum_b1",
    "char_sum_b1_brute",
    "char_sum_b1chi",
    "char_sum_b1chi_brute",
]

_PI_I = math.pi * 1j


def b1(x) -> Fraction:
    """First Bernoulli function: 0 on integers, else frac(x) - 1/2.  Exact."""
    if isinstance(x, float):
        raise TypeError("b1 expects an int or Fraction (exact arithmetic only)")
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


@lru_cache(maxsize=None)
def _e_table(q: int) -> np.ndarray:
    """e(n/q) for n mod q."""
    t = np.exp(2j * np.pi * np.arange(q) / q)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=1 << 16)
def gauss_sum(chi: DirichletCharacter, l: int = 1) -> complex:
    """tau(chi, l) = sum_{n mod q} chi(n) e(n l / q), by direct summation."""
    q = chi.modulus
    idx = np.arange(q, dtype=np.int64) * (l % q) % q
    return complex(chi.values() @ _e_table(q)[idx])


@lru_cache(maxsize=4096)
def gauss_sum_all(chi: DirichletCharacter) -> np.ndarray:
    """tau(chi, l) for every l mod q at once (inverse DFT of the value table)."""
    q = chi.modulus
    out = q * np.fft.ifft(chi.values())
    out.flags.writeable = False
    return out


def gauss_sum_via_primitive(psi: DirichletCharacter, l: int) -> complex:
    """tau(psi, l) assembled from tau(psi*) and a divisor sum over k | (l, d/q(psi))."""
    if psi.is_principal:
        raise ValueError("gauss_sum_via_primitive requires a non-principal character")
    d = psi.modulus
    ps = psi.star()
    qp = ps.modulus
    m = d // qp
    ps_bar = ps.conj()
    total = 0j
    for k in divisors(m):
        if l % k:
            continue  # (k | l fails; l = 0 keeps every k)
        r = m // k
        mu = mobius(r)
        if mu == 0:
            continue
        total += k * ps_bar(l // k) * ps(r) * mu
    return gauss_sum(ps) * total


@lru_cache(maxsize=1 << 18)
def b1_chi(chi: DirichletCharacter, x) -> complex:
    """Twisted sawtooth sum_{r mod q} conj(chi)(r) B1((x+r)/q); chi must be primitive."""
    if not chi.is_primitive:
        raise ValueError("b1_chi is defined through its finite sum for primitive characters only")
    if isinstance(x, float):
        raise TypeError("b1_chi expects an int or Fraction argument")
    x = Fraction(x)
    q = chi.modulus
    num, den = x.numerator, x.denominator
    D = den * q
    m = (num + np.arange(q, dtype=np.int64) * den) % D
    saw = m / D - 0.5
    saw[m == 0] = 0.0
    return complex(chi.conj().values() @ saw)


def b1_chi_series(chi: DirichletCharacter, x, L: int) -> complex:
    """Partial Fourier series for the twisted sawtooth, pairing the terms +-l.

    Converges (conditionally) to b1_chi(chi, x); test/diagnostic use only.
    """
    if not chi.is_primitive:
        raise ValueError("the series form matches the finite sum for primitive characters only")
    if L < 1:
        raise ValueError("L must be >= 1")
    x = Fraction(x)
    q = chi.modulus
    num, den = x.numerator, x.denominator
    D = den * q
    ls = np.arange(1, L + 1, dtype=np.int64)
    vl = chi.values()[ls % q]
    phase = np.exp(2j * np.pi * ((ls * num) % D) / D)
    par = chi.parity()
    paired = vl * (phase - par * np.conj(phase)) / ls
    return complex(-gauss_sum(chi.conj()) / (2 * _PI_I) * paired.sum())


@dataclass(frozen=True)
class LValue:
    """L(1, chi) together with the character and the modulus it was taken at."""

    character: DirichletCharacter
    modulus: int
    value: complex

    def __complex__(self) -> complex:
        return self.value


@lru_cache(maxsize=None)
def _l_one_primitive(chi: DirichletCharacter) -> complex:
    # L(1, chi) = -pi*i*B_{1,chi}(0) / tau(conj(chi)) for odd primitive chi
    return -_PI_I * b1_chi(chi, 0) / gauss_sum(chi.conj())


def l_one(chi: DirichletCharacter) -> LValue:
    """L(1, chi) for an odd character, via the primitive value times Euler factors."""
    if chi.parity() != -1:
        raise ValueError("l_one handles odd characters only (chi(-1) = -1)")
    chi_star = chi.star()
    val = _l_one_primitive(chi_star)
    M, f = chi.modulus, chi_star.modulus
    if M != f:
        for p, _ in factorize(M).factors:
            if f % p:
                val *= 1 - chi_star(p) / p
    return LValue(chi, M, val)


def char_sum_b1(chi: DirichletCharacter, c: int) -> complex:
    """Closed form of sum_{r mod c} chi(r) B1(r/c) for chi mod d | c.

    Zero for even chi; otherwise a Gauss-sum/convolution multiple of
    L(1, conj(chi*)).
    """
    d = chi.modulus
    if c % d:
        raise ValueError(f"chi has modulus {d}, which must divide c = {c}")
    if chi.parity() == 1:
        return 0j
    chi_star = chi.star()
    conv = sum(mobius(k) * chi_star(k) for k in divisors(d))
    lval = _l_one_primitive(chi_star.conj())
    return -gauss_sum(chi_star) / _PI_I * conv * lval


def char_sum_b1_brute(chi: DirichletCharacter, c: int) -> complex:
    """Direct evaluation of sum_{r mod c} chi(r) B1(r/c)."""
    d = chi.modulus
    if c % d:
        raise ValueError(f"chi has modulus {d}, which must divide c = {c}")
    vals = chi.values()[np.arange(c) % d]
    saw = np.arange(c) / c - 0.5
    saw[0] = 0.0
    return complex(vals @ saw)


def char_sum_b1chi(psi: DirichletCharacter, chi: DirichletCharacter, c: int) -> complex:
    """Closed form of sum_{t mod c} psi(t/(c/d)) B1chi(t/(c/q)).

    psi runs mod d | c, chi is primitive mod q | c.  Zero unless chi*psi is
    odd; otherwise a Gauss-sum/convolution multiple of L(1, chi*conj(psi*)),
    the L-value being taken at modulus lcm(q, q(psi)).
    """
    d, q = psi.modulus, chi.modulus
    if c % d or c % q:
        raise ValueError("both moduli must divide c")
    if not chi.is_primitive:
        raise ValueError("chi must be primitive")
    if chi.parity() * psi.parity() == 1:
        return 0j
    psi_star = psi.star()
    qp = psi_star.modulus
    m = d // qp
    conv = 0j
    for k in divisors(m):
        r = m // k
        mu = mobius(r)
        if mu == 0:
            continue
        conv += chi(k) * mu * psi_star(r)
    lval = l_one(product(chi, psi_star.conj(), math.lcm(q, qp))).value
    return -gauss_sum(chi.conj()) * gauss_sum(psi_star) / _PI_I * conv * lval


def char_sum_b1chi_brute(psi: DirichletCharacter, chi: DirichletCharacter, c: int) -> complex:
    """Direct evaluation of sum_{t mod c} psi(t/(c/d)) B1chi(t/(c/q))."""
    d, q = psi.modulus, chi.modulus
    if c % d or c % q:
        raise ValueError("both moduli must divide c")
    cd = c // d
    total = 0j
    for u in range(d):
        v = psi(u)
        if v == 0:
            continue
        total += v * b1_chi(chi, Fraction(u * cd * q, c))
    return total
