"""The two-character generalized Dedekind sum in four independent forms.

Conventions:
  * S(a, c) is attached to a context (chi1 mod q1, chi2 mod q2, c) with
    q1*q2 | c.  The double-sum and single-B1 forms accept any pair of
    characters and any integer a; the twisted-sawtooth form needs chi1
    primitive; the matrix form needs gcd(a, c) = 1.
  * The double-sum form accumulates exactly: terms are grouped by the root
    of unity they multiply, so real-character specializations (including
    the classical sum) come out as exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from random import Random

import numpy as np

from .analytic import b1, gauss_sum_all
from .chargroup import DirichletCharacter, principal

__all__ = [
    "GammaMatrix",
    "DedekindContext",
    "gamma_from_ac",
    "random_gamma0",
    "make_context",
    "classical_context",
    "s_direct",
    "s_b1chi",
    "s_single_b1",
    "s_cotangent",
    "s_matrix",
    "crossed_hom_residual",
    "scale_residual",
    "negate_residual",
    "invert_residual",
    "classical_s",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GammaMatrix:
    """Integer 2x2 matrix (a b; c d) with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant must be 1: {self}")

    def __matmul__(self, other: "GammaMatrix") -> "GammaMatrix":
        return GammaMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "GammaMatrix":
        return GammaMatrix(-self.a, -self.b, -self.c, -self.d)


def gamma_from_ac(a: int, c: int) -> GammaMatrix:
    """Complete a coprime first column (a, c), c >= 1, to a determinant-1 matrix."""
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    if math.gcd(a, c) != 1:
        raise ValueError(f"gcd(a, c) must be 1, got a={a}, c={c}")
    d = pow(a, -1, c) if c > 1 else 1
    b = (a * d - 1) // c
    return GammaMatrix(a, b, c, d)


def random_gamma0(level: int, rng: Random, kmax: int = 3, amax: int = 12) -> GammaMatrix:
    """A pseudo-random element of Gamma_0(level), including c = 0 and c < 0 cases."""
    k = rng.randint(-kmax, kmax)
    c = level * k
    if c == 0:
        m = rng.randint(-amax, amax)
        s = rng.choice((1, -1))
        return GammaMatrix(s, m * s, 0, s)
    a = rng.randint(-amax, amax)
    while math.gcd(a, c) != 1:
        a = rng.randint(-amax, amax)
    g = gamma_from_ac(a, abs(c))
    if c < 0:
        g = -g
    return g @ GammaMatrix(1, rng.randint(-3, 3), 0, 1)


class DedekindContext:
    """A character pair with a modulus c and the tables the four forms share.

    chi1, chi2 may be arbitrary characters (the extended definition); the
    closed-form second-moment machinery additionally demands both be
    nontrivial primitive with chi1*chi2(-1) = 1, which `hypothesis_failure`
    reports.
    """

    __slots__ = (
        "chi1",
        "chi2",
        "c",
        "level",
        "b1_table",
        "_b1_float",
        "_w2",
        "_t1",
        "_log1bar",
        "_log2bar",
        "_units",
        "_unit_values",
    )

    def __init__(self, chi1: DirichletCharacter, chi2: DirichletCharacter, c: int):
        self.level = chi1.modulus * chi2.modulus
        if c < 1:
            raise ValueError(f"c must be positive, got {c}")
        if c % self.level:
            raise ValueError(f"c = {c} must be a multiple of q1*q2 = {self.level}")
        self.chi1 = chi1
        self.chi2 = chi2
        self.c = c
        self.b1_table = [b1(Fraction(j, c)) for j in range(c)]
        f = np.arange(c) / c - 0.5
        f[0] = 0.0
        self._b1_float = f
        self._w2 = None
        self._t1 = None
        self._log1bar = None
        self._log2bar = None
        self._units = None
        self._unit_values = None

    # -- lazily built tables ------------------------------------------------

    def w2(self) -> np.ndarray:
        """conj(chi2)(j) * B1(j/c) over j mod c."""
        if self._w2 is None:
            q2 = self.chi2.modulus
            vals = self.chi2.conj().values()[np.arange(self.c) % q2]
            self._w2 = vals * self._b1_float
        return self._w2

    def b1chi1_table(self) -> np.ndarray:
        """B1chi1 at (m * q1 / c) for m mod c; needs chi1 primitive."""
        if self._t1 is None:
            if not self.chi1.is_primitive:
                raise ValueError("the twisted-sawtooth form requires a primitive chi1")
            c, q1 = self.c, self.chi1.modulus
            c1 = c // q1
            vals = self.chi1.conj().values()
            t = np.zeros(c, dtype=complex)
            base = np.arange(c)
            for r in range(q1):
                v = vals[r]
                if v == 0:
                    continue
                t += v * self._b1_float[(base + r * c1) % c]
            self._t1 = t
        return self._t1

    def _conj_logs(self):
        if self._log2bar is None:
            chi1b, chi2b = self.chi1.conj(), self.chi2.conj()
            self._log1bar = [chi1b.log_at(n) for n in range(self.chi1.modulus)]
            self._log2bar = [chi2b.log_at(j) for j in range(self.c)]
        return self._log1bar, self._log2bar

    def units(self) -> list[int]:
        if self._units is None:
            self._units = [a for a in range(self.c) if math.gcd(a, self.c) == 1]
        return self._units

    def unit_sum_values(self) -> np.ndarray:
        """S(a, c) for every unit a, cached.

        Uses the table-driven single sum; falls back to the double sum when
        chi1 is imprimitive (extended contexts).
        """
        if self._unit_values is None:
            if self.chi1.is_primitive:
                vals = [s_b1chi(self, a) for a in self.units()]
            else:
                vals = [complex(s_direct(self, a)) for a in self.units()]
            self._unit_values = np.array(vals, dtype=complex)
        return self._unit_values

    def at_modulus(self, c: int) -> "DedekindContext":
        return self if c == self.c else _context(self.chi1, self.chi2, c)

    def hypothesis_failure(self) -> str | None:
        """Name the first violated closed-form hypothesis, or None."""
        if self.chi1.is_principal or not self.chi1.is_primitive:
            return "chi1 must be nontrivial and primitive"
        if self.chi2.is_principal or not self.chi2.is_primitive:
            return "chi2 must be nontrivial and primitive"
        if self.chi1.parity() * self.chi2.parity() != 1:
            return "chi1*chi2(-1) must equal +1"
        return None

    def __repr__(self) -> str:
        return f"DedekindContext({self.chi1!r}, {self.chi2!r}, c={self.c})"


@lru_cache(maxsize=None)
def _context(chi1: DirichletCharacter, chi2: DirichletCharacter, c: int) -> DedekindContext:
    return DedekindContext(chi1, chi2, c)


def make_context(chi1: DirichletCharacter, chi2: DirichletCharacter, c: int) -> DedekindContext:
    """Cached context factory (same instance for repeated (chi1, chi2, c))."""
    return _context(chi1, chi2, c)


def _eval_buckets(buckets: dict[Fraction, Fraction]):
    """Evaluate sum coeff * e(t); exact Fraction when only t = 0 appears."""
    buckets = {t: v for t, v in buckets.items() if v}
    if not buckets:
        return Fraction(0)
    if set(buckets) == {Fraction(0)}:
        return buckets[Fraction(0)]
    total = 0j
    for t in sorted(buckets):
        total += float(buckets[t]) * complex(math.cos(2 * math.pi * t), math.sin(2 * math.pi * t))
    return total


def _double_sum(ctx: DedekindContext, a: int, weight_by_index: bool):
    """Shared engine for the double-sum and single-B1 forms (exact buckets)."""
    c, q1 = ctx.c, ctx.chi1.modulus
    c1 = c // q1
    log1, log2 = ctx._conj_logs()
    b1c = ctx.b1_table
    a %= c
    buckets: dict[Fraction, Fraction] = {}
    for j in range(c):
        t2 = log2[j]
        if t2 is None:
            continue
        w = Fraction(j, c) if weight_by_index else b1c[j]
        if not w:
            continue
        aj = a * j
        for n in range(q1):
            t1 = log1[n]
            if t1 is None:
                continue
            v = b1c[(n * c1 + aj) % c]
            if not v:
                continue
            t = t1 + t2
            if t >= 1:
                t -= 1
            coeff = w * v
            if t >= _HALF:  # e(t + 1/2) = -e(t)
                t -= _HALF
                coeff = -coeff
            buckets[t] = buckets.get(t, 0) + coeff
    return _eval_buckets(buckets)


def s_direct(ctx: DedekindContext, a: int):
    """Double sum over j mod c and n mod q1 of the character-weighted sawtooth product.

    Exact (Fraction) when both characters are real-valued, complex otherwise.
    """
    return _double_sum(ctx, a, weight_by_index=False)


def s_single_b1(ctx: DedekindContext, a: int):
    """Variant with one sawtooth replaced by the linear weight j/c."""
    return _double_sum(ctx, a, weight_by_index=True)


def s_b1chi(ctx: DedekindContext, a: int) -> complex:
    """Single sum over j of conj(chi2)(j) B1(j/c) B1chi1(a j q1 / c) via tables."""
    c = ctx.c
    t = ctx.b1chi1_table()
    idx = (a % c) * np.arange(c, dtype=np.int64) % c
    return complex(ctx.w2() @ t[idx])


def s_cotangent(ctx: DedekindContext, a: int) -> complex:
    """Cotangent form.

    The inner index r runs mod q2: rescaling the double cotangent sum over
    r, s mod c (with the congruence r + a s = 0 mod c/q2) by r -> -a s + r
    c/q2 turns cot(pi r / c) into cot(pi (r/q2 - a s/c)) while the Gauss-sum
    argument becomes r itself.  Terms where a cotangent is undefined are
    omitted.  Pinned by agreement with the double-sum form.
    """
    c = ctx.c
    q1, q2 = ctx.chi1.modulus, ctx.chi2.modulus
    g1 = gauss_sum_all(ctx.chi1.conj())
    g2 = gauss_sum_all(ctx.chi2.conj())
    s = np.arange(1, c, dtype=np.int64)
    r = np.arange(q2, dtype=np.int64)
    cot_s = 1.0 / np.tan(np.pi * s / c)
    ts = g1[s % q1]
    big = q2 * c
    num = (r[None, :] * c - (a * q2) * s[:, None]) % big
    with np.errstate(divide="ignore"):
        cot_r = 1.0 / np.tan(np.pi * num / big)
    cot_r[num == 0] = 0.0  # omitted terms (cot undefined)
    total = ((cot_s * ts)[:, None] * cot_r * g2[None, :]).sum()
    return complex(-total / (4 * c * q2))


def s_matrix(ctx: DedekindContext, gamma: GammaMatrix) -> complex:
    """S(gamma) for gamma in Gamma_0(q1 q2).

    S := 0 when the lower-left entry is 0, and S(gamma) := S(-gamma) when it
    is negative; with chi1*conj(chi2)(-1) = 1 these are the unique choices
    keeping the cocycle relation exact.
    """
    if gamma.c % ctx.level:
        raise ValueError(f"matrix is not in Gamma_0({ctx.level}): c = {gamma.c}")
    if gamma.c == 0:
        return 0j
    if gamma.c < 0:
        return s_matrix(ctx, -gamma)
    return s_b1chi(ctx.at_modulus(gamma.c), gamma.a)


def crossed_hom_residual(ctx: DedekindContext, g1: GammaMatrix, g2: GammaMatrix) -> complex:
    """S(g1 g2) - S(g1) - chi1 conj(chi2)(d of g1) * S(g2); should vanish."""
    twist = ctx.chi1(g1.d) * ctx.chi2.conj()(g1.d)
    return s_matrix(ctx, g1 @ g2) - s_matrix(ctx, g1) - twist * s_matrix(ctx, g2)


def _sum_value(ctx: DedekindContext, a: int) -> complex:
    """S(a, c) by the fastest applicable form."""
    if ctx.chi1.is_primitive:
        return s_b1chi(ctx, a)
    return complex(s_direct(ctx, a))


def scale_residual(ctx: DedekindContext, a: int, alpha: int) -> complex:
    """S(a, c) - S(alpha a, alpha c) for positive alpha and gcd(a, c) = 1."""
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if math.gcd(a, ctx.c) != 1:
        raise ValueError("scaling law requires gcd(a, c) = 1")
    scaled = ctx.at_modulus(alpha * ctx.c)
    return _sum_value(ctx, a) - _sum_value(scaled, alpha * a)


def negate_residual(ctx: DedekindContext, a: int) -> complex:
    """S(-a, c) + chi2(-1) S(a, c); should vanish when chi1 chi2(-1) = 1."""
    return _sum_value(ctx, -a) + ctx.chi2.parity() * _sum_value(ctx, a)


def invert_residual(ctx: DedekindContext, a: int, form: str = "statement") -> complex:
    """Residual of the a -> a^(-1) law for gcd(a, c) = 1.

    form="statement": S(abar, c) - chi1(-a) conj(chi2)(a) S(a, c).
    form="rewritten": S(abar, c) - chi1(-1) chi2(abar) S(a, c), which drops a
    factor chi1(a); the two coincide only where chi1(a) = 1 (tests flag the
    difference).
    """
    c = ctx.c
    if math.gcd(a, c) != 1:
        raise ValueError("inversion law requires gcd(a, c) = 1")
    abar = pow(a, -1, c) if c > 1 else 0
    s_a = _sum_value(ctx, a)
    s_abar = _sum_value(ctx, abar)
    if form == "statement":
        factor = ctx.chi1(-a) * ctx.chi2.conj()(a)
    elif form == "rewritten":
        factor = ctx.chi1.parity() * ctx.chi2(abar)
    else:
        raise ValueError(f"unknown form {form!r}")
    return s_abar - factor * s_a


def classical_s(h: int, k: int) -> Fraction:
    """Classical Dedekind sum s(h, k), exact."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if math.gcd(h, k) != 1:
        raise ValueError(f"gcd(h, k) must be 1, got h={h}, k={k}")
    total = Fraction(0)
    for j in range(1, k):
        total += b1(Fraction(j, k)) * b1(Fraction(j * h, k))
    return total


def classical_context(c: int) -> DedekindContext:
    """The trivial-character specialization: S(a, c) is the classical sum."""
    one = principal(1)
    return make_context(one, one, c)
