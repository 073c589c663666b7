"""Finite Fourier transform of S(a, c), its g-factor, and second-moment identities.

The transform of a on S(a, c) over the units mod c has a closed form: zero
on half the characters (a parity condition), and otherwise a product of two
L-values at s = 1 with a Gauss-sum/divisor-sum factor g.  Summing squared
magnitudes over all characters (Parseval) turns that into an exact formula
for the second moment, which this module evaluates alongside brute-force
oracles for verification and growth experiments.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .analytic import gauss_sum, l_one
from .chargroup import (
    DirichletCharacter,
    characters,
    divisors,
    euler_phi,
    is_prime,
    mobius,
    phi_star,
    product,
    sigma0,
)
from .sums import DedekindContext, classical_s, make_context

__all__ = [
    "HypothesisError",
    "IdentityViolation",
    "GFactor",
    "MomentReport",
    "PsiTerm",
    "SweepRow",
    "g_factor",
    "fourier_brute",
    "fourier_closed",
    "second_moment_brute",
    "second_moment_closed",
    "walum_rhs",
    "walum_lhs",
    "nonvanishing_witness",
    "bounds_sweep",
    "sweep_csv",
    "ratio_envelope",
]

_PI = math.pi


class HypothesisError(ValueError):
    """A closed-form identity was requested outside its hypotheses."""


class IdentityViolation(RuntimeError):
    """A proved identity failed numerically; indicates an implementation bug."""


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DEDEKIND_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class GFactor:
    """The divisor-sum factor g(psi; c) and its per-divisor decomposition."""

    psi: DirichletCharacter
    value: complex
    divisor_terms: tuple[tuple[int, complex], ...]


def g_factor(ctx: DedekindContext, psi: DirichletCharacter) -> GFactor:
    """g(psi; c): three Gauss sums times a divisor sum over q(psi) | d | c."""
    c = ctx.c
    chi1, chi2 = ctx.chi1, ctx.chi2
    psi_star = psi.star()
    qpsi = psi_star.modulus
    p2bar_star = product(psi, chi2, c).star().conj()
    pref = gauss_sum(p2bar_star) * gauss_sum(psi_star) * gauss_sum(chi1.conj())
    chi2bar = chi2.conj()
    terms: list[tuple[int, complex]] = []
    for d in divisors(c):
        if d % qpsi:
            continue
        w = chi2bar(c // d)
        if w == 0:
            terms.append((d, 0j))
            continue
        conv1 = sum(mobius(k) * p2bar_star(k) for k in divisors(d))
        m = d // qpsi
        conv2 = 0j
        for k in divisors(m):
            mu = mobius(m // k)
            if mu:
                conv2 += chi1(k) * mu * psi_star(m // k)
        terms.append((d, pref * w / euler_phi(d) * conv1 * conv2))
    return GFactor(psi, complex(sum(t for _, t in terms)), tuple(terms))


def g_sq_bound(q1: int, c: int, q_psi: int) -> float:
    """Coarse a-priori bound on |g(psi; c)|^2 using |tau| = sqrt(conductor) and
    divisor-function bounds on the convolutions."""
    s = sum(1 / euler_phi(d) for d in divisors(c) if d % q_psi == 0)
    return q1 * c * q_psi * (sigma0(c) ** 2 * s) ** 2


def _require_hypotheses(ctx: DedekindContext) -> None:
    failure = ctx.hypothesis_failure()
    if failure is not None:
        raise HypothesisError(failure)


def fourier_brute(ctx: DedekindContext, xi: DirichletCharacter) -> complex:
    """sum over units a of S(a, c) xi(a), straight from the table-driven sum."""
    c = ctx.c
    if xi.modulus != c:
        raise ValueError(f"xi must be a character mod c = {c}")
    vals = xi.values()[np.asarray(ctx.units())]
    return complex(ctx.unit_sum_values() @ vals)


def fourier_closed(ctx: DedekindContext, xi: DirichletCharacter) -> complex:
    """Closed form of the transform: 0 when xi*chi1 is even, else
    phi(c)/(pi i)^2 * L(1, (xi chi2)*) * L(1, conj(xi*) chi1) * g(xi; c)."""
    _require_hypotheses(ctx)
    c = ctx.c
    if xi.modulus != c:
        raise ValueError(f"xi must be a character mod c = {c}")
    chi1, chi2 = ctx.chi1, ctx.chi2
    if xi.parity() * chi1.parity() == 1:
        return 0j
    l_right = l_one(product(xi, chi2, c).star()).value
    xi_star = xi.star()
    l_left = l_one(product(xi_star.conj(), chi1, math.lcm(xi_star.modulus, chi1.modulus))).value
    g = g_factor(ctx, xi).value
    return euler_phi(c) / (-(_PI**2)) * l_right * l_left * g


def second_moment_brute(ctx: DedekindContext) -> float:
    """sum over units a of |S(a, c)|^2."""
    vals = ctx.unit_sum_values()
    return float(np.sum(np.abs(vals) ** 2))


@dataclass(frozen=True)
class PsiTerm:
    """One character's contribution to the closed-form second moment."""

    index: int
    psi: tuple[int, ...]
    l1_sq: float  # |L(1, conj(psi*) chi1)|^2
    l2_sq: float  # |L(1, (psi chi2)*)|^2
    g_sq: float
    term: float

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "psi": list(self.psi),
            "l1_sq": self.l1_sq,
            "l2_sq": self.l2_sq,
            "g_sq": self.g_sq,
            "term": self.term,
        }


@dataclass(frozen=True)
class MomentReport:
    """Both sides of the second-moment identity with the per-character split."""

    q1: int
    q2: int
    chi1: tuple[int, ...]
    chi2: tuple[int, ...]
    c: int
    lhs: float
    rhs: float
    residual: float  # |lhs - rhs| / lhs
    per_psi: tuple[PsiTerm, ...]

    def to_dict(self) -> dict:
        return {
            "context": {
                "q1": self.q1,
                "q2": self.q2,
                "chi1": list(self.chi1),
                "chi2": list(self.chi2),
                "c": self.c,
            },
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "per_psi": [t.to_dict() for t in self.per_psi],
        }


def _closed_terms(ctx: DedekindContext) -> tuple[list[PsiTerm], float]:
    c = ctx.c
    chi1, chi2 = ctx.chi1, ctx.chi2
    par1 = chi1.parity()
    terms: list[PsiTerm] = []
    for i, psi in enumerate(characters(c)):
        if psi.parity() * par1 != -1:
            continue
        psi_star = psi.star()
        l1 = l_one(product(psi_star.conj(), chi1, math.lcm(psi_star.modulus, chi1.modulus))).value
        l2 = l_one(product(psi, chi2, c).star()).value
        g = g_factor(ctx, psi).value
        l1_sq, l2_sq, g_sq = abs(l1) ** 2, abs(l2) ** 2, abs(g) ** 2
        terms.append(PsiTerm(i, psi.exponents, l1_sq, l2_sq, g_sq, l1_sq * l2_sq * g_sq))
    rhs = euler_phi(c) / _PI**4 * sum(t.term for t in terms)
    return terms, rhs


def second_moment_closed(ctx: DedekindContext, allow_extended: bool = False) -> MomentReport:
    """Closed-form second moment, reported next to the brute-force moment.

    `allow_extended=True` skips the hypothesis check and evaluates both sides
    anyway (experimental probe; no identity is asserted outside the
    hypotheses).
    """
    if not allow_extended:
        _require_hypotheses(ctx)
    terms, rhs = _closed_terms(ctx)
    lhs = second_moment_brute(ctx)
    residual = abs(lhs - rhs) / lhs if lhs else abs(rhs)
    return MomentReport(
        ctx.chi1.modulus,
        ctx.chi2.modulus,
        ctx.chi1.exponents,
        ctx.chi2.exponents,
        ctx.c,
        lhs,
        rhs,
        residual,
        tuple(terms),
    )


def walum_lhs(p: int) -> Fraction:
    """Exact second moment of the classical sum at an odd prime: sum_a s(a, p)^2."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return sum((classical_s(a, p) ** 2 for a in range(1, p)), Fraction(0))


def walum_rhs(p: int) -> float:
    """p^2/(pi^4 (p-1)) times the fourth-moment of |L(1, psi)| over odd psi mod p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    total = sum(abs(l_one(psi).value) ** 4 for psi in characters(p) if psi.parity() == -1)
    return p**2 / (_PI**4 * (p - 1)) * total


def nonvanishing_witness(ctx: DedekindContext) -> int:
    """Least unit a with |S(a, c)| > 1e-10 (one exists under the hypotheses)."""
    _require_hypotheses(ctx)
    vals = ctx.unit_sum_values()
    for a, v in zip(ctx.units(), vals):
        if abs(v) > 1e-10:
            return a
    raise IdentityViolation(
        f"no unit a mod {ctx.c} with |S(a, c)| > 1e-10: the nonvanishing "
        "guarantee failed, which points at an implementation bug"
    )


@dataclass(frozen=True)
class SweepRow:
    c: int
    q1: int
    q2: int
    moment: float
    ratio: float  # moment / (q1 c^2)
    slope_running: float  # least-squares slope of log moment vs log c so far


def _moment_for(chi1: DirichletCharacter, chi2: DirichletCharacter, c: int, method: str) -> float:
    ctx = make_context(chi1, chi2, c)
    if method == "brute":
        return second_moment_brute(ctx)
    if method == "closed":
        _require_hypotheses(ctx)
        return _closed_terms(ctx)[1]
    raise ValueError(f"unknown method {method!r}")


def bounds_sweep(
    chi1: DirichletCharacter,
    chi2: DirichletCharacter,
    c_list: list[int],
    method: str = "brute",
) -> tuple[list[SweepRow], float]:
    """Second moment across moduli, with running log-log slope.

    Returns (rows, slope) where slope is the least-squares slope of
    log M2 against log c over the whole sweep (nan with fewer than 2 rows).
    Parallelism is capped by DEDEKIND_THREADS; reduction order is fixed by
    the order of c_list.
    """
    q1, q2 = chi1.modulus, chi2.modulus
    level = q1 * q2
    for c in c_list:
        if c % level:
            raise ValueError(f"c = {c} is not a multiple of q1*q2 = {level}")
    nthreads = _threads()
    if nthreads > 1 and len(c_list) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            moments = list(pool.map(lambda c: _moment_for(chi1, chi2, c, method), c_list))
    else:
        moments = [_moment_for(chi1, chi2, c, method) for c in c_list]
    rows: list[SweepRow] = []
    logs: list[tuple[float, float]] = []
    for c, m2 in zip(c_list, moments):
        logs.append((math.log(c), math.log(m2) if m2 > 0 else float("nan")))
        if len(logs) >= 2:
            xs, ys = zip(*logs)
            slope = float(np.polyfit(xs, ys, 1)[0])
        else:
            slope = float("nan")
        rows.append(SweepRow(c, q1, q2, m2, m2 / (q1 * c * c), slope))
    return rows, (rows[-1].slope_running if rows else float("nan"))


def sweep_csv(rows: list[SweepRow]) -> str:
    """CSV serialization with the fixed header c,q1,q2,moment,ratio,slope_running."""
    lines = ["c,q1,q2,moment,ratio,slope_running"]
    for r in rows:
        lines.append(
            f"{r.c},{r.q1},{r.q2},{r.moment:.15g},{r.ratio:.15g},{r.slope_running:.15g}"
        )
    return "\n".join(lines) + "\n"


def ratio_envelope(q1: int, c: int) -> float:
    """A-priori upper bound on M2/(q1 c^2).

    Chains |L(1, chi)| <= log(modulus) + 2 (partial summation), |tau(chi)| =
    sqrt(conductor), divisor-function bounds on the convolutions in g, and
    the count phi*(e) of characters mod c with conductor e.
    """
    lmax = (math.log(c) + 2.0) ** 4
    total = 0.0
    for e in divisors(c):
        total += phi_star(e) * g_sq_bound(q1, c, e)
    return euler_phi(c) * lmax / (_PI**4 * q1 * c * c) * total
