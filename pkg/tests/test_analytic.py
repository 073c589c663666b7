"""Bernoulli functions, Gauss sums, and L(1, chi) against direct-summation oracles."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from dedekind import analytic as an
from dedekind import chargroup as cg

CHI3 = cg.characters(3)[1]
PI_I = math.pi * 1j


def primitive_chars(q):
    return [ch for ch in cg.characters(q) if ch.is_primitive]


# -- B1 ------------------------------------------------------------------------


def test_b1_examples():
    assert an.b1(0) == 0
    assert an.b1(7) == 0
    assert an.b1(Fraction(1, 3)) == Fraction(-1, 6)
    assert an.b1(Fraction(-1, 3)) == Fraction(1, 6)


def test_b1_odd_and_periodic_exact():
    for den in range(1, 30):
        for num in range(-2 * den, 2 * den + 1):
            x = Fraction(num, den)
            assert an.b1(x + 1) == an.b1(x)
            assert an.b1(-x) == -an.b1(x)
            assert -Fraction(1, 2) < an.b1(x) < Fraction(1, 2)


def test_b1_rejects_float():
    with pytest.raises(TypeError):
        an.b1(0.25)


@pytest.mark.parametrize("k", list(range(1, 101)))
def test_sawtooth_full_period_sums_to_zero(k):
    hs = [h for h in range(1, k + 1) if math.gcd(h, k) == 1][:4]
    for h in hs:
        assert sum(an.b1(Fraction(h * j, k)) for j in range(k)) == 0


# -- Gauss sums -------------------------------------------------------------------


def test_gauss_sum_examples():
    assert an.gauss_sum(cg.principal(1)) == pytest.approx(1)
    assert an.gauss_sum(CHI3) == pytest.approx(complex(0, math.sqrt(3)))


@pytest.mark.parametrize("q", list(range(1, 41)))
def test_gauss_sum_twist_primitive(q):
    """tau(chi, l) = conj(chi)(l) tau(chi) for primitive chi and l coprime to q."""
    for chi in primitive_chars(q):
        t = an.gauss_sum(chi)
        for l in range(1, q + 1):
            if math.gcd(l, q) == 1:
                assert an.gauss_sum(chi, l) == pytest.approx(chi.conj()(l) * t, abs=1e-10)


@pytest.mark.parametrize("q", list(range(1, 101)))
def test_gauss_sum_magnitude(q):
    for chi in primitive_chars(q):
        assert abs(abs(an.gauss_sum(chi)) - math.sqrt(q)) < 1e-9


def test_gauss_sum_all_matches_pointwise():
    for q in (7, 12, 16):
        for chi in cg.characters(q):
            table = an.gauss_sum_all(chi)
            for l in range(q):
                assert complex(table[l]) == pytest.approx(an.gauss_sum(chi, l), abs=1e-10)


def test_gauss_sum_via_primitive_examples():
    # primitive: the divisor sum collapses to the single k = 1 term
    for chi in primitive_chars(5):
        for l in range(5):
            assert an.gauss_sum_via_primitive(chi, l) == pytest.approx(
                chi.conj()(l) * an.gauss_sum(chi), abs=1e-10
            )
    induced = CHI3.lift(12)
    assert an.gauss_sum_via_primitive(induced, 3) == pytest.approx(an.gauss_sum(induced, 3), abs=1e-10)


@pytest.mark.parametrize("d", list(range(2, 61)))
def test_gauss_sum_via_primitive_exhaustive(d):
    for psi in cg.characters(d):
        if psi.is_principal:
            continue
        direct = an.gauss_sum_all(psi)
        for l in range(d):
            assert abs(an.gauss_sum_via_primitive(psi, l) - complex(direct[l])) < 1e-9


def test_gauss_sum_via_primitive_rejects_principal():
    with pytest.raises(ValueError):
        an.gauss_sum_via_primitive(cg.principal(6), 1)


# -- twisted sawtooth ---------------------------------------------------------------


def test_b1_chi_hand_value():
    # chi3(1) B1(1/3) + chi3(2) B1(2/3) = -1/6 - 1/6
    assert an.b1_chi(CHI3, 0) == pytest.approx(-1 / 3, abs=1e-14)


def test_b1_chi_reduces_to_sawtooth_at_modulus_one():
    one = cg.principal(1)
    for x in (Fraction(1, 3), Fraction(7, 5), Fraction(-2, 9)):
        assert an.b1_chi(one, x) == pytest.approx(float(an.b1(x)), abs=1e-15)


def test_b1_chi_periodicity():
    for q in (3, 5, 8, 12):
        for chi in primitive_chars(q):
            for x in (0, Fraction(1, 2), Fraction(5, 7)):
                assert an.b1_chi(chi, x + q) == an.b1_chi(chi, x)


def test_b1_chi_rejects_imprimitive():
    with pytest.raises(ValueError):
        an.b1_chi(CHI3.lift(6), 0)


def test_b1_chi_series_converges():
    target = an.b1_chi(CHI3, 0)
    errs = [abs(an.b1_chi_series(CHI3, 0, L) - target) for L in (10**3, 10**4, 10**5)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-4


def test_b1_chi_series_first_term_odd():
    for q in (3, 4, 5, 7):
        for chi in primitive_chars(q):
            if chi.parity() != -1:
                continue
            expected = -an.gauss_sum(chi.conj()) / PI_I * chi(1)
            assert an.b1_chi_series(chi, 0, 1) == pytest.approx(expected, abs=1e-14)


def test_b1_chi_series_validation():
    with pytest.raises(ValueError):
        an.b1_chi_series(CHI3, 0, 0)
    with pytest.raises(ValueError):
        an.b1_chi_series(CHI3.lift(9), 0, 10)


def test_generalized_vanishing():
    """sum over j mod c, n mod q1 of conj(chi2)(j) conj(chi1)(n) B1(n/q1 + a j/c) = 0."""
    cases = [(CHI3, CHI3, 9), (CHI3, CHI3, 18), (CHI3.lift(6), cg.principal(4), 12)]
    for chi1, chi2, c in cases:
        q1 = chi1.modulus
        for a in (1, 2, 5):
            total = 0j
            for j in range(c):
                w2 = chi2.conj()(j)
                if w2 == 0:
                    continue
                for n in range(q1):
                    w1 = chi1.conj()(n)
                    if w1 == 0:
                        continue
                    total += w2 * w1 * float(an.b1(Fraction(n, q1) + Fraction(a * j, c)))
            assert abs(total) < 1e-10


# -- L(1, chi) ------------------------------------------------------------------------


def l_series_partial(chi, N):
    """Partial sum of sum chi(n)/n (independent oracle; O(1/N) tail for odd chi)."""
    ns = np.arange(1, N + 1)
    vals = chi.values()[ns % chi.modulus]
    return complex(np.sum(vals / ns))


def test_l_one_chi3():
    val = an.l_one(CHI3).value
    assert val == pytest.approx(math.pi / (3 * math.sqrt(3)), abs=1e-12)
    assert val == pytest.approx(l_series_partial(CHI3, 3 * 10**5), abs=1e-4)


def test_l_one_euler_factors():
    lifted = CHI3.lift(15)
    expected = (math.pi / (3 * math.sqrt(3))) * (1 - complex(CHI3(5)) / 5)
    val = an.l_one(lifted).value
    assert val == pytest.approx(expected, abs=1e-12)
    assert val == pytest.approx(l_series_partial(lifted, 3 * 10**5), abs=1e-4)
    assert an.l_one(lifted).modulus == 15


def test_l_one_conjugation_symmetry():
    for q in range(3, 31):
        for chi in cg.characters(q):
            if chi.parity() != -1:
                continue
            assert an.l_one(chi.conj()).value == pytest.approx(
                an.l_one(chi).value.conjugate(), abs=1e-12
            )


def test_l_one_nonzero_for_odd():
    for q in range(3, 41):
        for chi in cg.characters(q):
            if chi.parity() == -1:
                assert abs(an.l_one(chi).value) > 1e-3


def test_l_one_rejects_even():
    with pytest.raises(ValueError):
        an.l_one(cg.principal(5))
    quad5 = [ch for ch in cg.characters(5) if ch.parity() == 1 and not ch.is_principal][0]
    with pytest.raises(ValueError):
        an.l_one(quad5)


@pytest.mark.parametrize("q", list(range(1, 101)))
def test_b1chi_l_value_consistency(q):
    """b1_chi(chi, 0) = -tau(conj(chi))/(pi i) L(1, chi) for odd primitive chi."""
    for chi in primitive_chars(q):
        if chi.parity() != -1:
            continue
        lhs = an.b1_chi(chi, 0)
        rhs = -an.gauss_sum(chi.conj()) / PI_I * an.l_one(chi).value
        assert abs(lhs - rhs) < 1e-10


# -- character-weighted sawtooth sums ----------------------------------------------------


def test_char_sum_b1_even_is_zero():
    assert an.char_sum_b1(cg.principal(6), 12) == 0
    quad5 = [ch for ch in cg.characters(5) if ch.parity() == 1 and not ch.is_principal][0]
    assert an.char_sum_b1(quad5, 15) == 0
    assert abs(an.char_sum_b1_brute(quad5, 15)) < 1e-12


def test_char_sum_b1_chi3():
    assert an.char_sum_b1(CHI3, 3) == pytest.approx(-1 / 3, abs=1e-12)
    assert an.char_sum_b1_brute(CHI3, 3) == pytest.approx(-1 / 3, abs=1e-12)


@pytest.mark.parametrize("c", list(range(1, 61)))
def test_char_sum_b1_closed_vs_brute(c):
    for d in cg.divisors(c):
        for chi in cg.characters(d):
            assert abs(an.char_sum_b1(chi, c) - an.char_sum_b1_brute(chi, c)) < 1e-9


def test_char_sum_b1_rejects_bad_modulus():
    with pytest.raises(ValueError):
        an.char_sum_b1(CHI3, 10)


def test_char_sum_b1chi_even_product_zero():
    # chi3 odd, psi odd => product even => closed form 0
    chi4 = [ch for ch in cg.characters(4) if not ch.is_principal][0]
    assert an.char_sum_b1chi(chi4, CHI3, 12) == 0
    assert abs(an.char_sum_b1chi_brute(chi4, CHI3, 12)) < 1e-12


def test_char_sum_b1chi_degenerate_psi():
    one = cg.principal(1)
    expected = -an.gauss_sum(CHI3) / PI_I * an.l_one(CHI3).value
    assert an.char_sum_b1chi(one, CHI3.conj(), 3) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("c", list(range(1, 49)))
def test_char_sum_b1chi_closed_vs_brute(c):
    for d in cg.divisors(c):
        for q in cg.divisors(c):
            for chi in primitive_chars(q):
                for psi in cg.characters(d):
                    closed = an.char_sum_b1chi(psi, chi, c)
                    brute = an.char_sum_b1chi_brute(psi, chi, c)
                    assert abs(closed - brute) < 1e-9
