"""Kernel tests: exact rationals, Laurent windows, ring laws."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qident.errors import OrderInsufficient, ZeroLeadingCoefficient
from qident.series import (
    LaurentSeries as LS,
    Mismatch,
    QMonomial,
    rescale_exponents,
    series_add,
    series_compare,
    series_invert,
    series_mul,
)


def poly(d, order=None):
    return LS.from_pairs(d, order)


# ---------------------------------------------------------------- addition

def test_add_cancellation():
    assert series_add(poly({0: 1, 1: -1}), poly({1: 1})) == LS.one()


def test_add_identity():
    s = poly({-2: F(1, 3), 0: 5, 4: -2}, order=9)
    assert series_add(LS.zero(9), s) == s
    assert series_add(s, LS.zero()) == s


def test_add_laurent_window_merge():
    s = series_add(poly({-1: 1}), poly({0: 1}))
    assert s.min_deg == -1
    assert list(s.terms()) == [(-1, F(1)), (0, F(1))]


def test_add_order_is_min():
    a = poly({0: 1}, order=10)
    b = poly({0: 1}, order=6)
    assert series_add(a, b).order == 6


# ------------------------------------------------------------ multiplication

def test_mul_difference_of_squares():
    assert series_mul(poly({0: 1, 1: -1}), poly({0: 1, 1: 1})) == poly({0: 1, 2: -1})


def test_mul_identity():
    s = poly({-3: 2, 0: F(7, 2)}, order=12)
    assert series_mul(s, LS.one()) == s


def test_mul_geometric_prefix():
    # (1-q) * (1 + q + ... + q^N) == 1 mod q^{N+1}; oracle: direct windowed sum
    N = 17
    geo = poly({e: 1 for e in range(N + 1)}, order=N)
    prod = series_mul(poly({0: 1, 1: -1}), geo)
    assert prod.order == N
    assert list(prod.terms()) == [(0, F(1))]


def test_mul_order_bookkeeping():
    a = poly({2: 1}, order=10)        # q^2 known to 10
    b = poly({3: 1}, order=20)        # q^3 known to 20
    assert series_mul(a, b).order == 13   # min(10+3, 20+2)


# ----------------------------------------------------------------- inversion

def test_invert_one():
    assert series_invert(LS.one(15), 15) == LS.one(15)


def test_invert_geometric():
    inv = series_invert(poly({0: 1, 1: -1}), 30)
    assert inv == poly({e: 1 for e in range(31)}, order=30)
    assert series_mul(poly({0: 1, 1: -1}), inv).compare(LS.one(30), 30) is None


def test_invert_shifted():
    a = poly({1: 1, 2: -1}, order=21)     # q(1-q)
    inv = series_invert(a)
    assert inv.min_deg == -1
    prod = series_mul(a, inv)
    assert prod.compare(LS.one(prod.order), prod.order) is None


def test_invert_zero_leading():
    with pytest.raises(ZeroLeadingCoefficient):
        series_invert(LS.zero(10), 10)


# ---------------------------------------------------------------- comparison

def test_compare_equal():
    a = poly({0: 1, 1: -1}, order=10)
    assert series_compare(a, poly({0: 1, 1: -1}, order=10), 10) is None


def test_compare_first_mismatch():
    r = series_compare(LS.one(10), poly({0: 1, 7: 1}, order=10), 10)
    assert r == Mismatch(7, F(0), F(1))


def test_compare_mismatch_beyond_window():
    assert series_compare(LS.one(5), poly({0: 1, 7: 1}, order=7).truncate(5), 5) is None


def test_compare_order_insufficient():
    with pytest.raises(OrderInsufficient):
        series_compare(LS.one(5), LS.one(10), 8)


# ------------------------------------------------------------------ rescaling

def test_rescale_basic():
    assert rescale_exponents(poly({0: 1, 1: -1}), 2) == poly({0: 1, 2: -1})


def test_rescale_identity():
    s = poly({0: 1, 3: 4}, order=9)
    assert rescale_exponents(s, 1) == s


def test_rescale_laurent():
    assert rescale_exponents(poly({-1: 1, 1: 1}), 3) == poly({-3: 1, 3: 1})


def test_rescale_order_multiplied():
    assert rescale_exponents(poly({0: 1}, order=7), 3).order == 21


# ---------------------------------------------------------------- invariants

COEFS = [F(0), F(1), F(-1), F(2), F(-3), F(1, 2), F(-2, 3), F(5, 7)]


def rand_series(rng, order, allow_zero=True):
    lo = rng.randint(-3, 2)
    coeffs = [rng.choice(COEFS) for _ in range(order - lo + 1)]
    s = LS._make(lo, coeffs, order)
    if not allow_zero and s.is_zero:
        return series_add(s, LS.one(order))
    return s


def assert_agree(a, b, up_to=None):
    if up_to is None:
        up_to = int(min(a.eff_order(), b.eff_order()))
    assert a.compare(b, up_to) is None


def test_ring_laws_randomized():
    rng = random.Random(20260808)
    for _ in range(40):
        N = rng.randint(6, 14)
        a, b, c = (rand_series(rng, N) for _ in range(3))
        assert_agree(series_add(a, b), series_add(b, a))
        assert_agree(series_mul(a, b), series_mul(b, a))
        assert_agree(series_add(series_add(a, b), c), series_add(a, series_add(b, c)))
        assert_agree(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)))
        assert_agree(series_mul(a, series_add(b, c)),
                     series_add(series_mul(a, b), series_mul(a, c)))


def test_invert_roundtrip_randomized():
    rng = random.Random(7)
    for _ in range(50):
        N = rng.randint(5, 12)
        a = rand_series(rng, N, allow_zero=False)
        prod = series_mul(a, series_invert(a))
        assert_agree(prod, LS.one(prod.order))


def test_truncation_soundness_randomized():
    # computing at order N then truncating to M equals computing at order M
    rng = random.Random(99)
    for _ in range(40):
        N = rng.randint(8, 14)
        M = rng.randint(3, N - 1)
        a, b = rand_series(rng, N), rand_series(rng, N)
        hi = series_mul(a, b)
        lo = series_mul(a.truncate(M), b.truncate(M))
        assert_agree(hi.truncate(lo.order if lo.order < M else M),
                     lo.truncate(lo.order if lo.order < M else M))


def test_truncated_ops_match_exact_expansion():
    # differential fuzz: run ops on truncated copies of exact polynomials
    # and demand every coefficient inside the claimed window equals the
    # exact (untruncated) result
    rng = random.Random(2468)
    for _ in range(60):
        deg_a, deg_b = rng.randint(0, 6), rng.randint(0, 6)
        lo_a, lo_b = rng.randint(-3, 0), rng.randint(-3, 0)
        pa = {lo_a + i: rng.choice(COEFS) for i in range(deg_a + 1)}
        pb = {lo_b + i: rng.choice(COEFS) for i in range(deg_b + 1)}
        exact_a, exact_b = poly(pa), poly(pb)
        na, nb = rng.randint(2, 8), rng.randint(2, 8)
        ta = exact_a.truncate(na) if not exact_a.is_zero else LS.zero(na)
        tb = exact_b.truncate(nb) if not exact_b.is_zero else LS.zero(nb)
        true = series_mul(exact_a, exact_b)          # full expansion
        got = series_mul(ta, tb)
        if got.order is not None:
            for e in range(got.min_deg, got.order + 1):
                assert got.coeff(e) == true.coeff(e), (pa, pb, e)
        # binomial fast paths agree with the generic product
        c, k = rng.choice(COEFS[1:]), rng.randint(-2, 3)
        binom = LS.from_pairs([(0, F(1)), (k, c)])   # accumulates at k == 0
        via_fast = ta.mul_binomial(c, k)
        via_mul = series_mul(ta, binom)
        common = min(via_fast.eff_order(), via_mul.eff_order())
        assert common >= min(na, na + k)             # no precision lost
        assert via_fast.compare(via_mul, int(common)) is None
        if not (k == 0 and c == -1):                 # skip the zero divisor
            back = via_fast.div_binomial(c, k)
            up = min(int(back.eff_order()), na)
            assert back.compare(ta, up) is None


@given(st.fractions(max_denominator=10 ** 6), st.fractions(max_denominator=10 ** 6))
@settings(max_examples=60, deadline=None)
def test_rational_arithmetic_exact(p, r):
    # the stored normal form reconstructs the mathematical value
    s = p + r
    assert s.numerator * p.denominator * r.denominator == \
        (p.numerator * r.denominator + r.numerator * p.denominator) * s.denominator
    assert s.denominator > 0
    from math import gcd
    assert gcd(s.numerator, s.denominator) == 1


@given(st.integers(-5, 5), st.integers(-5, 5),
       st.fractions(max_denominator=100), st.fractions(max_denominator=100))
@settings(max_examples=60, deadline=None)
def test_monomial_closure(e1, e2, c1, c2):
    m1, m2 = QMonomial.of(c1, e1), QMonomial.of(c2, e2)
    prod = m1 * m2
    assert isinstance(prod, QMonomial)
    assert prod.coef == c1 * c2
    if c1 and c2:
        assert prod.exp == e1 + e2
        quot = m1 / m2
        assert quot.coef == c1 / c2 and quot.exp == e1 - e2


def test_monomial_to_series_exact():
    m = QMonomial.of(F(-3, 4), 5)
    s = m.to_series()
    assert s.is_exact and list(s.terms()) == [(5, F(-3, 4))]


def test_zero_series_canonical():
    z = LS.from_pairs({3: 0, 5: 0}, order=9)
    assert z.is_zero and z.coeffs == ()
    assert z.min_deg == 10  # window exhausted


def test_scale_and_binomials():
    s = LS.one(10)
    g = s.div_binomial(F(-1), 1)       # 1/(1-q)
    assert g == poly({e: 1 for e in range(11)}, order=10)
    back = g.mul_binomial(F(-1), 1)
    assert_agree(back, LS.one(10), 10)
    shifted = s.scale(F(2), -2)
    assert shifted.min_deg == -2 and shifted.order == 8
