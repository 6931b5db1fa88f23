"""Well-poised pair machinery: the two-parameter alpha/beta relation, the
iterable chain step, the infinite transform it implies, the central
partial-sum engine, telescoping alpha builders, and the finite multi-base
telescoping identity.

All operations here run under the exact strategy: parameter values are
monomials c * q^e or plain rationals, alpha sequences produce values per
index, and every output is a truncated Laurent series at the caller's
working order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple

from .errors import DegenerateDenominator, ValuationStall
from .qfunc import (
    PochTower,
    TermGenerator,
    Value,
    as_monomial,
    poch_dip,
    poch_finite,
    poch_infinite,
    sum_exact,
    vwp_factor,
)
from .series import DEFAULT_ORDER, LaurentSeries, QMonomial

_Q = QMonomial.of(1, 1)

AlphaFn = Callable[[int, int], Value]   # (n, order) -> value


def _mul_value(s: LaurentSeries, v: Value, cap: Optional[int] = None) -> LaurentSeries:
    """Multiply a series by an alpha-style value, cheap paths first."""
    if isinstance(v, (Fraction, int)):
        return s.scale(Fraction(v))
    if isinstance(v, QMonomial):
        return s.scale(v.coef, v.exp)
    return s.mul(v, cap=cap)


def _value_sub(x: Value, y: Value, order: int) -> Value:
    if isinstance(x, (Fraction, int)) and isinstance(y, (Fraction, int)):
        return Fraction(x) - Fraction(y)
    return LaurentSeries.coerce(x, None if _exactable(x) else order) - \
        LaurentSeries.coerce(y, None if _exactable(y) else order)


def _exactable(v: Value) -> bool:
    return not isinstance(v, LaurentSeries) or v.is_exact


class AlphaSequence:
    """A re-entrant sequence n -> value feeding the summation engines.

    `support`, when set, promises the value is zero for n > support (an
    optimization and a termination certificate). The provenance tag records
    how the sequence arose (explicit formula vs telescoping difference).
    """

    def __init__(self, fn: AlphaFn, provenance: str = "explicit",
                 support: Optional[int] = None):
        self.fn = fn
        self.provenance = provenance
        self.support = support

    def value(self, n: int, order: int) -> Value:
        if self.support is not None and n > self.support:
            return Fraction(0)
        return self.fn(n, order)

    @staticmethod
    def from_values(values, provenance: str = "explicit") -> "AlphaSequence":
        vals = list(values)
        return AlphaSequence(lambda n, order: vals[n] if n < len(vals) else Fraction(0),
                             provenance, support=len(vals) - 1)


def unit_alpha() -> AlphaSequence:
    """alpha_0 = 1 and nothing else: the canonical seed sequence."""
    return AlphaSequence.from_values([Fraction(1)])


def partial_sums(alpha: AlphaSequence, n: int, order: int) -> LaurentSeries:
    """beta_n = sum of alpha_0..alpha_n, as a series at `order`."""
    acc = LaurentSeries.zero(order)
    for j in range(n + 1):
        acc = acc + LaurentSeries.coerce(alpha.value(j, order), order)
    return acc


@dataclass(frozen=True)
class WPPair:
    """A pair (alpha, a, k) subject to the defining beta relation."""

    alpha: AlphaSequence
    a: Value
    k: Value


@dataclass(frozen=True)
class ChainParams:
    """Step parameters (rho1, rho2, target k); c is always derived."""

    rho1: QMonomial
    rho2: QMonomial
    k: QMonomial

    def c_for(self, a: Value) -> QMonomial:
        am = as_monomial(a)
        if am is None or am.is_zero:
            raise DegenerateDenominator("chain step needs a nonzero monomial a")
        return self.k * self.rho1 * self.rho2 / (am * _Q)


def _require_monomial(v: Value, what: str) -> QMonomial:
    m = as_monomial(v)
    if m is None:
        raise TypeError(f"{what} must be a monomial-like value")
    return m


def wp_beta(pair: WPPair, n: int, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """beta_n from the defining relation

        beta_n = sum_{j<=n} (k/a)_{n-j} (k)_{n+j} / ((q)_{n-j} (aq)_{n+j})
                 * alpha_j.
    """
    a = _require_monomial(pair.a, "a")
    k = _require_monomial(pair.k, "k")
    if a.is_zero:
        raise DegenerateDenominator("a = 0 makes (aq)_n collapse")
    wo = order + poch_dip(k / a, _Q) + poch_dip(k, _Q)
    ka = PochTower(k / a, _Q, wo)
    kt = PochTower(k, _Q, wo)
    inv_q = PochTower(_Q, _Q, wo, invert=True)
    inv_aq = PochTower(a * _Q, _Q, wo, invert=True)
    jmax = n
    if pair.alpha.support is not None:
        jmax = min(n, pair.alpha.support)
    acc = LaurentSeries.zero(order)
    for j in range(jmax + 1):
        av = pair.alpha.value(j, order)
        if isinstance(av, (Fraction, int)) and not av:
            continue
        w = ka.upto(n - j) * kt.upto(n + j)
        w = w * inv_q.upto(n - j) * inv_aq.upto(n + j)
        acc = acc + _mul_value(w, av).truncate(order)
    return acc


def wp_chain_step(pair: WPPair, params: ChainParams,
                  order: int = DEFAULT_ORDER
                  ) -> Tuple[WPPair, Callable[[int], LaurentSeries]]:
    """One chain step: a new pair (alpha', a, k) plus its closed-form beta'.

    The input alpha is taken as the seed sequence at parameters (a, c) with
    c = k rho1 rho2 / (a q); the matching beta_j(a, c) values are recomputed
    from the defining relation. The weight product (k rho1/a, k rho2/a)_j
    inside the sum is indexed by the summation index (the commonly printed
    index n there fails the defining relation; closure tests pin this down).
    """
    a = _require_monomial(pair.a, "a")
    r1, r2, k = params.rho1, params.rho2, params.k
    c = params.c_for(a)
    if c.is_one:
        raise DegenerateDenominator("derived c = 1 degenerates the step")
    kc = k / c if not k.is_zero else k   # equals a q / (rho1 rho2)
    for name, arg in (("aq/rho1", a * _Q / r1), ("aq/rho2", a * _Q / r2),
                      ("k*rho1/a", k * r1 / a), ("k*rho2/a", k * r2 / a),
                      ("qc", _Q * c)):
        if arg.is_one:
            raise DegenerateDenominator(f"{name} = 1 at this specialization")

    base_pair = WPPair(pair.alpha, pair.a, c)

    def alpha_prime(n: int, wo: int) -> Value:
        num = poch_finite(r1, _Q, n) * poch_finite(r2, _Q, n)
        den = poch_finite(a * _Q / r1, _Q, n) * poch_finite(a * _Q / r2, _Q, n)
        ratio = num.mul(den.invert(wo), cap=wo)
        ratio = ratio.scale(kc.coef ** n, kc.exp * n)
        return _mul_value(ratio, pair.alpha.value(n, wo), cap=wo)

    def beta_prime(n: int, wo: int = order) -> LaurentSeries:
        bwo = wo + sum(poch_dip(v, _Q) for v in (kc, k, r1, r2,
                                                 k * r1 / a, k * r2 / a))
        num = poch_finite(k * r1 / a, _Q, n) * poch_finite(k * r2 / a, _Q, n)
        den = poch_finite(a * _Q / r1, _Q, n) * poch_finite(a * _Q / r2, _Q, n)
        outer = num.mul(den.invert(bwo), cap=bwo)
        kc_t = PochTower(kc, _Q, bwo)
        k_t = PochTower(k, _Q, bwo)
        r1_t = PochTower(r1, _Q, bwo)
        r2_t = PochTower(r2, _Q, bwo)
        inv_kr1 = PochTower(k * r1 / a, _Q, bwo, invert=True)
        inv_kr2 = PochTower(k * r2 / a, _Q, bwo, invert=True)
        inv_q = PochTower(_Q, _Q, bwo, invert=True)
        inv_qc = PochTower(_Q * c, _Q, bwo, invert=True)
        acc = LaurentSeries.zero(wo)
        for j in range(n + 1):
            t = vwp_factor(c, j, bwo)
            t = t * r1_t.upto(j) * r2_t.upto(j)
            t = t * inv_kr1.upto(j) * inv_kr2.upto(j)
            t = t * kc_t.upto(n - j) * k_t.upto(n + j)
            t = t * inv_q.upto(n - j) * inv_qc.upto(n + j)
            t = t.scale(kc.coef ** j, kc.exp * j)
            bj = wp_beta(base_pair, j, bwo)
            acc = acc + (t * bj).truncate(wo)
        return outer.mul(acc, cap=wo)

    new_alpha = AlphaSequence(alpha_prime, provenance="chained",
                              support=pair.alpha.support)
    return WPPair(new_alpha, pair.a, params.k), beta_prime


def thm_transform_sides(pair: WPPair, rho1: QMonomial, rho2: QMonomial,
                        order: int = DEFAULT_ORDER
                        ) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of the infinite well-poised transform

      sum vwp(k, n) (rho1, rho2)_n / (kq/rho1, kq/rho2)_n z^n beta_n
        = [ (kq, kq/rho1rho2, aq/rho1, aq/rho2)_inf /
            (kq/rho1, kq/rho2, z, aq)_inf ]
          * sum (rho1, rho2)_n / (aq/rho1, aq/rho2)_n z^n alpha_n,

    with z = aq/(rho1 rho2). k = 0 reduces it to the classical transform
    for a pair relative to a.
    """
    a = _require_monomial(pair.a, "a")
    k = _require_monomial(pair.k, "k")
    z = a * _Q / (rho1 * rho2)
    num_args = [k * _Q, k * _Q / (rho1 * rho2), a * _Q / rho1, a * _Q / rho2]
    den_args = [k * _Q / rho1, k * _Q / rho2, z, a * _Q]
    for arg in num_args + den_args:
        if arg.is_one:
            raise DegenerateDenominator(f"infinite product at {arg} vanishes")
    if z.exp < 1:
        raise ValuationStall("series argument aq/(rho1 rho2) has no "
                             "valuation growth")

    wo = order + poch_dip(k / a, _Q) + poch_dip(k, _Q) + \
        poch_dip(rho1, _Q) + poch_dip(rho2, _Q)
    r1_t = PochTower(rho1, _Q, wo)
    r2_t = PochTower(rho2, _Q, wo)
    inv_kq1 = PochTower(k * _Q / rho1, _Q, wo, invert=True)
    inv_kq2 = PochTower(k * _Q / rho2, _Q, wo, invert=True)

    def lhs_term(n: int) -> LaurentSeries:
        t = vwp_factor(k, n, wo)
        t = t * r1_t.upto(n) * r2_t.upto(n)
        t = t * inv_kq1.upto(n) * inv_kq2.upto(n)
        t = t * wp_beta(pair, n, wo)
        return t.scale(z.coef ** n, z.exp * n).truncate(order)

    lhs = sum_exact(TermGenerator(lhs_term), order)

    pref = LaurentSeries.one(order)
    for arg in num_args:
        pref = pref.mul(poch_infinite(arg, _Q, order), cap=order)
    den = LaurentSeries.one(order)
    for arg in den_args:
        den = den.mul(poch_infinite(arg, _Q, order), cap=order)
    pref = pref.mul(den.invert(order), cap=order)

    inv_aq1 = PochTower(a * _Q / rho1, _Q, wo, invert=True)
    inv_aq2 = PochTower(a * _Q / rho2, _Q, wo, invert=True)

    def rhs_term(n: int) -> LaurentSeries:
        t = r1_t.upto(n) * r2_t.upto(n)
        t = t * inv_aq1.upto(n) * inv_aq2.upto(n)
        t = _mul_value(t, pair.alpha.value(n, order))
        return t.scale(z.coef ** n, z.exp * n).truncate(order)

    rhs_sum = sum_exact(TermGenerator(rhs_term), order)
    return lhs, pref.mul(rhs_sum, cap=order)


def cor_sides(alpha: AlphaSequence, x: QMonomial, y: QMonomial, z: QMonomial,
              order: int = DEFAULT_ORDER) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of the central partial-sum transform

      sum vwp(xyz, n) (y, z)_n x^n beta_n / (qxy, qxz)_n
        = (1-xy)(1-xz) / ((1-x)(1-xyz))
          * sum (y, z)_n x^n alpha_n / (xy, xz)_n,

    with beta_n the partial sums of alpha.
    """
    k = x * y * z
    if x.is_one or k.is_one or (x * y).is_one or (x * z).is_one:
        raise DegenerateDenominator("prefactor vanishes at this specialization")
    if x.exp < 1 and not x.is_zero:
        raise ValuationStall("series argument x has no valuation growth")

    wo = order + poch_dip(y, _Q) + poch_dip(z, _Q)
    y_t = PochTower(y, _Q, wo)
    z_t = PochTower(z, _Q, wo)
    inv_qxy = PochTower(_Q * x * y, _Q, wo, invert=True)
    inv_qxz = PochTower(_Q * x * z, _Q, wo, invert=True)

    beta_cache = [LaurentSeries.coerce(alpha.value(0, wo), wo)]

    def beta(n: int) -> LaurentSeries:
        while len(beta_cache) <= n:
            m = len(beta_cache)
            beta_cache.append(
                beta_cache[-1] + LaurentSeries.coerce(alpha.value(m, wo), wo))
        return beta_cache[n]

    def lhs_term(n: int) -> LaurentSeries:
        t = vwp_factor(k, n, wo)
        t = t * y_t.upto(n) * z_t.upto(n)
        t = t * inv_qxy.upto(n) * inv_qxz.upto(n)
        t = t * beta(n)
        return t.scale(x.coef ** n, x.exp * n).truncate(order)

    lhs = sum_exact(TermGenerator(lhs_term), order)

    pref = LaurentSeries.one(order)
    pref = pref.mul_binomial(-x.coef * y.coef, x.exp + y.exp)
    pref = pref.mul_binomial(-x.coef * z.coef, x.exp + z.exp)
    pref = pref.div_binomial(-x.coef, x.exp)
    pref = pref.div_binomial(-k.coef, k.exp)

    inv_xy = PochTower(x * y, _Q, wo, invert=True)
    inv_xz = PochTower(x * z, _Q, wo, invert=True)

    def rhs_term(n: int) -> LaurentSeries:
        t = y_t.upto(n) * z_t.upto(n)
        t = t * inv_xy.upto(n) * inv_xz.upto(n)
        t = _mul_value(t, alpha.value(n, wo))
        return t.scale(x.coef ** n, x.exp * n).truncate(order)

    rhs = pref.mul(sum_exact(TermGenerator(rhs_term), order), cap=order)
    return lhs, rhs


def telescope_alpha(t: AlphaFn) -> AlphaSequence:
    """alpha_0 = t_0 and alpha_n = t_n - t_{n-1}: partial sums recover t."""

    def fn(n: int, order: int) -> Value:
        if n == 0:
            return t(0, order)
        return _value_sub(t(n, order), t(n - 1, order), order)

    return AlphaSequence(fn, provenance="telescoped")


def subbarao_verma_sides(n: int, a: Value, b: Value, c: Value,
                         p: QMonomial, P: QMonomial, Q: QMonomial,
                         R: QMonomial, order: int = DEFAULT_ORDER
                         ) -> Tuple[LaurentSeries, LaurentSeries]:
    """The finite multi-base telescoping identity: for every n >= 0 the sum

      sum_{j<=n} [four linear factors at index j] / [same at 0]
                 * (a;p^2)_j (b;P^2)_j (c;R^2)_j (a/bc;Q^2)_j * R^{2j}
                   / ((PQR/p;PQR/p)_j (apPQ/cR;pPQ/R)_j
                      (apQR/bP;pQR/P)_j (bcpPR/Q;pPR/Q)_j)

    equals the closed product with every numerator argument advanced by the
    square of its base. Both sides are returned for comparison.
    """
    am, bm, cm = (_require_monomial(v, w) for v, w in
                  ((a, "a"), (b, "b"), (c, "c")))
    for name, val in (("1-a", am), ("1-b", bm)):
        if val.is_one:
            raise DegenerateDenominator(f"{name} vanishes")
    if cm.is_zero:
        raise DegenerateDenominator("c = 0 collapses 1 - 1/c")
    inv_c = QMonomial.of(1) / cm
    ratio = am / (bm * cm)
    if inv_c.is_one or ratio.is_one:
        raise DegenerateDenominator("a constant denominator factor vanishes")

    pqr_p = P * Q * R / p
    ppq_r = p * P * Q / R
    pqr_P = p * Q * R / P
    ppr_q = p * P * R / Q
    num_specs = [(am, p ** 2), (bm, P ** 2), (cm, R ** 2), (ratio, Q ** 2)]
    den_specs = [(pqr_p, pqr_p), (am * ppq_r / cm, ppq_r),
                 (am * pqr_P / bm, pqr_P), (bm * cm * ppr_q, ppr_q)]

    combo = p * P * Q * R
    combos = [(am, combo), (bm, p * P / (Q * R)), (inv_c, P * Q / (p * R)),
              (ratio, p * Q / (P * R))]

    def linear_dip(j: int) -> int:
        return sum(max(0, -(val.exp + bcomb.exp * j)) for val, bcomb in combos)

    # Laurent headroom: the four linear factors can dip below degree zero,
    # deepest at the last index; numerator Pochhammers may dip too.
    head = linear_dip(n) + sum(poch_dip(av, base) for av, base in num_specs)
    wo = order + head

    scalars = LaurentSeries.one(wo)
    for val in (am, bm, inv_c, ratio):
        scalars = scalars.div_binomial(-val.coef, val.exp)

    num_t = [PochTower(av, base, wo) for av, base in num_specs]
    den_t = [PochTower(av, base, wo, invert=True) for av, base in den_specs]

    def term(j: int) -> LaurentSeries:
        t = scalars
        for val, bcomb in combos:
            t = t.mul_binomial(-val.coef * bcomb.coef ** j,
                               val.exp + bcomb.exp * j)
        for tw in num_t:
            t = t * tw.upto(j)
        for tw in den_t:
            t = t * tw.upto(j)
        return t.scale(R.coef ** (2 * j), 2 * R.exp * j)

    lhs = LaurentSeries.zero(order)
    for j in range(n + 1):
        lhs = lhs + term(j).truncate(order)

    rhs = LaurentSeries.one(order)
    for av, base in num_specs:
        rhs = rhs.mul(poch_finite(av * base, base, n), cap=order)
    for av, base in den_specs:
        den = poch_finite(av, base, n)
        rhs = rhs.mul(den.invert(order), cap=order)
    return lhs, rhs
