"""Evaluation contexts for identity-side builders.

A catalog identity is coded once against this small algebra and can then
run under two strategies:

  * ExactCtx -- truncated Laurent series over exact rationals, in a
    working variable t with q = t^d (d = 2 realizes half-integer
    q-exponents);
  * NumericCtx -- high-precision decimals at a sampled rational q (for
    d = 2 the sampler supplies the d-th root of q directly, so fractional
    q-powers stay exact).

Both expose the same operations: rational constants, q-powers, finite and
infinite Pochhammer products (cached incrementally), the very-well-poised
factor, and a tail-aware summation.
"""

from __future__ import annotations

import decimal
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from .errors import DegenerateDenominator, DegenerateVWP, NonTruncatable
from .qfunc import (
    NUMERIC_PRECISION,
    NUMERIC_TOL,
    NumericTermGenerator,
    PochTower,
    TermGenerator,
    as_monomial,
    poch_infinite,
    sum_exact,
    sum_numeric,
    vwp_factor,
)
from .series import LaurentSeries, QMonomial


class ExactCtx:
    """Exact strategy: all values are rationals, monomials c*t^e, or
    truncated Laurent series in t at a fixed working order.

    `headroom` is extra window above the comparison target, consumed by
    negative monomial powers inside summands (Laurent dips); sides are
    compared at `target`.
    """

    mode = "exact"

    def __init__(self, order: int, denom: int = 1, headroom: int = 4):
        self.denom = denom
        self.target = order * denom         # comparison order in t units
        self.order = self.target + headroom  # construction order
        self.q = QMonomial.of(1, denom)     # q itself
        self._towers: Dict = {}

    # -- values ---------------------------------------------------------

    def one(self):
        return LaurentSeries.one(self.order)

    def num(self, x):
        return Fraction(x)

    def qpow(self, e) -> QMonomial:
        """q^e for rational e; e*denom must be integral."""
        te = Fraction(e) * self.denom
        if te.denominator != 1:
            raise ValueError(f"exponent {e} not representable at denom "
                             f"{self.denom}")
        return QMonomial.of(1, int(te))

    # -- arithmetic ------------------------------------------------------

    def _is_scalar(self, v) -> bool:
        return isinstance(v, (Fraction, int, QMonomial))

    def mul(self, *vals):
        acc = None
        series_parts = []
        for v in vals:
            if self._is_scalar(v):
                m = as_monomial(v)
                acc = m if acc is None else acc * m
            else:
                series_parts.append(v)
        if not series_parts:
            return acc if acc is not None else QMonomial.of(1)
        out = series_parts[0]
        for s in series_parts[1:]:
            out = out * s
        if acc is not None and not acc.is_one:
            out = out.scale(acc.coef, acc.exp) if not acc.is_zero else \
                LaurentSeries.zero(self.order)
        return out

    def add(self, u, v):
        return LaurentSeries.coerce(u, self.order) + \
            LaurentSeries.coerce(v, self.order)

    def sub(self, u, v):
        return LaurentSeries.coerce(u, self.order) - \
            LaurentSeries.coerce(v, self.order)

    def neg(self, v):
        if isinstance(v, (Fraction, int)):
            return -Fraction(v)
        if isinstance(v, QMonomial):
            return -v
        return -v

    def inv(self, v):
        if isinstance(v, (Fraction, int)):
            if not v:
                raise DegenerateDenominator("division by zero")
            return 1 / Fraction(v)
        if isinstance(v, QMonomial):
            if v.is_zero:
                raise DegenerateDenominator("division by zero")
            return QMonomial.of(1) / v
        return v.invert(self.order)

    def div(self, u, v):
        return self.mul(u, self.inv(v))

    def pow_int(self, v, k: int):
        if isinstance(v, (Fraction, int)):
            return Fraction(v) ** k
        if isinstance(v, QMonomial):
            return v ** k
        raise TypeError("series powers are not needed by any record")

    # -- q machinery -----------------------------------------------------

    def _tower(self, a, base, invert: bool) -> PochTower:
        am = as_monomial(a)
        bm = as_monomial(base)
        if am is None or bm is None:
            raise TypeError("Pochhammer arguments must be monomial-like")
        key = (am, bm, invert)
        t = self._towers.get(key)
        if t is None:
            t = PochTower(am, bm, self.order, invert=invert)
            self._towers[key] = t
        return t

    def poch(self, a, base, n: int) -> LaurentSeries:
        return self._tower(a, base, False).upto(n)

    def inv_poch(self, a, base, n: int) -> LaurentSeries:
        return self._tower(a, base, True).upto(n)

    def poch_inf(self, a, base) -> LaurentSeries:
        return poch_infinite(as_monomial(a), as_monomial(base), self.order)

    def inv_poch_inf(self, a, base) -> LaurentSeries:
        return self.poch_inf(a, base).invert(self.order)

    def vwp(self, k, n: int, base: Optional[QMonomial] = None) -> LaurentSeries:
        return vwp_factor(k, n, self.order, base if base is not None else self.q)

    def summation(self, term: Callable[[int], object], start: int = 0,
                  extra: int = 0):
        """Sum terms exactly to the comparison target; `extra` computes
        deeper (still within the construction headroom) for callers that
        multiply the result by a negative q-power afterwards."""
        goal = min(self.order, self.target + max(0, extra))

        def gen(n: int) -> LaurentSeries:
            t = term(n + start)
            if not isinstance(t, LaurentSeries):
                t = LaurentSeries.coerce(t, goal)
            return t.truncate(goal)

        return sum_exact(TermGenerator(gen), goal)

    def finalize(self, v) -> LaurentSeries:
        return LaurentSeries.coerce(v, self.order)


class NumericCtx:
    """Numeric strategy: high-precision decimals at a rational q.

    `q_unit` is the d-th root of q as an exact rational; every q-power in
    a builder is an integer power of it.
    """

    mode = "numeric"

    def __init__(self, q_unit: Fraction, denom: int = 1,
                 precision: int = NUMERIC_PRECISION, tol=NUMERIC_TOL):
        self.denom = denom
        self.precision = precision
        self.tol = tol if isinstance(tol, Decimal) else Decimal(str(tol))
        with decimal.localcontext() as c:
            c.prec = precision + 10
            self.q_unit = Decimal(q_unit.numerator) / Decimal(q_unit.denominator)
            self.q = self.q_unit ** denom
        self._eps = Decimal(10) ** -(precision - 4)
        self._poch_cache: Dict = {}

    def one(self):
        return Decimal(1)

    def num(self, x):
        if isinstance(x, Decimal):
            return x
        if isinstance(x, int):
            return Decimal(x)
        x = Fraction(x)
        return Decimal(x.numerator) / Decimal(x.denominator)

    def qpow(self, e) -> Decimal:
        te = Fraction(e) * self.denom
        if te.denominator != 1:
            raise ValueError(f"exponent {e} not representable at denom "
                             f"{self.denom}")
        return self.q_unit ** int(te)

    def mul(self, *vals):
        out = Decimal(1)
        for v in vals:
            out *= self.num(v)
        return out

    def add(self, u, v):
        return self.num(u) + self.num(v)

    def sub(self, u, v):
        return self.num(u) - self.num(v)

    def neg(self, v):
        return -self.num(v)

    def inv(self, v):
        v = self.num(v)
        if not v:
            raise DegenerateDenominator("division by zero")
        return Decimal(1) / v

    def div(self, u, v):
        return self.num(u) * self.inv(v)

    def pow_int(self, v, k: int):
        return self.num(v) ** k

    def poch(self, a, base, n: int) -> Decimal:
        a, base = self.num(a), self.num(base)
        key = (a, base)
        vals = self._poch_cache.get(key)
        if vals is None:
            vals = [Decimal(1)]
            self._poch_cache[key] = vals
        while len(vals) <= n:
            j = len(vals) - 1
            vals.append(vals[-1] * (1 - a * base ** j))
        return vals[n]

    def inv_poch(self, a, base, n: int) -> Decimal:
        p = self.poch(a, base, n)
        if not p:
            raise DegenerateDenominator("vanishing Pochhammer denominator")
        return Decimal(1) / p

    def poch_inf(self, a, base) -> Decimal:
        a, base = self.num(a), self.num(base)
        if abs(base) >= 1:
            raise NonTruncatable("numeric infinite product needs |base| < 1")
        out = Decimal(1)
        j = 0
        while True:
            f = a * base ** j
            if abs(f) < self._eps:
                return out
            out *= (1 - f)
            j += 1
            if j > 100_000:
                raise NonTruncatable("infinite product failed to settle")

    def inv_poch_inf(self, a, base) -> Decimal:
        p = self.poch_inf(a, base)
        if not p:
            raise DegenerateDenominator("vanishing infinite product")
        return Decimal(1) / p

    def vwp(self, k, n: int, base=None) -> Decimal:
        k = self.num(k)
        base = self.q if base is None else self.num(base)
        if k == 1:
            raise DegenerateVWP("very-well-poised factor with k = 1")
        return (1 - k * base ** (2 * n)) / (1 - k)

    def summation(self, term: Callable[[int], Decimal], start: int = 0,
                  extra: int = 0):
        gen = NumericTermGenerator(lambda n: self.num(term(n + start)),
                                   self.precision)
        return sum_numeric(gen, self.tol)

    def finalize(self, v) -> Decimal:
        return self.num(v)


Ctx = Union[ExactCtx, NumericCtx]
