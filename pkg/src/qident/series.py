"""Truncated Laurent series over exact rationals, in one formal variable q.

The coefficient field is `fractions.Fraction` (arbitrary precision, always
in lowest terms with positive denominator). A series tracks a coefficient
window [min_deg, order]:

  * coefficients below min_deg are exactly zero,
  * coefficients inside the window are exactly known,
  * coefficients above `order` are UNKNOWN -- never assumed zero.

A series with ``order is None`` is an exact Laurent polynomial: every
coefficient outside its support is known to be zero. Exact values (the
output of finite products, monomials, plain rationals) keep full precision
through arithmetic; truncation enters only where something genuinely
infinite was cut off.

Multiplication shrinks the guaranteed order by the partner's valuation:
unknown coefficients of one factor first contaminate the product at
exponent (order_a + 1) + min_deg_b, so everything below that is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .errors import OrderInsufficient, ZeroLeadingCoefficient

#: The exact coefficient field used everywhere.
Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

#: Default truncation order for operations that must cut something infinite
#: and were not told how far to go.
DEFAULT_ORDER = 40

RationalLike = Union[Rational, int]


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QMonomial(NamedTuple):
    """A value of the shape c * q^e with c rational and e an integer.

    This is the only parameter shape admitted into infinite products and
    power bases under the exact strategy: it guarantees that high powers
    have high valuation. The zero value is represented with coef == 0.
    """

    coef: Rational
    exp: int

    @staticmethod
    def of(coef: RationalLike, exp: int = 0) -> "QMonomial":
        c = _frac(coef)
        return QMonomial(c, exp if c else 0)

    @property
    def is_zero(self) -> bool:
        return not self.coef

    @property
    def is_one(self) -> bool:
        return self.coef == 1 and self.exp == 0

    def __mul__(self, other: "QMonomial") -> "QMonomial":  # type: ignore[override]
        if self.is_zero or other.is_zero:
            return _QM_ZERO
        return QMonomial(self.coef * other.coef, self.exp + other.exp)

    def __truediv__(self, other: "QMonomial") -> "QMonomial":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero monomial")
        if self.is_zero:
            return _QM_ZERO
        return QMonomial(self.coef / other.coef, self.exp - other.exp)

    def __pow__(self, n: int) -> "QMonomial":
        if n == 0:
            return _QM_ONE
        if self.is_zero:
            if n < 0:
                raise ZeroDivisionError("negative power of the zero monomial")
            return _QM_ZERO
        return QMonomial(self.coef ** n, self.exp * n)

    def __neg__(self) -> "QMonomial":
        return QMonomial(-self.coef, self.exp) if self.coef else _QM_ZERO

    def rescale(self, d: int) -> "QMonomial":
        """Multiply the exponent by d (change of variable q -> t^d)."""
        return QMonomial(self.coef, self.exp * d)

    def to_series(self, order: Optional[int] = None) -> "LaurentSeries":
        """Exact conversion; by default an exact (untruncated) monomial."""
        if self.is_zero:
            return LaurentSeries._make(0, (), order)
        return LaurentSeries._make(self.exp, (self.coef,), order)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.exp == 0:
            return str(self.coef)
        return f"{self.coef}*q^{self.exp}"


_QM_ZERO = QMonomial(_F0, 0)
_QM_ONE = QMonomial(_F1, 0)

#: Values accepted wherever a series is expected.
SeriesLike = Union["LaurentSeries", QMonomial, Rational, int]


class Mismatch(NamedTuple):
    """First differing coefficient found by `series_compare`."""

    exponent: int
    lhs: Rational
    rhs: Rational


class LaurentSeries:
    """Immutable Laurent series with an explicit truncation order.

    Instances are canonical: no leading zero coefficients, the window is
    exactly [min_deg, order] for truncated series, and zero is stored with
    an empty coefficient tuple. Use the module factories or arithmetic
    operators; the raw constructor does not canonicalize.
    """

    __slots__ = ("min_deg", "coeffs", "order")

    def __init__(self, min_deg: int, coeffs: tuple, order: Optional[int]):
        self.min_deg = min_deg
        self.coeffs = coeffs
        self.order = order

    # -- construction --------------------------------------------------

    @staticmethod
    def _make(min_deg: int, coeffs, order: Optional[int]) -> "LaurentSeries":
        """Canonicalizing factory. `coeffs` covers min_deg..min_deg+len-1;
        everything else inside the window is taken to be known zero."""
        coeffs = list(coeffs)
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        coeffs = coeffs[lead:]
        min_deg += lead
        if order is None:
            while coeffs and not coeffs[-1]:
                coeffs.pop()
            if not coeffs:
                return LaurentSeries(0, (), None)
            return LaurentSeries(min_deg, tuple(coeffs), None)
        if not coeffs or min_deg > order:
            return LaurentSeries(order + 1, (), order)
        width = order - min_deg + 1
        if len(coeffs) < width:
            coeffs.extend([_F0] * (width - len(coeffs)))
        elif len(coeffs) > width:
            del coeffs[width:]
            # retrim in case truncation exposed a zero head
            lead = 0
            while lead < len(coeffs) and not coeffs[lead]:
                lead += 1
            if lead:
                coeffs = coeffs[lead:]
                min_deg += lead
            if not coeffs:
                return LaurentSeries(order + 1, (), order)
        return LaurentSeries(min_deg, tuple(coeffs), order)

    @staticmethod
    def zero(order: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries._make(0, (), order)

    @staticmethod
    def one(order: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries._make(0, (_F1,), order)

    @staticmethod
    def monomial(coef: RationalLike, exp: int = 0,
                 order: Optional[int] = None) -> "LaurentSeries":
        return LaurentSeries._make(exp, (_frac(coef),), order)

    @staticmethod
    def from_pairs(pairs, order: Optional[int] = None) -> "LaurentSeries":
        """Build from an iterable (or mapping) of (exponent, coefficient)."""
        if hasattr(pairs, "items"):
            pairs = pairs.items()
        d = {}
        for e, c in pairs:
            d[e] = d.get(e, _F0) + _frac(c)
        if not d:
            return LaurentSeries.zero(order)
        lo, hi = min(d), max(d)
        if order is not None:
            hi = min(hi, order)
        coeffs = [d.get(e, _F0) for e in range(lo, hi + 1)]
        return LaurentSeries._make(lo, coeffs, order)

    @staticmethod
    def coerce(value: SeriesLike, order: Optional[int] = None) -> "LaurentSeries":
        if isinstance(value, LaurentSeries):
            return value
        if isinstance(value, QMonomial):
            return value.to_series(order)
        return LaurentSeries.monomial(_frac(value), 0, order)

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return self.order is None

    def eff_order(self) -> float:
        """Truncation order, with +inf meaning 'exact'."""
        return float("inf") if self.order is None else self.order

    def eff_min_deg(self) -> float:
        """Valuation lower bound; the zero series reports past its order."""
        if self.coeffs:
            return self.min_deg
        return float("inf") if self.order is None else self.order + 1

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a nonzero coefficient, None if zero."""
        return self.min_deg if self.coeffs else None

    def coeff(self, exponent: int) -> Rational:
        """Coefficient at `exponent`; raises beyond the known window."""
        if exponent > self.eff_order():
            raise OrderInsufficient(
                f"coefficient of q^{exponent} is beyond the guaranteed order")
        i = exponent - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _F0

    def terms(self):
        """Iterate (exponent, coefficient) over nonzero entries."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_deg + i, c

    def eval_at(self, q: RationalLike) -> Rational:
        """Evaluate the known window at a rational point (exact)."""
        q = _frac(q)
        total = _F0
        for e, c in self.terms():
            total += c * q ** e
        return total

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_deg, tuple(-c for c in self.coeffs),
                             self.order)

    def __add__(self, other: SeriesLike) -> "LaurentSeries":
        other = LaurentSeries.coerce(other)
        eo = min(self.eff_order(), other.eff_order())
        order = None if eo == float("inf") else int(eo)
        if self.is_zero and other.is_zero:
            return LaurentSeries.zero(order)
        lows = [s.min_deg for s in (self, other) if s.coeffs]
        lo = min(lows)
        hi_known = max((s.min_deg + len(s.coeffs) - 1 for s in (self, other)
                        if s.coeffs), default=lo)
        hi = hi_known if order is None else order
        out = [_F0] * (hi - lo + 1)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                j = s.min_deg + i - lo
                if 0 <= j < len(out):
                    out[j] += c
        return LaurentSeries._make(lo, out, order)

    def __radd__(self, other: SeriesLike) -> "LaurentSeries":
        return self.__add__(other)

    def __sub__(self, other: SeriesLike) -> "LaurentSeries":
        return self.__add__(-LaurentSeries.coerce(other))

    def __rsub__(self, other: SeriesLike) -> "LaurentSeries":
        return LaurentSeries.coerce(other).__add__(-self)

    def __mul__(self, other: SeriesLike) -> "LaurentSeries":
        return self.mul(other)

    def __rmul__(self, other: SeriesLike) -> "LaurentSeries":
        return self.mul(other)

    def mul(self, other: SeriesLike, cap: Optional[int] = None) -> "LaurentSeries":
        """Exact Cauchy product.

        The result order is min(order_a + min_deg_b, order_b + min_deg_a):
        every reported coefficient is correct. `cap` optionally truncates
        the result further (a pure cost saving for callers that only need
        coefficients up to `cap`).
        """
        other = LaurentSeries.coerce(other)
        eo = min(self.eff_order() + other.eff_min_deg(),
                 other.eff_order() + self.eff_min_deg())
        if cap is not None:
            eo = min(eo, cap)
        order = None if eo == float("inf") else int(eo)
        if self.is_zero or other.is_zero:
            return LaurentSeries.zero(order)
        # fast path: monomial factor
        if len(other.coeffs) == 1:
            return self._mul_monomial(other.coeffs[0], other.min_deg, order)
        if len(self.coeffs) == 1:
            return other._mul_monomial(self.coeffs[0], self.min_deg, order)
        lo = self.min_deg + other.min_deg
        if order is None:
            width = len(self.coeffs) + len(other.coeffs) - 1
        else:
            width = order - lo + 1
        out = [_F0] * width
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        for i, ai in enumerate(a):
            if not ai:
                continue
            jmax = min(len(b), width - i)
            for j in range(jmax):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return LaurentSeries._make(lo, out, order)

    def _mul_monomial(self, coef: Rational, exp: int,
                      order: Optional[int]) -> "LaurentSeries":
        return LaurentSeries._make(self.min_deg + exp,
                                   [coef * c for c in self.coeffs], order)

    def scale(self, coef: RationalLike, exp: int = 0) -> "LaurentSeries":
        """Multiply by the exact monomial coef * q^exp."""
        coef = _frac(coef)
        order = None if self.order is None else self.order + exp
        if not coef:
            return LaurentSeries.zero(order)
        return self._mul_monomial(coef, exp, order)

    def mul_binomial(self, coef: RationalLike, exp: int) -> "LaurentSeries":
        """Multiply by the exact binomial (1 + coef * q^exp)."""
        coef = _frac(coef)
        if not coef:
            return self
        return self + self.scale(coef, exp)

    def div_binomial(self, coef: RationalLike, exp: int,
                     order: Optional[int] = None) -> "LaurentSeries":
        """Divide by the exact binomial (1 + coef * q^exp).

        For exp > 0 the quotient is computed by the linear recurrence
        b[t] = a[t] - coef * b[t-exp], which preserves the truncation
        order. Exact input needs an explicit `order` (the quotient is an
        infinite series).
        """
        coef = _frac(coef)
        if not coef:
            return self if order is None else self.truncate(order)
        if exp == 0:
            if coef == -1:
                raise ZeroLeadingCoefficient("division by the zero binomial")
            out = self.scale(_F1 / (1 + coef))
            return out if order is None else out.truncate(order)
        if exp < 0:
            # 1 + c q^e = c q^e (1 + (1/c) q^{-e})
            out = self.scale(_F1 / coef, -exp)
            return out.div_binomial(_F1 / coef, -exp, order)
        eo = self.eff_order()
        if order is not None:
            eo = min(eo, order)
        if eo == float("inf"):
            raise ValueError("dividing an exact series requires an order")
        eo = int(eo)
        if self.is_zero:
            return LaurentSeries.zero(eo)
        lo = self.min_deg
        width = eo - lo + 1
        if width <= 0:
            return LaurentSeries.zero(eo)
        a = self.coeffs
        out = [_F0] * width
        for t in range(width):
            v = a[t] if t < len(a) else _F0
            if t - exp >= 0:
                prev = out[t - exp]
                if prev:
                    v = v - coef * prev
            out[t] = v
        return LaurentSeries._make(lo, out, eo)

    def invert(self, order: Optional[int] = None) -> "LaurentSeries":
        """Multiplicative inverse to the guaranteed order.

        The input must have a nonzero leading coefficient. The inverse of
        a series with valuation m known to order N is known to order
        N - 2m (same count of correct coefficients, shifted window).
        """
        if self.is_zero:
            raise ZeroLeadingCoefficient("cannot invert the zero series")
        m = self.min_deg
        if self.order is None:
            if len(self.coeffs) == 1:
                return LaurentSeries._make(-m, (_F1 / self.coeffs[0],), order)
            if order is None:
                raise ValueError("inverting an exact non-monomial series "
                                 "requires an order")
            rel = order + m
        else:
            rel = self.order - m  # relative precision carried by the input
            if order is not None:
                rel = min(rel, order + m)
        if rel < 0:
            raise OrderInsufficient("input order too low to invert")
        lead = self.coeffs[0]
        a = self.coeffs
        out = [_F0] * (rel + 1)
        out[0] = _F1 / lead
        for t in range(1, rel + 1):
            acc = _F0
            jmax = min(t, len(a) - 1)
            for j in range(1, jmax + 1):
                aj = a[j]
                if aj:
                    acc += aj * out[t - j]
            if acc:
                out[t] = -acc / lead
        return LaurentSeries._make(-m, out, rel - m)

    def truncate(self, order: int) -> "LaurentSeries":
        """Restrict the window to [min_deg, order] (order may not grow)."""
        if self.order is not None and order > self.order:
            raise OrderInsufficient(
                f"cannot extend order {self.order} to {order}")
        width = order - self.min_deg + 1
        return LaurentSeries._make(self.min_deg, self.coeffs[:max(width, 0)],
                                   order)

    def rescale(self, d: int) -> "LaurentSeries":
        """Map q -> t^d: every exponent (and the order) is multiplied by d."""
        if d < 1:
            raise ValueError("rescale factor must be >= 1")
        if d == 1:
            return self
        order = None if self.order is None else self.order * d
        if self.is_zero:
            return LaurentSeries.zero(order)
        out = [_F0] * ((len(self.coeffs) - 1) * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return LaurentSeries._make(self.min_deg * d, out, order)

    # -- comparison -----------------------------------------------------

    def compare(self, other: "LaurentSeries", up_to: int) -> Optional[Mismatch]:
        """Coefficientwise comparison on exponents <= up_to.

        Returns None when equal on the window, otherwise the lowest
        differing exponent with both coefficients. Raises OrderInsufficient
        if either side is not known through `up_to`.
        """
        if up_to > self.eff_order() or up_to > other.eff_order():
            raise OrderInsufficient(
                f"comparison to q^{up_to} exceeds a guaranteed order")
        lows = [s.min_deg for s in (self, other) if s.coeffs]
        if not lows:
            return None
        for e in range(min(lows), up_to + 1):
            i, j = e - self.min_deg, e - other.min_deg
            ca = self.coeffs[i] if 0 <= i < len(self.coeffs) else _F0
            cb = other.coeffs[j] if 0 <= j < len(other.coeffs) else _F0
            if ca != cb:
                return Mismatch(e, ca, cb)
        return None

    # -- dunder plumbing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.min_deg == other.min_deg and self.coeffs == other.coeffs
                and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.min_deg, self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"

    def __str__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            parts = []
            for e, c in self.terms():
                if e == 0:
                    term = str(c)
                elif c == 1:
                    term = f"q^{e}" if e != 1 else "q"
                elif c == -1:
                    term = f"-q^{e}" if e != 1 else "-q"
                else:
                    term = f"{c}*q^{e}" if e != 1 else f"{c}*q"
                if parts and not term.startswith("-"):
                    parts.append("+ " + term)
                elif parts:
                    parts.append("- " + term[1:])
                else:
                    parts.append(term)
            body = " ".join(parts)
        if self.order is None:
            return body
        return f"{body} + O(q^{self.order + 1})"


# -- module-level operation names -------------------------------------------

def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Exact sum; the result order is min(order_a, order_b)."""
    return a + b


def series_mul(a: LaurentSeries, b: LaurentSeries,
               cap: Optional[int] = None) -> LaurentSeries:
    """Exact Cauchy product with sound order bookkeeping."""
    return a.mul(b, cap=cap)


def series_invert(a: LaurentSeries, order: Optional[int] = None) -> LaurentSeries:
    """Inverse series; `series_mul(a, series_invert(a))` is 1 to the
    guaranteed order."""
    return a.invert(order)


def series_compare(a: LaurentSeries, b: LaurentSeries,
                   up_to: int) -> Optional[Mismatch]:
    """Coefficientwise comparison; None means equal through q^up_to."""
    return a.compare(b, up_to)


def rescale_exponents(a: LaurentSeries, d: int) -> LaurentSeries:
    """Realize fractional powers by working in t with q = t^d."""
    return a.rescale(d)
