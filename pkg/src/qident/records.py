"""The identity catalog: every verified identity as a pair of side
builders over the dual-strategy context, with its parameter schema and a
deterministic sampler.

Builder conventions: `p` maps schema symbols to values (monomials in
t-units under the exact strategy, rationals/integers under the numeric
one); `ctx.qpow(e)` is q^e with e in q-units. Sums follow the source
displays term by term; square-root pairs are always realized through
ctx.vwp. Samplers draw one candidate (None = rejected); rejection and
determinism live in the registry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable, Dict, Optional, Tuple

from .context import Ctx
from .series import QMonomial

Q1 = QMonomial.of(1, 1)


@dataclass(frozen=True)
class ParamSpec:
    symbol: str
    kind: str            # monomial | rational | integer
    note: str = ""


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str                       # human-readable source note
    covers: Tuple[str, ...]           # inventory labels this record checks
    schema: Tuple[ParamSpec, ...]
    build: Callable[[Ctx, Dict], Tuple[object, object]]
    sampler: Callable[[random.Random, str], Optional[Dict]]
    exponent_denominator: int = 1
    strategies: Tuple[str, ...] = ("exact", "numeric")
    note: Optional[str] = None
    headroom: int = 4                 # extra exact window for Laurent dips


# ---------------------------------------------------------------------------
# sampling pools
# ---------------------------------------------------------------------------

COEFS = [F(1), F(-1), F(2), F(1, 2), F(-1, 2), F(3), F(1, 3), F(2, 3),
         F(3, 2), F(-2)]
SMALL_COEFS = [F(1), F(-1), F(2), F(1, 2), F(-1, 2), F(1, 3)]
RATS = [F(1, 2), F(-1, 2), F(1, 3), F(-1, 3), F(2, 5), F(-2, 5), F(3, 5),
        F(5, 8), F(-3, 4), F(2, 7), F(-5, 7), F(7, 10)]
QPOOL = [F(1, 7), F(-1, 6), F(1, 9), F(1, 11), F(-1, 8), F(1, 5), F(1, 12),
         F(-1, 10)]
QUPOOL = [F(1, 5), F(-1, 5), F(1, 6), F(1, 7), F(-1, 6), F(1, 8)]


def _mono(rng, lo: int, hi: int, d: int = 1, pool=COEFS,
          unit_ok: bool = True) -> QMonomial:
    e = rng.randint(lo, hi)
    c = rng.choice(pool)
    if not unit_ok or e == 0:
        while c == 1 and e == 0:
            c = rng.choice(pool)
    return QMonomial(c, e * d)


def _rat(rng, pool=RATS) -> F:
    return rng.choice(pool)


def _qv(rng) -> F:
    return rng.choice(QPOOL)


def _xyz(rng, mode: str, d: int = 1) -> Dict:
    """The ubiquitous (x, y, z) triple: x drives valuation growth."""
    if mode == "exact":
        return {
            "x": _mono(rng, 1, 2, d, SMALL_COEFS),
            "y": _mono(rng, 0, 2, d),
            "z": _mono(rng, 0, 2, d),
        }
    return {
        "x": rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(-2, 5), F(2, 5)]),
        "y": _rat(rng),
        "z": _rat(rng),
        "q": _qv(rng),
    }


# ---------------------------------------------------------------------------
# shared builder pieces
# ---------------------------------------------------------------------------

def _pref(ctx: Ctx, x, y, z):
    """(1 - xy)(1 - xz) / ((1 - x)(1 - xyz))."""
    one = ctx.one()
    num = ctx.mul(ctx.sub(one, ctx.mul(x, y)), ctx.sub(one, ctx.mul(x, z)))
    den = ctx.mul(ctx.sub(one, x), ctx.sub(one, ctx.mul(x, y, z)))
    return ctx.mul(num, ctx.inv(den))


def _core_lhs(ctx: Ctx, x, y, z, beta_at, idx=lambda n: n):
    """sum vwp(xyz, i) (y, z; q)_i x^i beta(n) / ((qxy, qxz; q)_i) with
    i = idx(n); beta_at receives the summation index n."""
    k = ctx.mul(x, y, z)
    qq = ctx.qpow(1)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)

    def term(n):
        i = idx(n)
        return ctx.mul(ctx.vwp(k, i), ctx.poch(y, qq, i), ctx.poch(z, qq, i),
                       ctx.inv_poch(qxy, qq, i), ctx.inv_poch(qxz, qq, i),
                       ctx.pow_int(x, i), beta_at(n))

    return ctx.summation(term)


def _core_rhs_sum(ctx: Ctx, x, y, z, alpha_at, arg=None):
    """sum (y, z; q)_n arg^n alpha(n) / ((xy, xz; q)_n); arg defaults x."""
    qq = ctx.qpow(1)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)
    base_arg = x if arg is None else arg

    def term(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       ctx.pow_int(base_arg, n), alpha_at(n))

    return ctx.summation(term)


def _running_sums(ctx: Ctx, value_at):
    """Partial-sum cache: beta(n) = value(0) + .. + value(n)."""
    cache = []

    def beta(n):
        while len(cache) <= n:
            m = len(cache)
            prev = cache[-1] if cache else None
            v = value_at(m)
            cache.append(v if prev is None else ctx.add(prev, v))
        return cache[n]

    return beta


# ---------------------------------------------------------------------------
# record builders, catalog order
# ---------------------------------------------------------------------------

def _b_qgauss(ctx, p):
    a, b, c = p["a"], p["b"], p["c"]
    qq = ctx.qpow(1)
    z = ctx.div(c, ctx.mul(a, b))

    def term(n):
        return ctx.mul(ctx.poch(a, qq, n), ctx.poch(b, qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(c, qq, n),
                       ctx.pow_int(z, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.poch_inf(ctx.div(c, a), qq), ctx.poch_inf(ctx.div(c, b), qq),
                  ctx.inv_poch_inf(c, qq), ctx.inv_poch_inf(z, qq))
    return lhs, rhs


def _s_qgauss(rng, mode):
    if mode == "exact":
        a = _mono(rng, 0, 2, pool=SMALL_COEFS)
        b = _mono(rng, 0, 2, pool=SMALL_COEFS)
        c = QMonomial(rng.choice(SMALL_COEFS),
                      a.exp + b.exp + rng.randint(1, 2))
        return {"a": a, "b": b, "c": c}
    a, b = _rat(rng), _rat(rng)
    w = rng.choice([F(1, 2), F(-1, 3), F(2, 5), F(-1, 4)])
    return {"a": a, "b": b, "c": a * b * w, "q": _qv(rng)}


def _b_qbinom(ctx, p):
    a, z = p["a"], p["z"]
    qq = ctx.qpow(1)

    def term(n):
        return ctx.mul(ctx.poch(a, qq, n), ctx.inv_poch(qq, qq, n),
                       ctx.pow_int(z, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.poch_inf(ctx.mul(a, z), qq), ctx.inv_poch_inf(z, qq))
    return lhs, rhs


def _s_qbinom(rng, mode):
    if mode == "exact":
        return {"a": _mono(rng, 0, 3), "z": _mono(rng, 1, 3, pool=SMALL_COEFS)}
    return {"a": _rat(rng), "z": rng.choice([F(1, 2), F(-1, 2), F(1, 3),
                                             F(-2, 5)]), "q": _qv(rng)}


def _wp_transform_sides(ctx, a, k, r1, r2):
    """Both sides of the infinite well-poised transform for the seed
    sequence alpha = (1, 0, 0, ...); beta comes from the defining sum."""
    qq = ctx.qpow(1)
    z = ctx.div(ctx.mul(a, qq), ctx.mul(r1, r2))
    kq = ctx.mul(k, qq)
    aq = ctx.mul(a, qq)

    def beta(n):
        return ctx.mul(ctx.poch(ctx.div(k, a), qq, n), ctx.poch(k, qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(aq, qq, n))

    def lhs_term(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(r1, qq, n), ctx.poch(r2, qq, n),
                       ctx.inv_poch(ctx.div(kq, r1), qq, n),
                       ctx.inv_poch(ctx.div(kq, r2), qq, n),
                       ctx.pow_int(z, n), beta(n))

    lhs = ctx.summation(lhs_term)
    pref = ctx.mul(
        ctx.poch_inf(kq, qq), ctx.poch_inf(ctx.div(kq, ctx.mul(r1, r2)), qq),
        ctx.poch_inf(ctx.div(aq, r1), qq), ctx.poch_inf(ctx.div(aq, r2), qq),
        ctx.inv_poch_inf(ctx.div(kq, r1), qq), ctx.inv_poch_inf(ctx.div(kq, r2), qq),
        ctx.inv_poch_inf(z, qq), ctx.inv_poch_inf(aq, qq))
    return lhs, pref


def _b_bailey_transform(ctx, p):
    zero = ctx.num(0) if ctx.mode == "numeric" else QMonomial.of(0)
    return _wp_transform_sides(ctx, p["a"], zero, p["y"], p["z"])


def _s_bailey_transform(rng, mode):
    if mode == "exact":
        ey, ez = rng.randint(1, 2), rng.randint(1, 2)
        y = QMonomial(rng.choice(SMALL_COEFS), ey)
        z = QMonomial(rng.choice(SMALL_COEFS), ez)
        a = QMonomial(rng.choice(SMALL_COEFS), ey + ez + rng.randint(0, 1))
        return {"a": a, "y": y, "z": z}
    y, z = _rat(rng), _rat(rng)
    if abs(y) < F(1, 4) or abs(z) < F(1, 4):
        return None
    a = rng.choice([F(1, 4), F(-1, 4), F(1, 5), F(2, 7)])
    return {"a": a, "y": y, "z": z, "q": _qv(rng)}


def _b_thm_wp(ctx, p):
    return _wp_transform_sides(ctx, p["a"], p["k"], p["r1"], p["r2"])


def _s_thm_wp(rng, mode):
    if mode == "exact":
        e1, e2 = rng.randint(1, 2), rng.randint(1, 2)
        r1 = QMonomial(rng.choice(SMALL_COEFS), e1)
        r2 = QMonomial(rng.choice(SMALL_COEFS), e2)
        ea = e1 + e2 + rng.randint(0, 1)
        a = QMonomial(rng.choice(SMALL_COEFS), ea)
        k = QMonomial(rng.choice(SMALL_COEFS), ea + rng.randint(0, 2))
        return {"a": a, "k": k, "r1": r1, "r2": r2}
    r1, r2 = _rat(rng), _rat(rng)
    if abs(r1) < F(1, 4) or abs(r2) < F(1, 4):
        return None
    a = rng.choice([F(1, 4), F(-1, 4), F(1, 5), F(2, 7)])
    k = rng.choice([F(1, 3), F(-1, 3), F(1, 6), F(2, 9)])
    return {"a": a, "k": k, "r1": r1, "r2": r2, "q": _qv(rng)}


def _b_cor_central(ctx, p):
    vals = [ctx.num(p[f"alpha{i}"]) for i in range(6)]

    def alpha(n):
        return vals[n] if n < len(vals) else ctx.num(0)

    beta = _running_sums(ctx, alpha)
    lhs = _core_lhs(ctx, p["x"], p["y"], p["z"], beta)
    rhs = ctx.mul(_pref(ctx, p["x"], p["y"], p["z"]),
                  _core_rhs_sum(ctx, p["x"], p["y"], p["z"], alpha))
    return lhs, rhs


def _s_cor_central(rng, mode):
    out = _xyz(rng, mode)
    for i in range(6):
        out[f"alpha{i}"] = F(rng.randint(-5, 5), rng.choice([1, 2, 3]))
    return out


def _b_alt_alpha(ctx, p):
    x, y, z = p["x"], p["y"], p["z"]
    lhs = _core_lhs(ctx, x, y, z, lambda n: ctx.num(1), idx=lambda n: 2 * n)
    rhs = ctx.mul(_pref(ctx, x, y, z),
                  _core_rhs_sum(ctx, x, y, z,
                                lambda n: ctx.num((-1) ** n)))
    return lhs, rhs


def _b_ones_alpha(ctx, p):
    x, y, z = p["x"], p["y"], p["z"]
    lhs = _core_lhs(ctx, x, y, z, lambda n: ctx.num(n + 1))
    rhs = ctx.mul(_pref(ctx, x, y, z),
                  _core_rhs_sum(ctx, x, y, z, lambda n: ctx.num(1)))
    return lhs, rhs


def _s_xyz_only(rng, mode):
    return _xyz(rng, mode)


def _b_alt_sum(ctx, p):
    x = p["x"]
    qq = ctx.qpow(1)
    inv_x = ctx.inv(x)
    arg = ctx.mul(ctx.qpow(1), ctx.pow_int(inv_x, 2))   # q / x^2

    def term(n):
        head = ctx.sub(ctx.one(), ctx.mul(ctx.qpow(2 * n + 1), inv_x))
        return ctx.mul(head, ctx.poch(arg, qq, 2 * n),
                       ctx.pow_int(x, 2 * n),
                       ctx.inv_poch(qq, qq, 2 * n + 1))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.inv(ctx.add(ctx.one(), x)),
                  ctx.poch_inf(ctx.mul(qq, inv_x), qq),
                  ctx.inv_poch_inf(x, qq))
    return lhs, rhs


def _b_ones_sum(ctx, p):
    x = p["x"]
    qq = ctx.qpow(1)
    inv_x = ctx.inv(x)
    arg = ctx.mul(ctx.qpow(1), ctx.pow_int(inv_x, 2))

    def term(n):
        head = ctx.add(ctx.one(), ctx.mul(ctx.qpow(n + 1), inv_x))
        return ctx.mul(head, ctx.poch(arg, qq, n), ctx.pow_int(x, n),
                       ctx.num(n + 1), ctx.inv_poch(qq, qq, n + 1))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.inv(ctx.sub(ctx.one(), x)),
                  ctx.poch_inf(ctx.mul(qq, inv_x), qq),
                  ctx.inv_poch_inf(x, qq))
    return lhs, rhs


def _b_u_power(ctx, p):
    x, u = p["x"], p["u"]
    qq = ctx.qpow(1)
    inv_x = ctx.inv(x)
    arg = ctx.mul(ctx.qpow(1), ctx.pow_int(inv_x, 2))

    def term(n):
        head = ctx.add(ctx.one(), ctx.mul(ctx.qpow(n + 1), inv_x))
        tail = ctx.sub(ctx.one(), ctx.pow_int(u, n + 1))
        return ctx.mul(head, ctx.poch(arg, qq, n), ctx.pow_int(x, n),
                       tail, ctx.inv_poch(qq, qq, n + 1))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.sub(ctx.one(), u), ctx.inv(ctx.sub(ctx.one(), x)),
                  ctx.poch_inf(ctx.mul(qq, u, inv_x), qq),
                  ctx.inv_poch_inf(ctx.mul(x, u), qq))
    return lhs, rhs


def _s_x_unit(rng, mode):
    # exact strategy: the infinite products force x = c*q exactly
    if mode == "exact":
        c = rng.choice([F(2), F(1, 2), F(-1, 2), F(3), F(1, 3), F(-2),
                        F(2, 3), F(3, 2)])
        return {"x": QMonomial(c, 1)}
    x = rng.choice([F(1, 3), F(-1, 3), F(2, 5), F(-2, 5), F(1, 2), F(3, 7)])
    return {"x": x, "q": _qv(rng)}


def _s_x_unit_u(rng, mode):
    out = _s_x_unit(rng, mode)
    if out is None:
        return None
    if mode == "exact":
        e = rng.randint(0, 2)
        pool = [c for c in COEFS if not (e == 0 and c == 1)]
        out["u"] = QMonomial(rng.choice(pool), e)
    else:
        out["u"] = rng.choice([F(1, 2), F(-1, 2), F(2, 5), F(-3, 5), F(1, 4)])
    return out


def _b_phi54(ctx, p):
    x, y, z, c = p["x"], p["y"], p["z"], p["c"]
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    cq = ctx.mul(c, qq)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(cq, qq, n), ctx.inv_poch(qq, qq, n),
                       ctx.inv_poch(qxy, qq, n), ctx.inv_poch(qxz, qq, n),
                       ctx.pow_int(x, n))

    xq = ctx.mul(x, qq)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def rterm(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(c, qq, n), ctx.inv_poch(qq, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       ctx.pow_int(xq, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _s_phi54(rng, mode):
    out = _xyz(rng, mode)
    out["c"] = _rat(rng) if mode == "numeric" else \
        _mono(rng, 0, 2, unit_ok=False)
    return out


def _b_phi32(ctx, p):
    x, y = p["x"], p["y"]
    qq = ctx.qpow(1)
    xy = ctx.mul(x, y)
    nqxy = ctx.neg(ctx.mul(qq, xy))
    nxy = ctx.neg(xy)
    qx2y = ctx.mul(qq, x, x, y)

    def term(n):
        return ctx.mul(ctx.poch(nqxy, qq, n), ctx.poch(y, qq, n),
                       ctx.poch(x, qq, n), ctx.inv_poch(qq, qq, n),
                       ctx.inv_poch(nxy, qq, n), ctx.inv_poch(qx2y, qq, n),
                       ctx.pow_int(x, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.inv(ctx.add(ctx.one(), xy)),
                  ctx.poch_inf(ctx.mul(x, x), qq), ctx.poch_inf(ctx.mul(qq, xy), qq),
                  ctx.inv_poch_inf(qx2y, qq), ctx.inv_poch_inf(x, qq))
    return lhs, rhs


def _s_phi32(rng, mode):
    if mode == "exact":
        return {"x": _mono(rng, 1, 2, pool=SMALL_COEFS),
                "y": _mono(rng, 0, 2)}
    return {"x": rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2, 5)]),
            "y": _rat(rng), "q": _qv(rng)}


# -- multi-base records ------------------------------------------------------

def _sv_quotient(ctx, p_, P_, Q_, R_, a, b, c, n, shifted: bool):
    """The four-up/four-down base quotient shared by the telescoping sum
    and its closed form; `shifted` advances numerator args by base^2."""
    p2, P2, Q2, R2 = (ctx.pow_int(v, 2) for v in (p_, P_, Q_, R_))
    ratio = ctx.div(a, ctx.mul(b, c))
    if shifted:
        num = ctx.mul(ctx.poch(ctx.mul(a, p2), p2, n),
                      ctx.poch(ctx.mul(b, P2), P2, n),
                      ctx.poch(ctx.mul(c, R2), R2, n),
                      ctx.poch(ctx.mul(ratio, Q2), Q2, n))
    else:
        num = ctx.mul(ctx.poch(a, p2, n), ctx.poch(b, P2, n),
                      ctx.poch(c, R2, n), ctx.poch(ratio, Q2, n))
    pqr_p = ctx.div(ctx.mul(P_, Q_, R_), p_)
    ppq_r = ctx.div(ctx.mul(p_, P_, Q_), R_)
    pqr_P = ctx.div(ctx.mul(p_, Q_, R_), P_)
    ppr_q = ctx.div(ctx.mul(p_, P_, R_), Q_)
    den = ctx.mul(ctx.inv_poch(pqr_p, pqr_p, n),
                  ctx.inv_poch(ctx.div(ctx.mul(a, ppq_r), c), ppq_r, n),
                  ctx.inv_poch(ctx.div(ctx.mul(a, pqr_P), b), pqr_P, n),
                  ctx.inv_poch(ctx.mul(b, c, ppr_q), ppr_q, n))
    return ctx.mul(num, den)


def _sv_linear(ctx, p_, P_, Q_, R_, a, b, c, n):
    """The four linear factors at index n over their n = 0 values."""
    one = ctx.one()
    combo = ctx.mul(p_, P_, Q_, R_)
    f1 = ctx.sub(one, ctx.mul(a, ctx.pow_int(combo, n)))
    f2 = ctx.sub(one, ctx.mul(b, ctx.pow_int(ctx.div(ctx.mul(p_, P_),
                                                     ctx.mul(Q_, R_)), n)))
    f3 = ctx.sub(one, ctx.mul(ctx.inv(c), ctx.pow_int(
        ctx.div(ctx.mul(P_, Q_), ctx.mul(p_, R_)), n)))
    f4 = ctx.sub(one, ctx.mul(ctx.div(a, ctx.mul(b, c)), ctx.pow_int(
        ctx.div(ctx.mul(p_, Q_), ctx.mul(P_, R_)), n)))
    den = ctx.mul(ctx.sub(one, a), ctx.sub(one, b),
                  ctx.sub(one, ctx.inv(c)),
                  ctx.sub(one, ctx.div(a, ctx.mul(b, c))))
    return ctx.mul(f1, f2, f3, f4, ctx.inv(den))


def _b_poly2(ctx, p):
    x, y, z = p["x"], p["y"], p["z"]
    a, b, c = p["a"], p["b"], p["c"]
    p_, P_, Q_, R_ = p["p"], p["P"], p["Q"], p["R"]
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qxy, qq, n), ctx.inv_poch(qxz, qq, n),
                       _sv_quotient(ctx, p_, P_, Q_, R_, a, b, c, n, True),
                       ctx.pow_int(x, n))

    xr2 = ctx.mul(x, ctx.pow_int(R_, 2))

    def rterm(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       _sv_linear(ctx, p_, P_, Q_, R_, a, b, c, n),
                       _sv_quotient(ctx, p_, P_, Q_, R_, a, b, c, n, False),
                       ctx.pow_int(xr2, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _s_poly2(rng, mode):
    if mode == "exact":
        for _ in range(40):
            ep, eP, eQ, eR = (rng.randint(1, 2) for _ in range(4))
            quot_ok = (eP + eQ + eR - ep >= 1 and ep + eP + eQ - eR >= 1
                       and ep + eQ + eR - eP >= 1 and ep + eP + eR - eQ >= 1)
            slope_ok = (ep + eP - eQ - eR >= 0 and eP + eQ - ep - eR >= 0
                        and ep + eQ - eP - eR >= 0)
            if quot_ok and slope_ok:
                break
        else:
            return None
        out = _xyz(rng, "exact")
        out.update({"p": QMonomial(F(1), ep), "P": QMonomial(F(1), eP),
                    "Q": QMonomial(F(1), eQ), "R": QMonomial(F(1), eR)})
    else:
        out = _xyz(rng, "numeric")
        for sym in "pPQR":
            out[sym] = rng.choice([F(1, 3), F(2, 5), F(-1, 3), F(1, 2),
                                   F(-2, 5)])
    a = rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2, 5)])
    b = rng.choice([F(1, 3), F(-1, 3), F(2, 7), F(1, 4)])
    c = rng.choice([F(2), F(3), F(-2), F(1, 2), F(2, 5)])
    if a == b * c or c == 1 or a == 1 or b == 1:
        return None
    out.update({"a": a, "b": b, "c": c})
    return out


def _b_poly2q(ctx, p):
    x, y, z = p["x"], p["y"], p["z"]
    a, b, c = p["a"], p["b"], p["c"]
    m = p["m"]
    qq = ctx.qpow(1)
    qm = ctx.qpow(m)
    k = ctx.mul(x, y, z)
    ratio = ctx.div(a, ctx.mul(b, c))
    lows = [ctx.mul(ctx.div(a, c), qm), ctx.mul(ctx.div(a, b), qm),
            ctx.mul(b, c, qm), qm]
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        ups = ctx.mul(ctx.poch(ctx.mul(a, qm), qm, n),
                      ctx.poch(ctx.mul(b, qm), qm, n),
                      ctx.poch(ctx.mul(c, qm), qm, n),
                      ctx.poch(ctx.mul(ratio, qm), qm, n))
        downs = ctx.mul(*[ctx.inv_poch(l, qm, n) for l in lows])
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qxy, qq, n), ctx.inv_poch(qxz, qq, n),
                       ups, downs, ctx.pow_int(x, n))

    xqm = ctx.mul(x, qm)

    def rterm(n):
        ups = ctx.mul(ctx.poch(a, qm, n), ctx.poch(b, qm, n),
                      ctx.poch(c, qm, n), ctx.poch(ratio, qm, n))
        downs = ctx.mul(*[ctx.inv_poch(l, qm, n) for l in lows])
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       ctx.vwp(a, n, qm), ups, downs, ctx.pow_int(xqm, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _s_poly2q(rng, mode):
    out = _xyz(rng, mode)
    out["m"] = rng.randint(1, 3)
    a = rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2, 5)])
    b = rng.choice([F(1, 3), F(-1, 3), F(2, 7), F(1, 4)])
    c = rng.choice([F(2), F(3), F(-2), F(1, 2), F(2, 5)])
    if a == b * c or 1 in (a, b, c):
        return None
    out.update({"a": a, "b": b, "c": c})
    return out


def _b_phi65(ctx, p):
    x, y, z, a, b = p["x"], p["y"], p["z"], p["a"], p["b"]
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    abq = ctx.mul(a, b, qq)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(ctx.mul(a, qq), qq, n),
                       ctx.poch(ctx.mul(b, qq), qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(qxy, qq, n),
                       ctx.inv_poch(qxz, qq, n), ctx.inv_poch(abq, qq, n),
                       ctx.pow_int(x, n))

    xq = ctx.mul(x, qq)

    def rterm(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(a, qq, n), ctx.poch(b, qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(xy, qq, n),
                       ctx.inv_poch(xz, qq, n), ctx.inv_poch(abq, qq, n),
                       ctx.pow_int(xq, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _s_phi65(rng, mode):
    out = _xyz(rng, mode)
    a = rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2), F(-2), F(3, 2)])
    b = rng.choice([F(1, 3), F(-1, 3), F(2, 5), F(3), F(-1, 2)])
    out.update({"a": a, "b": b})
    return out


def _b_ppte_m(ctx, p):
    x, y, z, a1, a2 = p["x"], p["y"], p["z"], p["a1"], p["a2"]
    b1 = a1 + a2 - 1
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    b1q = ctx.mul(ctx.num(b1), qq)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(ctx.mul(ctx.num(a1), qq), qq, n),
                       ctx.poch(ctx.mul(ctx.num(a2), qq), qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(qxy, qq, n),
                       ctx.inv_poch(qxz, qq, n), ctx.inv_poch(b1q, qq, n),
                       ctx.pow_int(x, n))

    xq2 = ctx.mul(x, ctx.qpow(2))

    def rterm(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.poch(ctx.num(a1), qq, n), ctx.poch(ctx.num(a2), qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(xy, qq, n),
                       ctx.inv_poch(xz, qq, n), ctx.inv_poch(b1q, qq, n),
                       ctx.pow_int(xq2, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _s_ppte_m(rng, mode):
    out = _xyz(rng, mode)
    a1 = rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2), F(3, 4)])
    a2 = rng.choice([F(1, 3), F(-1, 3), F(2, 5), F(-2), F(1, 4)])
    if a1 + a2 == 1:
        return None
    out.update({"a1": a1, "a2": a2})
    return out


_F6_A = ((-3, 7, -2), (-2, 8, 2), (-1, 0, -1), (2, 3, 1), (1, 2, -3),
         (0, 10, 0))
_F6_B = ((-3, 8, 1), (-2, 3, -3), (-1, 10, -1), (2, 2, -2), (1, 7, 2))


def _family6_values(m: F, n: F):
    a = [F(cm) * m * m + F(cn) * n * m + F(c2) * n * n + 1
         for cm, cn, c2 in _F6_A]
    b = [F(cm) * m * m + F(cn) * n * m + F(c2) * n * n + 1
         for cm, cn, c2 in _F6_B]
    return a, b


def _b_cpte3(ctx, p):
    x, y, z = p["x"], p["y"], p["z"]
    avals, bvals = _family6_values(p["m"], p["n"])
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        ups = ctx.mul(*[ctx.poch(ctx.mul(ctx.num(ai), qq), qq, n)
                        for ai in avals])
        downs = ctx.mul(*[ctx.inv_poch(ctx.mul(ctx.num(bi), qq), qq, n)
                          for bi in bvals])
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(qxy, qq, n),
                       ctx.inv_poch(qxz, qq, n), ups, downs,
                       ctx.pow_int(x, n))

    xq6 = ctx.mul(x, ctx.qpow(6))

    def rterm(n):
        ups = ctx.mul(*[ctx.poch(ctx.num(ai), qq, n) for ai in avals])
        downs = ctx.mul(*[ctx.inv_poch(ctx.mul(ctx.num(bi), qq), qq, n)
                          for bi in bvals])
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qq, qq, n), ctx.inv_poch(xy, qq, n),
                       ctx.inv_poch(xz, qq, n), ups, downs,
                       ctx.pow_int(xq6, n))

    return ctx.summation(lterm), ctx.mul(_pref(ctx, x, y, z),
                                         ctx.summation(rterm))


def _no_rational_pole(values, q: F, depth: int = 60) -> bool:
    """Reject numeric draws where some denominator entry sits exactly on
    a power q^{-t}; the factor (1 - v q^t) would vanish."""
    for v in values:
        w = F(v)
        for _ in range(depth):
            w *= q
            if w == 1:
                return False
            if abs(w) < 1:
                break
    return True


def _s_cpte3(rng, mode):
    out = _xyz(rng, mode)
    m = F(rng.choice([1, -1, 2, 3]), rng.choice([1, 2]))
    n = F(rng.choice([1, -1, 2, 3]), rng.choice([1, 2]))
    if m == n:
        return None
    avals, bvals = _family6_values(m, n)
    if sorted(avals) == sorted(bvals + [F(1)]):
        return None
    if any(not v for v in avals) or any(not v for v in bvals):
        return None
    if mode == "numeric" and not _no_rational_pole(bvals, out["q"]):
        return None
    out.update({"m": m, "n": n})
    return out


_F12_A = (170, 126, 209, 87, 234, 62, 275, 21, 288, 8, 299, -3)
_F12_B = (183, 113, 195, 101, 242, 54, 269, 27, 294, 2, 296)


def _b_cpte5(ctx, p):
    m = p["m"]
    avals = [1 + F(t) * m for t in _F12_A]
    bvals = [1 + F(t) * m for t in _F12_B]
    qq = ctx.qpow(1)
    z = ctx.qpow(12)

    def term(n):
        ups = ctx.mul(*[ctx.poch(ctx.num(ai), qq, n) for ai in avals])
        downs = ctx.mul(*[ctx.inv_poch(ctx.mul(ctx.num(bi), qq), qq, n)
                          for bi in bvals])
        return ctx.mul(ups, downs, ctx.inv_poch(qq, qq, n),
                       ctx.pow_int(z, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(*[ctx.poch_inf(ctx.mul(ctx.num(ai), qq), qq)
                    for ai in avals])
    rhs = ctx.mul(rhs, *[ctx.inv_poch_inf(ctx.mul(ctx.num(bi), qq), qq)
                         for bi in bvals])
    rhs = ctx.mul(rhs, ctx.inv_poch_inf(qq, qq))
    return lhs, rhs


def _s_cpte5(rng, mode):
    m = F(rng.choice([1, -1, 2, 3, 5]), rng.choice([1, 3, 4, 5]))
    if any(1 + F(t) * m == 0 for t in _F12_A + _F12_B):
        return None
    out = {"m": m}
    if mode == "numeric":
        out["q"] = _qv(rng)
        if not _no_rational_pole([1 + F(t) * m for t in _F12_B], out["q"]):
            return None
    return out


# -- bi-basic records ---------------------------------------------------------

def _b_bibasic_ab(ctx, p):
    x, y, z, pv, B = p["x"], p["y"], p["z"], p["p"], p["B"]
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    p2 = ctx.pow_int(pv, 2)
    nBp = ctx.neg(ctx.mul(B, pv))
    Bx = ctx.mul(B, x)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qxy, qq, n), ctx.inv_poch(qxz, qq, n),
                       ctx.inv_poch(nBp, p2, n), ctx.pow_int(Bx, n),
                       ctx.pow_int(pv, n * n))

    lhs = ctx.summation(lterm)

    def rterm(n):
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       ctx.inv_poch(nBp, p2, n), ctx.pow_int(Bx, n),
                       ctx.pow_int(pv, n * n - 2 * n))

    extra = max(0, B.exp - pv.exp) if ctx.mode == "exact" else 0
    inner = ctx.summation(rterm, start=1, extra=extra)
    rhs = ctx.mul(_pref(ctx, x, y, z),
                  ctx.sub(ctx.one(), ctx.mul(ctx.div(pv, B), inner)))
    return lhs, rhs


def _b_bibasic_ab2(ctx, p):
    x, y, z, pv, B = p["x"], p["y"], p["z"], p["p"], p["B"]
    qq = ctx.qpow(1)
    k = ctx.mul(x, y, z)
    Bx = ctx.mul(B, x)
    qxy, qxz = ctx.mul(qq, x, y), ctx.mul(qq, x, z)
    xy, xz = ctx.mul(x, y), ctx.mul(x, z)

    def lterm(n):
        return ctx.mul(ctx.vwp(k, n), ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(qxy, qq, n), ctx.inv_poch(qxz, qq, n),
                       ctx.pow_int(Bx, n), ctx.pow_int(pv, n * n))

    lhs = ctx.summation(lterm)

    def rterm(n):
        tail = ctx.sub(ctx.one(), ctx.mul(B, ctx.pow_int(pv, 2 * n - 1)))
        return ctx.mul(ctx.poch(y, qq, n), ctx.poch(z, qq, n),
                       ctx.inv_poch(xy, qq, n), ctx.inv_poch(xz, qq, n),
                       tail, ctx.pow_int(Bx, n),
                       ctx.pow_int(pv, n * n - 2 * n))

    extra = max(0, B.exp - pv.exp) if ctx.mode == "exact" else 0
    inner = ctx.summation(rterm, start=1, extra=extra)
    rhs = ctx.mul(_pref(ctx, x, y, z),
                  ctx.sub(ctx.one(), ctx.mul(ctx.div(pv, B), inner)))
    return lhs, rhs


def _s_bibasic(rng, mode):
    # exact: p may sit on a half-integer q-power (odd t-exponent)
    if mode == "exact":
        out = _xyz(rng, "exact", d=2)
        out["p"] = QMonomial(rng.choice(SMALL_COEFS), rng.randint(1, 3))
        eB = rng.randint(0, 2)
        pool = [c for c in COEFS if not (eB == 0 and c == 1)]
        out["B"] = QMonomial(rng.choice(pool), eB)
        return out
    out = _xyz(rng, "numeric")
    del out["q"]
    out["p"] = rng.choice([F(1, 3), F(-1, 3), F(2, 5), F(1, 2), F(-2, 5)])
    out["B"] = rng.choice([F(1, 2), F(-1, 2), F(2, 3), F(3, 5), F(-3, 4)])
    out["__q_unit"] = rng.choice(QUPOOL)
    return out


def _b_rrs3eq1(ctx, p):
    x, a, b = p["x"], p["a"], p["b"]
    qq = ctx.qpow(1)
    xq = ctx.mul(x, qq)

    def lterm(n):
        e = a * n * n + b * n + F(n * (n - 1), 2)
        return ctx.mul(ctx.pow_int(ctx.neg(x), n), ctx.qpow(e),
                       ctx.inv_poch(xq, qq, n))

    lhs = ctx.summation(lterm)

    def rterm(n):
        e = a * n * n + (b - 2 * a) * n + F(n * (n - 1), 2)
        tail = ctx.sub(ctx.one(), ctx.qpow(2 * a * n + b - a))
        return ctx.mul(ctx.pow_int(ctx.neg(x), n), ctx.qpow(e), tail,
                       ctx.inv_poch(x, qq, n))

    extra = max(0, int(2 * (b - a))) if ctx.mode == "exact" else 0
    inner = ctx.summation(rterm, start=1, extra=extra)
    rhs = ctx.mul(ctx.sub(ctx.one(), x),
                  ctx.sub(ctx.one(), ctx.mul(ctx.qpow(a - b), inner)))
    return lhs, rhs


def _s_rrs3eq1(rng, mode):
    a = F(rng.choice([0, 1, 2, 3]), rng.choice([1, 2]))
    b = F(rng.choice([-1, 0, 1, 2, 3]), rng.choice([1, 2]))
    if mode == "exact":
        return {"x": QMonomial(rng.choice(SMALL_COEFS), 2 * rng.randint(1, 2)),
                "a": a, "b": b}
    return {"x": rng.choice([F(1, 2), F(-1, 2), F(2, 5), F(1, 3)]),
            "a": a, "b": b, "__q_unit": rng.choice(QUPOOL)}


def _b_bb_z0(ctx, p):
    x, y, ia, ib = p["x"], p["y"], p["a"], p["b"]
    q2 = ctx.qpow(2)
    base_a = ctx.qpow(2 * ia)
    narg = ctx.neg(ctx.qpow(ia + ib))
    xy = ctx.mul(x, y)

    def lterm(n):
        return ctx.mul(ctx.poch(y, q2, n), ctx.pow_int(x, n),
                       ctx.qpow(ia * n * n + ib * n),
                       ctx.inv_poch(ctx.mul(q2, xy), q2, n),
                       ctx.inv_poch(narg, base_a, n))

    lhs = ctx.summation(lterm)

    def rterm(n):
        return ctx.mul(ctx.poch(y, q2, n), ctx.pow_int(x, n),
                       ctx.qpow(ia * n * n + (ib - 2 * ia) * n),
                       ctx.inv_poch(xy, q2, n), ctx.inv_poch(narg, base_a, n))

    extra = max(0, ib - ia) if ctx.mode == "exact" else 0
    inner = ctx.summation(rterm, start=1, extra=extra)
    pref = ctx.mul(ctx.sub(ctx.one(), xy), ctx.inv(ctx.sub(ctx.one(), x)))
    rhs = ctx.mul(pref, ctx.sub(ctx.one(), ctx.mul(ctx.qpow(ia - ib), inner)))
    return lhs, rhs


def _s_bb_z0(rng, mode):
    ia = rng.randint(1, 2)
    ib = rng.randint(-ia, 3)
    if mode == "exact":
        return {"x": _mono(rng, 1, 2, pool=SMALL_COEFS),
                "y": _mono(rng, 0, 2), "a": ia, "b": ib}
    return {"x": rng.choice([F(1, 2), F(-1, 2), F(2, 5), F(1, 3)]),
            "y": _rat(rng), "a": ia, "b": ib, "q": _qv(rng)}


def _b_bb_yinf(ctx, p):
    x, ia, ib = p["x"], p["a"], p["b"]
    q2 = ctx.qpow(2)
    base_a = ctx.qpow(2 * ia)
    narg = ctx.neg(ctx.qpow(ia + ib))

    def lterm(n):
        return ctx.mul(ctx.pow_int(ctx.neg(x), n),
                       ctx.qpow((ia + 1) * n * n + (ib - 1) * n),
                       ctx.inv_poch(ctx.mul(q2, x), q2, n),
                       ctx.inv_poch(narg, base_a, n))

    lhs = ctx.summation(lterm)

    def rterm(n):
        return ctx.mul(ctx.pow_int(ctx.neg(x), n),
                       ctx.qpow((ia + 1) * n * n + (ib - 2 * ia - 1) * n),
                       ctx.inv_poch(x, q2, n), ctx.inv_poch(narg, base_a, n))

    extra = max(0, ib - ia) if ctx.mode == "exact" else 0
    inner = ctx.summation(rterm, start=1, extra=extra)
    rhs = ctx.mul(ctx.sub(ctx.one(), x),
                  ctx.sub(ctx.one(), ctx.mul(ctx.qpow(ia - ib), inner)))
    return lhs, rhs


def _s_bb_yinf(rng, mode):
    ia = rng.randint(1, 2)
    ib = rng.randint(-ia, 3)
    if mode == "exact":
        return {"x": _mono(rng, 1, 2, pool=SMALL_COEFS), "a": ia, "b": ib}
    return {"x": rng.choice([F(1, 2), F(-1, 2), F(2, 5), F(1, 3)]),
            "a": ia, "b": ib, "q": _qv(rng)}


# -- fixed single-base identities ---------------------------------------------

def _b_rrs3(ctx, p):
    qq = ctx.qpow(1)
    q4 = ctx.qpow(4)

    def term(n):
        head = ctx.add(ctx.one(), ctx.qpow(-2 * n + 3))
        return ctx.mul(head, ctx.qpow(n * n + 6 * n), ctx.inv_poch(q4, q4, n))

    lhs = ctx.summation(term)
    q5 = ctx.qpow(5)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(2), q5),
                  ctx.inv_poch_inf(ctx.qpow(3), q5),
                  ctx.inv_poch_inf(ctx.neg(ctx.qpow(2)), ctx.qpow(2)))
    return lhs, rhs


def _b_rrs3n(ctx, p):
    q4 = ctx.qpow(4)

    def term(n):
        head = ctx.add(ctx.one(), ctx.qpow(-2 * n + 1))
        return ctx.mul(head, ctx.qpow(n * n + 4 * n), ctx.inv_poch(q4, q4, n))

    lhs = ctx.summation(term)
    q5 = ctx.qpow(5)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(1), q5),
                  ctx.inv_poch_inf(ctx.qpow(4), q5),
                  ctx.inv_poch_inf(ctx.neg(ctx.qpow(2)), ctx.qpow(2)))
    return lhs, rhs


def _b_rogers1(ctx, p):
    q4 = ctx.qpow(4)
    lhs = ctx.summation(lambda n: ctx.mul(ctx.qpow(n * n + 2 * n),
                                          ctx.inv_poch(q4, q4, n)))
    q5 = ctx.qpow(5)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(2), q5),
                  ctx.inv_poch_inf(ctx.qpow(3), q5),
                  ctx.inv_poch_inf(ctx.neg(ctx.qpow(2)), ctx.qpow(2)))
    return lhs, rhs


def _b_rogers2(ctx, p):
    q4 = ctx.qpow(4)
    lhs = ctx.summation(lambda n: ctx.mul(ctx.qpow(n * n),
                                          ctx.inv_poch(q4, q4, n)))
    q5 = ctx.qpow(5)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(1), q5),
                  ctx.inv_poch_inf(ctx.qpow(4), q5),
                  ctx.inv_poch_inf(ctx.neg(ctx.qpow(2)), ctx.qpow(2)))
    return lhs, rhs


def _b_rrs6(ctx, p):
    b = p["b"]
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    q3b = ctx.mul(ctx.qpow(3), ctx.inv(b))

    def term(n):
        return ctx.mul(ctx.poch(b, qq, n), ctx.poch(q3b, qq, n),
                       ctx.qpow(F(n * (n + 1), 2)),
                       ctx.inv_poch(q2, q2, n + 1), ctx.inv_poch(qq, qq, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.poch_inf(ctx.mul(ctx.qpow(4), ctx.inv(b)), q2),
                  ctx.poch_inf(ctx.mul(b, qq), q2), ctx.inv_poch_inf(qq, qq))
    return lhs, rhs


def _s_rrs6(rng, mode):
    if mode == "exact":
        e = rng.randint(0, 3)
        pool = [c for c in COEFS if not (e in (0, 3) and c == 1)]
        return {"b": QMonomial(rng.choice(pool), e)}
    b = rng.choice([F(1, 2), F(-1, 2), F(1, 3), F(2, 5), F(-2, 5), F(3, 5)])
    return {"b": b, "q": _qv(rng)}


def _b_rrs6_2(ctx, p):
    q2 = ctx.qpow(2)
    nq3 = ctx.neg(ctx.qpow(3))

    def term(n):
        head = ctx.sub(ctx.one(), ctx.qpow(2 * n + 1))
        return ctx.mul(head, ctx.poch(nq3, q2, n), ctx.qpow(n * n),
                       ctx.inv_poch(q2, q2, n))

    lhs = ctx.summation(term)
    q8 = ctx.qpow(8)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(3), q8),
                  ctx.inv_poch_inf(ctx.qpow(4), q8),
                  ctx.inv_poch_inf(ctx.qpow(5), q8))
    return lhs, rhs


def _b_rrs6_3(ctx, p):
    q2 = ctx.qpow(2)
    nq3 = ctx.neg(ctx.qpow(3))

    def term(n):
        head = ctx.sub(ctx.one(), ctx.qpow(2 * n - 1))
        return ctx.mul(head, ctx.poch(nq3, q2, n), ctx.qpow(n * n - 2 * n),
                       ctx.inv_poch(q2, q2, n))

    lhs = ctx.summation(term)
    q8 = ctx.qpow(8)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(1), q8),
                  ctx.inv_poch_inf(ctx.qpow(4), q8),
                  ctx.inv_poch_inf(ctx.qpow(7), q8))
    return lhs, rhs


def _b_rrs6_4(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.poch(nq, qq, n), ctx.qpow(F(n * n - n, 2)),
                       ctx.inv_poch(qq, qq, n - 1))

    lhs = ctx.add(ctx.one(), ctx.summation(term, start=1))
    q16 = ctx.qpow(16)
    rhs = ctx.mul(ctx.poch_inf(ctx.num(-1), qq),
                  ctx.poch_inf(ctx.neg(ctx.qpow(6)), q16),
                  ctx.poch_inf(ctx.neg(ctx.qpow(10)), q16),
                  ctx.poch_inf(q16, q16),
                  ctx.inv_poch_inf(ctx.qpow(4), ctx.qpow(4)))
    return lhs, rhs


def _b_rrs6_5(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.poch(nq, qq, n), ctx.qpow(F(n * n - n, 2)),
                       ctx.inv_poch(qq, qq, n - 1))

    lhs = ctx.add(ctx.num(-1), ctx.summation(term, start=1))
    q16 = ctx.qpow(16)
    rhs = ctx.mul(ctx.qpow(1), ctx.poch_inf(ctx.num(-1), qq),
                  ctx.poch_inf(ctx.neg(ctx.qpow(2)), q16),
                  ctx.poch_inf(ctx.neg(ctx.qpow(14)), q16),
                  ctx.poch_inf(q16, q16),
                  ctx.inv_poch_inf(ctx.qpow(4), ctx.qpow(4)))
    return lhs, rhs


def _b_gg1a(ctx, p):
    q2 = ctx.qpow(2)
    nq = ctx.neg(ctx.qpow(1))
    lhs = ctx.summation(lambda n: ctx.mul(
        ctx.qpow(n * n + 2 * n), ctx.poch(nq, q2, n), ctx.inv_poch(q2, q2, n)))
    q8 = ctx.qpow(8)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(3), q8),
                  ctx.inv_poch_inf(ctx.qpow(4), q8),
                  ctx.inv_poch_inf(ctx.qpow(5), q8))
    return lhs, rhs


def _b_gg1b(ctx, p):
    q2 = ctx.qpow(2)
    nq = ctx.neg(ctx.qpow(1))
    lhs = ctx.summation(lambda n: ctx.mul(
        ctx.qpow(n * n), ctx.poch(nq, q2, n), ctx.inv_poch(q2, q2, n)))
    q8 = ctx.qpow(8)
    rhs = ctx.mul(ctx.inv_poch_inf(ctx.qpow(1), q8),
                  ctx.inv_poch_inf(ctx.qpow(4), q8),
                  ctx.inv_poch_inf(ctx.qpow(7), q8))
    return lhs, rhs


def _b_qbailey(ctx, p):
    b, c = p["b"], p["c"]
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    qb = ctx.mul(qq, ctx.inv(b))

    def term(n):
        return ctx.mul(ctx.poch(b, qq, n), ctx.poch(qb, qq, n),
                       ctx.pow_int(c, n), ctx.qpow(F(n * (n - 1), 2)),
                       ctx.inv_poch(c, qq, n), ctx.inv_poch(q2, q2, n))

    lhs = ctx.summation(term)
    rhs = ctx.mul(ctx.poch_inf(ctx.mul(c, qq, ctx.inv(b)), q2),
                  ctx.poch_inf(ctx.mul(b, c), q2), ctx.inv_poch_inf(c, qq))
    return lhs, rhs


def _s_qbailey(rng, mode):
    if mode == "exact":
        ec = rng.randint(1, 2)
        c = QMonomial(rng.choice(SMALL_COEFS), ec)
        eb = rng.randint(0, 2)
        pool = [cf for cf in COEFS if not (eb in (0, 1) and cf == 1)]
        return {"b": QMonomial(rng.choice(pool), eb), "c": c}
    return {"b": rng.choice([F(1, 2), F(-1, 2), F(2, 5), F(3, 5)]),
            "c": rng.choice([F(1, 3), F(-1, 3), F(1, 4), F(2, 7)]),
            "q": _qv(rng)}


def _b_gs1(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.poch(nq, qq, n - 1), ctx.qpow(F(n * n + n, 2)),
                       ctx.inv_poch(qq, qq, n))

    lhs = ctx.add(ctx.one(), ctx.summation(term, start=1))
    q16 = ctx.qpow(16)
    rhs = ctx.mul(ctx.poch_inf(nq, qq),
                  ctx.poch_inf(ctx.neg(ctx.qpow(6)), q16),
                  ctx.poch_inf(ctx.neg(ctx.qpow(10)), q16),
                  ctx.poch_inf(q16, q16),
                  ctx.inv_poch_inf(ctx.qpow(4), ctx.qpow(4)))
    return lhs, rhs


def _b_gs2(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.poch(nq, qq, n), ctx.qpow(F(n * n + 3 * n, 2)),
                       ctx.inv_poch(qq, qq, n + 1))

    lhs = ctx.summation(term)
    q16 = ctx.qpow(16)
    rhs = ctx.mul(ctx.poch_inf(nq, qq),
                  ctx.poch_inf(ctx.neg(ctx.qpow(2)), q16),
                  ctx.poch_inf(ctx.neg(ctx.qpow(14)), q16),
                  ctx.poch_inf(q16, q16),
                  ctx.inv_poch_inf(ctx.qpow(4), ctx.qpow(4)))
    return lhs, rhs


def _b_slater69(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    nq2 = ctx.neg(q2)

    def term(n):
        return ctx.mul(ctx.poch(nq2, q2, n), ctx.qpow(n * n + 2 * n),
                       ctx.inv_poch(qq, qq, 2 * n + 2))

    lhs = ctx.summation(term)
    q16 = ctx.qpow(16)
    rhs = ctx.mul(ctx.poch_inf(ctx.neg(q2), q16),
                  ctx.poch_inf(ctx.neg(ctx.qpow(14)), q16),
                  ctx.poch_inf(q16, q16),
                  ctx.poch_inf(ctx.neg(qq), q2),
                  ctx.inv_poch_inf(q2, q2))
    return lhs, rhs


def _b_slater121(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    nq2 = ctx.neg(q2)

    def term(n):
        return ctx.mul(ctx.poch(nq2, q2, n - 1), ctx.qpow(n * n),
                       ctx.inv_poch(qq, qq, 2 * n))

    lhs = ctx.add(ctx.one(), ctx.summation(term, start=1))
    q16, q32 = ctx.qpow(16), ctx.qpow(32)
    rhs = ctx.mul(ctx.poch_inf(q2, q16), ctx.poch_inf(ctx.qpow(14), q16),
                  ctx.poch_inf(q16, q16), ctx.poch_inf(ctx.qpow(12), q32),
                  ctx.poch_inf(ctx.qpow(20), q32), ctx.inv_poch_inf(qq, qq))
    return lhs, rhs


def _b_s69(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    nq2 = ctx.neg(q2)

    def term(n):
        return ctx.mul(ctx.poch(nq2, q2, n + 1), ctx.qpow(n * n + 2 * n),
                       ctx.inv_poch(qq, qq, 2 * n + 3))

    lhs = ctx.summation(term)
    q16 = ctx.qpow(16)
    prod = ctx.mul(ctx.poch_inf(ctx.neg(q2), q16),
                   ctx.poch_inf(ctx.neg(ctx.qpow(14)), q16),
                   ctx.poch_inf(q16, q16),
                   ctx.poch_inf(ctx.neg(qq), q2),
                   ctx.inv_poch_inf(q2, q2))
    rhs = ctx.sub(ctx.mul(ctx.num(2), prod),
                  ctx.inv(ctx.sub(ctx.one(), qq)))
    return lhs, rhs


def _b_s121(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    nq2 = ctx.neg(q2)

    def term(n):
        return ctx.mul(ctx.poch(nq2, q2, n), ctx.qpow(n * n),
                       ctx.inv_poch(qq, qq, 2 * n + 1))

    lhs = ctx.summation(term)
    q16, q32 = ctx.qpow(16), ctx.qpow(32)
    prod = ctx.mul(ctx.poch_inf(q2, q16), ctx.poch_inf(ctx.qpow(14), q16),
                   ctx.poch_inf(q16, q16), ctx.poch_inf(ctx.qpow(12), q32),
                   ctx.poch_inf(ctx.qpow(20), q32), ctx.inv_poch_inf(qq, qq))
    rhs = ctx.sub(ctx.mul(ctx.num(2), prod), ctx.one())
    return lhs, rhs


# -- false theta records -------------------------------------------------------

def _false_theta_half(ctx):
    return ctx.summation(lambda n: ctx.mul(ctx.num((-1) ** n),
                                           ctx.qpow(F(n * (n + 1), 2))))


def _false_theta_third(ctx):
    def term(n):
        e = F(n * (3 * n + 1), 2)
        return ctx.sub(ctx.qpow(e), ctx.qpow(e + 2 * n + 1))
    return ctx.summation(term)


def _b_r1(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.poch(qq, q2, n), ctx.num((-1) ** n),
                       ctx.qpow(n * n + n), ctx.inv_poch(nq, qq, 2 * n + 1))

    return ctx.summation(term), _false_theta_half(ctx)


def _b_r2a(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.qpow(2 * n * n + n),
                       ctx.inv_poch(nq, qq, 2 * n + 1))

    return _false_theta_third(ctx), ctx.summation(term)


def _b_r2b(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        return ctx.mul(ctx.num((-1) ** n), ctx.qpow(F(n * (n + 1), 2)),
                       ctx.inv_poch(nq, qq, n))

    return _false_theta_third(ctx), ctx.summation(term)


def _b_ft1(ctx, p):
    qq = ctx.qpow(1)
    q2 = ctx.qpow(2)

    def term(n):
        return ctx.mul(ctx.poch(qq, q2, n), ctx.num((-1) ** n),
                       ctx.qpow(n * n - n), ctx.inv_poch(ctx.num(-1), qq,
                                                         2 * n + 1))

    lhs = ctx.sub(ctx.one(), ctx.summation(term))
    return lhs, _false_theta_half(ctx)


def _b_ft2(ctx, p):
    qq = ctx.qpow(1)
    nq = ctx.neg(qq)

    def term(n):
        tail = ctx.inv(ctx.add(ctx.one(), ctx.qpow(2 * n + 3)))
        return ctx.mul(ctx.qpow(2 * n * n + 3 * n),
                       ctx.inv_poch(nq, qq, 2 * n + 1), tail)

    lhs = ctx.sub(ctx.mul(ctx.num(2), ctx.inv(ctx.add(ctx.one(), qq))),
                  ctx.summation(term))
    return lhs, _false_theta_third(ctx)


def _b_ft3(ctx, p):
    qq = ctx.qpow(1)

    def term(n):
        return ctx.mul(ctx.num((-1) ** n), ctx.qpow(F(n * (n + 1), 2)),
                       ctx.inv_poch(ctx.num(-1), qq, n + 2))

    lhs = ctx.add(ctx.num(F(1, 2)), ctx.summation(term))
    return lhs, _false_theta_third(ctx)


def _s_none(rng, mode):
    return {"q": _qv(rng)} if mode == "numeric" else {}


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

def _rec(id, anchor, covers, schema, build, sampler, d=1,
         strategies=("exact", "numeric"), note=None, headroom=4):
    return IdentityRecord(id, anchor, tuple(covers),
                          tuple(ParamSpec(*s) for s in schema), build,
                          sampler, d, tuple(strategies), note, headroom)


RECORDS = [
    _rec("qgauss", "q-Gauss summation",
         ["q-gauss-sum"],
         [("a", "monomial", "upper"), ("b", "monomial", "upper"),
          ("c", "monomial", "lower; exp(c) >= exp(a)+exp(b)+1")],
         _b_qgauss, _s_qgauss),
    _rec("qbinom", "q-binomial theorem",
         ["q-binomial-theorem"],
         [("a", "monomial", "numerator"), ("z", "monomial", "exp >= 1")],
         _b_qbinom, _s_qbinom),
    _rec("bailey-transform",
         "classical transform for a pair relative to a (k = 0)",
         ["classical-transform"],
         [("a", "monomial", ""), ("y", "monomial", "exp >= 1"),
          ("z", "monomial", "exp >= 1")],
         _b_bailey_transform, _s_bailey_transform),
    _rec("thm-wp-transform", "well-poised transform with seed sequence",
         ["wp-transform", "wp-pair-def", "wp-chain-step"],
         [("a", "monomial", ""), ("k", "monomial", "exp(k) >= exp(a)"),
          ("r1", "monomial", "exp >= 1"), ("r2", "monomial", "exp >= 1")],
         _b_thm_wp, _s_thm_wp),
    _rec("cor-central", "partial-sum transform, arbitrary finite sequence",
         ["partial-sum-transform"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", "")] +
         [(f"alpha{i}", "rational", "sequence entry") for i in range(6)],
         _b_cor_central, _s_cor_central),
    _rec("alt-alpha", "alternating sequence: even-index collapse",
         ["alt-alpha-transform"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", "")],
         _b_alt_alpha, _s_xyz_only),
    _rec("alt-sum", "alternating-sequence summation",
         ["alt-alpha-sum"],
         [("x", "monomial", "exact strategy: x = c*q")],
         _b_alt_sum, _s_x_unit),
    _rec("ones-alpha", "all-ones sequence: weighted transform",
         ["ones-alpha-transform"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", "")],
         _b_ones_alpha, _s_xyz_only),
    _rec("ones-sum", "all-ones sequence summation",
         ["ones-alpha-sum"],
         [("x", "monomial", "exact strategy: x = c*q")],
         _b_ones_sum, _s_x_unit),
    _rec("u-power", "geometric sequence summation",
         ["u-power-sum"],
         [("x", "monomial", "exact strategy: x = c*q"),
          ("u", "monomial", "u != 1")],
         _b_u_power, _s_x_unit_u),
    _rec("phi54", "5-on-4 series transform via telescoping",
         ["phi-5-4", "phi-series-def"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("c", "monomial", "c != 1")],
         _b_phi54, _s_phi54),
    _rec("phi32", "3-on-2 summation from the q-Gauss route",
         ["phi-3-2"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", "")],
         _b_phi32, _s_phi32),
    _rec("poly2", "five-base transform from the finite telescoping identity",
         ["pentabasic-transform", "multibasic-telescoping"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("a", "rational", "a != 1"),
          ("b", "rational", "b != 1"), ("c", "rational", "c != 0, 1; a != bc"),
          ("p", "monomial", "base"), ("P", "monomial", "base"),
          ("Q", "monomial", "base"), ("R", "monomial", "base")],
         _b_poly2, _s_poly2),
    _rec("poly2q", "single-base collapse of the five-base transform",
         ["pentabasic-basic-case"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("a", "rational", "a != 1"),
          ("b", "rational", ""), ("c", "rational", "c != 0; a != bc"),
          ("m", "integer", "base power, >= 1")],
         _b_poly2q, _s_poly2q),
    _rec("phi65", "6-on-5 to 4-on-3 transform via two-parameter telescoping",
         ["phi-6-5-telescoped"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("a", "rational", ""),
          ("b", "rational", "")],
         _b_phi65, _s_phi65),
    _rec("ppte-m", "size-(2,1) bridge pair transform",
         ["bridge-condition-transform"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("a1", "rational", ""),
          ("a2", "rational", "a1 + a2 != 1")],
         _b_ppte_m, _s_ppte_m),
    _rec("cpte3", "size-6 quadratic family transform (10-on-9)",
         ["family6-transform", "family6-raw", "family6-normalized",
          "affine-invariance"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""), ("m", "rational", "nonzero"),
          ("n", "rational", "nonzero, nondegenerate")],
         _b_cpte3, _s_cpte3),
    _rec("cpte5", "size-12 family: 12-on-11 summation",
         ["family12-transform", "family12", "pte-definition",
          "ideal-poly-criterion"],
         [("m", "rational", "nonzero; no entry may vanish")],
         _b_cpte5, _s_cpte5,
         note="the eleven-entry denominator list includes the eighth "
              "parameter, which some printings of this summation omit; "
              "verification confirms the full list"),
    _rec("bibasic-ab", "bi-basic series with quadratic exponent, "
         "second-base shifted factorials",
         ["bibasic-half-series", "bibasic-general"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""),
          ("p", "monomial", "second base; half q-powers allowed"),
          ("B", "monomial", "nonzero")],
         _b_bibasic_ab, _s_bibasic, d=2, headroom=14),
    _rec("bibasic-ab2", "bi-basic series with quadratic exponent, plain",
         ["bibasic-half-series-2", "bibasic-general-2"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("z", "monomial", ""),
          ("p", "monomial", "second base; half q-powers allowed"),
          ("B", "monomial", "nonzero")],
         _b_bibasic_ab2, _s_bibasic, d=2, headroom=14),
    _rec("rrs3eq1", "single-variable reduction with free quadratic exponent",
         ["rr-intermediate"],
         [("x", "monomial", "exp >= 1"), ("a", "rational", "half-integers, >= 0"),
          ("b", "rational", "half-integers")],
         _b_rrs3eq1, _s_rrs3eq1, d=2, headroom=18),
    _rec("rrs3", "mod-5 identity, shifted variant A",
         ["rr-slater-1"], [], _b_rrs3, _s_none, headroom=8),
    _rec("rrs3n", "mod-5 identity, shifted variant B",
         ["rr-slater-2"], [], _b_rrs3n, _s_none, headroom=8),
    _rec("rrs6", "two-parameter mod-2 product identity",
         ["rr-slater-3"],
         [("b", "monomial", "0 <= exp <= 3")],
         _b_rrs6, _s_rrs6),
    _rec("rrs6-2", "mod-8 identity, weighted variant A",
         ["rr-slater-4"], [], _b_rrs6_2, _s_none),
    _rec("rrs6-3", "mod-8 identity, weighted variant B",
         ["rr-slater-5"], [], _b_rrs6_3, _s_none, headroom=8),
    _rec("rrs6-4", "mod-16 identity, +1 head",
         ["rr-slater-6"], [], _b_rrs6_4, _s_none),
    _rec("rrs6-5", "mod-16 identity, -1 head",
         ["rr-slater-7"], [], _b_rrs6_5, _s_none),
    _rec("gg1a", "Gollnitz-Gordon-Slater identity, first",
         ["gollnitz-gordon-1"], [], _b_gg1a, _s_none),
    _rec("gg1b", "Gollnitz-Gordon-Slater identity, second",
         ["gollnitz-gordon-2"], [], _b_gg1b, _s_none),
    _rec("rogers1", "Rogers mod-5 identity, quartic base, first",
         ["rogers-mod5-1"], [], _b_rogers1, _s_none),
    _rec("rogers2", "Rogers mod-5 identity, quartic base, second",
         ["rogers-mod5-2"], [], _b_rogers2, _s_none),
    _rec("qbailey", "Andrews' q-analog of Bailey's sum",
         ["q-bailey-sum"],
         [("b", "monomial", ""), ("c", "monomial", "lower; exp >= 1")],
         _b_qbailey, _s_qbailey),
    _rec("gs1", "Gessel-Stanton mod-16 summation, first",
         ["gessel-stanton-1"], [], _b_gs1, _s_none),
    _rec("gs2", "Gessel-Stanton mod-16 summation, second",
         ["gessel-stanton-2"], [], _b_gs2, _s_none),
    _rec("slater69", "Slater's list identity 69",
         ["slater-69"], [], _b_slater69, _s_none),
    _rec("slater121", "Slater's list identity 121",
         ["slater-121"], [], _b_slater121, _s_none),
    _rec("s69", "shifted variant of Slater's identity 69",
         ["slater-69-shifted"], [], _b_s69, _s_none),
    _rec("s121", "shifted variant of Slater's identity 121",
         ["slater-121-shifted"], [], _b_s121, _s_none),
    _rec("r1", "false theta of triangular type as a quotient series",
         ["lost-notebook-1", "false-theta-half"], [], _b_r1, _s_none),
    _rec("r2a", "false theta of pentagonal type, first quotient form",
         ["lost-notebook-2a", "false-theta-third"], [], _b_r2a, _s_none),
    _rec("r2b", "false theta of pentagonal type, second quotient form",
         ["lost-notebook-2b"], [], _b_r2b, _s_none),
    _rec("ft1", "new representation of the triangular false theta",
         ["false-theta-1"], [], _b_ft1, _s_none,
         note="encoded exactly as displayed (leading 1 minus the sum); "
              "verification confirms the display"),
    _rec("ft2", "new representation of the pentagonal false theta, first",
         ["false-theta-2"], [], _b_ft2, _s_none),
    _rec("ft3", "new representation of the pentagonal false theta, second",
         ["false-theta-3"], [], _b_ft3, _s_none),
    _rec("bb-z0", "bi-basic collapse: one numerator parameter, squared base",
         ["bibasic-z0"],
         [("x", "monomial", "exp >= 1"), ("y", "monomial", ""),
          ("a", "integer", ">= 1"), ("b", "integer", "")],
         _b_bb_z0, _s_bb_z0, headroom=12),
    _rec("bb-yinf", "bi-basic collapse: quadratic exponent only",
         ["bibasic-yinf"],
         [("x", "monomial", "exp >= 1"), ("a", "integer", ">= 1"),
          ("b", "integer", "")],
         _b_bb_yinf, _s_bb_yinf, headroom=12),
]
