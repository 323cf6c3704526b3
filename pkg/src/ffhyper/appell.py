"""The double-sum F1 analogue over F_q and closed-form right-hand sides.

``f1_double(F, A, B, Bp, C, x, y)`` is

    eps(xy) BB'(-1) sum_{u,v} B(u) B'(v) C conj(B) conj(B')(1-u-v) conj(A)(1-ux-vy)

with both sums over all of F_q.  The other evaluators in this module give
closed forms for it (general expansion, y = 1, the B' = eps and B = eps
reductions, and the generating function in the first character).  Each
closed form is exposed as a list of its terms so that a mismatch
can be traced to a single term.

Every right-hand side recomputes its 2F1 values and binomials through
:mod:`ffhyper.hypergeometric` and :mod:`ffhyper.characters`; nothing is
shared with the left-hand side except the field tables.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .characters import binom, binom_table, char_at_minus_one, char_eval, cmul, delta_char, mono
from .cyclo import CycVal, cyclic_conv, shift_sum
from .errors import DomainRestriction
from .field import FieldCtx
from .hypergeometric import eps, f21_charsum


# -- the two F1 analogues -----------------------------------------------------

@lru_cache(maxsize=1 << 16)
def f1_table(F: FieldCtx, B: int, Bp: int, C: int, x: int, y: int) -> np.ndarray:
    """F1(A; B, B'; C; x, y) for every first character A at once.

    Row ``a`` of the result is the numerator of the value for ``A = a``.
    """
    n = F.q - 1
    out = np.zeros((n, n), dtype=np.int64)
    if x == 0 or y == 0:
        out.setflags(write=False)
        return out
    u, v = np.divmod(np.arange(F.q * F.q), F.q)
    lu, lv = F.log_table[u], F.log_table[v]
    lw = F.log_table[F.sub_v(F.sub_v(1, u), v)]
    lz = F.log_table[F.sub_v(F.sub_v(1, F.mul_v(u, x)), F.mul_v(v, y))]
    ok = (lu >= 0) & (lv >= 0) & (lw >= 0) & (lz >= 0)
    base = (B * lu + Bp * lv + (C - B - Bp) * lw)[ok] + (B + Bp) * F.log_table[F.minus_one]
    lz = lz[ok]
    a = np.arange(n)[:, None]
    flat = a * n + (base[None, :] - a * lz[None, :]) % n
    out = np.bincount(flat.ravel(), minlength=n * n).reshape(n, n).astype(np.int64)
    out.setflags(write=False)
    return out


def f1_double(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int) -> CycVal:
    n = F.q - 1
    return CycVal(f1_table(F, B % n, Bp % n, C % n, x, y)[A % n], 1, F.q * F.q)


def f1_single(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int) -> CycVal:
    """The earlier single-sum analogue,
    eps(xy) AC(-1) sum_u A(u) conj(A)C(1-u) conj(B)(1-ux) conj(B')(1-uy).

    A different object from :func:`f1_double`; kept for comparison only.
    """
    n = F.q - 1
    if x == 0 or y == 0:
        return CycVal.zero(n)
    u = np.arange(F.q)
    lu = F.log_table[u]
    l1u = F.log_table[F.sub_v(1, u)]
    l1ux = F.log_table[F.sub_v(1, F.mul_v(u, x))]
    l1uy = F.log_table[F.sub_v(1, F.mul_v(u, y))]
    ok = (lu >= 0) & (l1u >= 0) & (l1ux >= 0) & (l1uy >= 0)
    e = (A * lu + (C - A) * l1u - B * l1ux - Bp * l1uy)[ok] + (A + C) * F.log_table[F.minus_one]
    return CycVal(np.bincount(e % n, minlength=n).astype(np.int64), 1, int(ok.sum()))


# -- general expansion in two character sums ---------------------------------

@lru_cache(maxsize=1 << 12)
def pair_products(F: FieldCtx, A: int, B: int, Bp: int, C: int) -> np.ndarray:
    """``P[lam, mu]`` = {conj(B B') C choose conj(B') C lam} {A lam choose lam}
    {A lam mu choose mu} {conj(B') C lam choose C lam mu}."""
    n = F.q - 1
    T = binom_table(F)
    lam = np.arange(n)[:, None]
    mu = np.arange(n)[None, :]
    full = (n, n, n)
    b1 = np.broadcast_to(T[(C - B - Bp) % n, (C - Bp + lam) % n], full)
    b2 = np.broadcast_to(T[(A + lam) % n, lam % n], full)
    b3 = T[(A + lam + mu) % n, mu % n]
    b4 = T[(C - Bp + lam) % n, (C + lam + mu) % n]
    w = (F.q - 2) ** 2
    P = cyclic_conv(cyclic_conv(b1, b2, w), cyclic_conv(b3, b4, w), w * w)
    P.setflags(write=False)
    return P


def _check_thm21(y: int) -> None:
    if y == 0:
        raise DomainRestriction("the general F1 expansion requires y != 0")


def thm21_terms(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int,
                allow_y0: bool = False) -> list[CycVal]:
    """The four terms of the general expansion of F1(A; B, B'; C; x, y).

    ``allow_y0`` evaluates the same formula at y = 0, which lies outside the
    proven range; only the empirical probe uses it.
    """
    if not allow_y0:
        _check_thm21(y)
    n = F.q - 1
    q1 = n
    m1 = F.minus_one
    chi = lambda j, z: char_eval(F, j, z)  # noqa: E731
    sgn = lambda j: char_at_minus_one(F, j)  # noqa: E731
    one_minus_y = F.sub(1, y)

    if x == 0 or y == 0:
        t1 = CycVal.zero(n).div_int(q1 * q1)
    else:
        P = pair_products(F, A % n, B % n, Bp % n, C % n).reshape(n * n, n)
        lam, mu = np.divmod(np.arange(n * n), n)
        t1 = CycVal(shift_sum(P, lam * F.log_table[F.neg(x)] + mu * F.log_table[F.neg(y)]),
                    q1 * q1, (F.q - 2) ** 4 * n * n)

    t2 = binom(F, A + Bp - C, Bp - C) * mono(F, cmul(
        sgn(C), chi(Bp - C, x), chi(C - A - Bp, one_minus_y)))
    t3 = binom(F, A + Bp - C, A - B) * mono(F, cmul(
        sgn(B + C), chi(-A, x), chi(A - C, y), chi(C - A - Bp, one_minus_y)))
    t4 = mono(F, cmul(chi(-A, x), chi(Bp, m1))).scale(
        q1 * delta_char(F, A - C + Bp) * int(F.sub(y, 1) == 0))
    return [t1, t2, t3, t4]


def thm21_rhs(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int) -> CycVal:
    t1, t2, t3, t4 = thm21_terms(F, A, B, Bp, C, x, y)
    return t1 + t2 + t3 + t4


def f1_at_y1_terms(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int) -> list[CycVal]:
    """Closed form of F1(A; B, B'; C; x, 1): a 2F1 term and a delta term."""
    n = F.q - 1
    t1 = (binom(F, Bp, C - A) * f21_charsum(F, A, B, C - Bp, x)).shift(
        char_at_minus_one(F, A + Bp))
    t2 = mono(F, cmul(char_eval(F, -A, x), char_at_minus_one(F, Bp))).scale(
        n * delta_char(F, A - C + Bp))
    return [t1, t2]


def f1_at_y1_rhs(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int) -> CycVal:
    t1, t2 = f1_at_y1_terms(F, A, B, Bp, C, x)
    return t1 + t2


# -- reductions with one trivial lower character ------------------------------

def thm31_terms(F: FieldCtx, A: int, B: int, C: int, x: int, y: int) -> list[CycVal]:
    """Closed form of F1(A; B, eps; C; x, y), valid for y not in {0, 1}."""
    if y in (0, 1):
        raise DomainRestriction("the B' = eps reduction requires y not in {0, 1}")
    return _reduction_terms(F, A, B, C, x, y)


def thm32_terms(F: FieldCtx, A: int, Bp: int, C: int, x: int, y: int) -> list[CycVal]:
    """Closed form of F1(A; eps, B'; C; x, y), valid for x not in {0, 1}.

    Same shape as :func:`thm31_terms` with (x, B) and (y, B') exchanged.
    """
    if x in (0, 1):
        raise DomainRestriction("the B = eps reduction requires x not in {0, 1}")
    return _reduction_terms(F, A, Bp, C, y, x)


def _reduction_terms(F: FieldCtx, A: int, B: int, C: int, x: int, y: int) -> list[CycVal]:
    # written for F1(A; B, eps; C; x, y); thm32 passes its arguments swapped
    n = F.q - 1
    chi = lambda j, z: char_eval(F, j, z)  # noqa: E731
    one_minus_y = F.sub(1, y)
    y_minus_x = F.sub(y, x)

    t1 = -f21_charsum(F, A, B, C, x).shift(char_at_minus_one(F, C))
    t2 = (binom(F, A - C, A) * binom(F, B, C)) * mono(F, cmul(
        eps(x), chi(B - C, y), chi(C - A, one_minus_y), chi(-B, y_minus_x)))
    t3 = binom(F, C, A) * mono(F, cmul(chi(-C, y), chi(C - A, F.neg(one_minus_y)))).scale(
        n * int(y_minus_x == 0) * delta_char(F, B))
    t4 = mono(F, cmul(chi(-C, x), chi(B - C, y), chi(C - A, one_minus_y),
                      chi(C - B, y_minus_x))).scale(n * delta_char(F, C))
    return [t1, t2, t3, t4]


def thm31_rhs(F: FieldCtx, A: int, B: int, C: int, x: int, y: int) -> CycVal:
    t1, t2, t3, t4 = thm31_terms(F, A, B, C, x, y)
    return t1 + t2 + t3 + t4


def thm32_rhs(F: FieldCtx, A: int, Bp: int, C: int, x: int, y: int) -> CycVal:
    t1, t2, t3, t4 = thm32_terms(F, A, Bp, C, x, y)
    return t1 + t2 + t3 + t4


# -- generating function in the first character -------------------------------

def _check_genfun(x: int, y: int, t: int) -> None:
    if x == 0 or y in (0, 1) or t in (0, 1):
        raise DomainRestriction("generating function needs x != 0 and y, t not in {0, 1}")


def genfun_lhs(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int, t: int) -> CycVal:
    """(1/(q-1)) sum_theta {A theta choose theta} F1(A theta; B, B'; C; x, y) theta(t).

    Uses the table of F1 over all first characters for fixed (B, B', C, x, y).
    """
    _check_genfun(x, y, t)
    n = F.q - 1
    rows = f1_table(F, B % n, Bp % n, C % n, x, y)
    theta = np.arange(n)
    at = (A + theta) % n
    P = cyclic_conv(binom_table(F)[at, theta], rows[at], (F.q - 2) * F.q * F.q)
    return CycVal(shift_sum(P, theta * F.log_table[t]), n, (F.q - 2) * F.q * F.q * n)


def genfun_terms(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int,
                 t: int) -> list[CycVal]:
    """The nine right-hand-side terms of the generating function, in order."""
    _check_genfun(x, y, t)
    n = F.q - 1
    chi = lambda j, z: char_eval(F, j, z)  # noqa: E731
    sgn = lambda j: char_at_minus_one(F, j)  # noqa: E731
    s = F.sub(1, t)
    s_inv = F.inv(s)
    one_minus_y = F.sub(1, y)
    s_minus_y = F.sub(s, y)  # 1 - t - y
    neg_t = F.neg(t)
    arg3 = F.div(F.mul(x, one_minus_y), F.mul(t, y))
    arg9 = F.div(F.mul(t, y), F.mul(x, one_minus_y))
    b_ab = binom(F, A + Bp - C, A - B)

    t1 = f1_double(F, A, B, Bp, C, F.mul(x, s_inv), F.mul(y, s_inv)).shift(chi(-A, s))
    t2 = -(b_ab * mono(F, cmul(sgn(B + C), chi(Bp, s), chi(-A, x), chi(A - C, y),
                               chi(C - A - Bp, s_minus_y))))
    t3 = -(f21_charsum(F, A, B, C - Bp, arg3) * mono(F, cmul(
        chi(-A, neg_t), sgn(Bp), chi(-C, y), chi(C - Bp, one_minus_y))))
    t4 = -(binom(F, C - Bp, C) * binom(F, C - B - Bp, C - Bp) * mono(F, chi(-A, neg_t)))
    t5 = -(f1_double(F, 0, B, Bp, C, x, y) * mono(F, chi(-A, neg_t)))
    t6 = mono(F, cmul(chi(-A, neg_t), sgn(C))).scale(n * delta_char(F, Bp - C))
    t7 = mono(F, cmul(sgn(A + C), chi(Bp - C, x))).scale(
        n * int(s_minus_y == 0) * delta_char(F, A + Bp - C))
    t8 = b_ab * mono(F, cmul(sgn(B), chi(-A, F.neg(x)), chi(A - C, y),
                             chi(C - A - Bp, s_minus_y), chi(Bp, s)))
    t9 = f21_charsum(F, A, A + Bp - C, A - B, arg9) * mono(F, cmul(
        sgn(B + C), chi(-A, x), chi(A - C, y), chi(C - A - Bp, one_minus_y)))
    return [t1, t2, t3, t4, t5, t6, t7, t8, t9]


def genfun_rhs(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int, t: int) -> CycVal:
    total = CycVal.zero(F.q - 1)
    for term in genfun_terms(F, A, B, Bp, C, x, y, t):
        total = total + term
    return total


# Weights turning the nine terms into an identity that holds on the
# whole domain: terms 5 and 6 change sign; term 7 cancels the delta
# contribution of F1 at y/(1-t) = 1; term 8 carries an extra AC(-1) and then
# cancels term 2.
GENFUN_CORRECTED_WEIGHTS = (1, 0, 1, 1, -1, -1, 0, 0, 1)


def genfun_corrected_terms(F: FieldCtx, A: int, B: int, Bp: int, C: int, x: int, y: int,
                           t: int) -> list[CycVal]:
    terms = genfun_terms(F, A, B, Bp, C, x, y, t)
    return [term.scale(w) for term, w in zip(terms, GENFUN_CORRECTED_WEIGHTS) if w]
