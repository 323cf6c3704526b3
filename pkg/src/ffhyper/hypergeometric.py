"""Gauss 2F1 and n+1Fn over F_q, plus three closed-form reductions.

Both 2F1 forms are kept independent of each other: :func:`f21_point` is a
q-term sum over field elements and :func:`f21_charsum` is a (q-1)-term sum
of products of binomials.  Agreement between the two is a real check, not a
restatement.
"""
from __future__ import annotations

import numpy as np

from .characters import binom, binom_table, char_at_minus_one, char_eval, cmul, delta_char, mono
from .cyclo import CycVal, cyclic_conv, shift_sum
from .errors import ArityMismatch
from .field import FieldCtx


def eps(x: int) -> int:
    """Trivial character at a point, as an exponent-or-None value."""
    return None if x == 0 else 0


def f21_point(F: FieldCtx, A: int, B: int, C: int, x: int) -> CycVal:
    """eps(x) BC(-1) sum_y B(y) conj(B)C(1-y) conj(A)(1-xy)."""
    n = F.q - 1
    if x == 0:
        return CycVal.zero(n)
    y = np.arange(F.q)
    ly = F.log_table[y]
    l1y = F.log_table[F.sub_v(1, y)]
    l1xy = F.log_table[F.sub_v(1, F.mul_v(x, y))]
    ok = (ly >= 0) & (l1y >= 0) & (l1xy >= 0)
    e = (B * ly + (C - B) * l1y - A * l1xy)[ok] + (B + C) * F.log_table[F.minus_one]
    return CycVal(np.bincount(e % n, minlength=n).astype(np.int64), 1, int(ok.sum()))


def charsum_series(F: FieldCtx, P: np.ndarray, x: int, bound: int) -> CycVal:
    """(1/(q-1)) sum_chi P[chi] chi(x) for a stack of numerators indexed by chi."""
    n = F.q - 1
    if x == 0:
        return CycVal.zero(n).div_int(n)
    chi = np.arange(n)
    return CycVal(shift_sum(P, chi * F.log_table[x]), n, bound)


def f21_charsum(F: FieldCtx, A: int, B: int, C: int, x: int) -> CycVal:
    """(1/(q-1)) sum_chi {A chi choose chi} {B chi choose C chi} chi(x)."""
    return hyper_charsum(F, [A, B], [C], x)


def hyper_charsum(F: FieldCtx, upper, lower, x: int) -> CycVal:
    """n+1Fn(A_0..A_n; B_1..B_n | x) as a sum over characters.

    The chi-th summand is {A_0 chi choose chi} * prod_i {A_i chi choose B_i chi} * chi(x).
    """
    upper, lower = list(upper), list(lower)
    if len(upper) != len(lower) + 1:
        raise ArityMismatch(f"need len(upper) == len(lower) + 1, got {len(upper)}, {len(lower)}")
    n = F.q - 1
    if x == 0:
        return CycVal.zero(n).div_int(n)
    T = binom_table(F)
    chi = np.arange(n)
    P = T[(upper[0] + chi) % n, chi]
    bound = F.q - 2
    for a, b in zip(upper[1:], lower):
        bound *= F.q - 2
        P = cyclic_conv(P, T[(a + chi) % n, (b + chi) % n], bound)
    return charsum_series(F, P, x, bound * n)


def rhs_2f1_eps(F: FieldCtx, A: int, C: int, x: int) -> CycVal:
    """Closed form of 2F1(A, eps; C | x)."""
    n = F.q - 1
    one_minus_x = F.sub(1, x)
    t1 = binom(F, C, A) * mono(F, cmul(
        char_at_minus_one(F, A), char_eval(F, -C, x), char_eval(F, C - A, one_minus_x)))
    t2 = -mono(F, cmul(char_at_minus_one(F, C), eps(x)))
    t3 = mono(F, char_at_minus_one(F, A)).scale(n * int(one_minus_x == 0) * delta_char(F, C - A))
    return t1 + t2 + t3


def rhs_2f1_same(F: FieldCtx, A: int, B: int, x: int) -> CycVal:
    """Closed form of 2F1(A, B; A | x)."""
    n = F.q - 1
    one_minus_x = F.sub(1, x)
    t1 = binom(F, B, A) * mono(F, cmul(eps(x), char_eval(F, -B, one_minus_x)))
    t2 = -mono(F, char_eval(F, -A, F.neg(x)))
    t3 = mono(F, char_at_minus_one(F, A)).scale(n * int(one_minus_x == 0) * delta_char(F, B))
    return t1 + t2 + t3


def rhs_3f2_reduction(F: FieldCtx, A: int, B: int, C: int, D: int, x: int) -> CycVal:
    """Closed form of 3F2(A, B, C; A, D | x) in terms of 2F1(B, C; D | x)."""
    n = F.q - 1
    t1 = binom(F, B, A) * f21_charsum(F, B, C, D, x)
    t2 = -(binom(F, C - A, D - A) * mono(F, char_eval(F, -A, F.neg(x))))
    t3 = mono(F, cmul(char_at_minus_one(F, A), char_eval(F, -D, x),
                      char_eval(F, D - C, F.sub(1, x)))).scale(n * delta_char(F, B))
    return t1 + t2 + t3
