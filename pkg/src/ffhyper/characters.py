"""Multiplicative characters, Jacobi sums and Greene-style binomials.

Characters are indexed against the field's generator ``g``: the character
``j`` sends ``g**k`` to ``zeta**(j*k)`` with ``zeta = exp(2*pi*i/(q-1))``,
and every character sends 0 to 0 (the trivial one included).  Index 0 is the
trivial character, ``-j`` is the conjugate of ``j`` and products of
characters are sums of indices, all modulo ``q - 1``.

A character value is returned as an exponent of ``zeta`` or ``None`` for
the value 0.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .cyclo import CycVal
from .field import FieldCtx

TABLE_Q_MAX = 128


def char_eval(F: FieldCtx, j: int, x: int) -> int | None:
    if x == 0:
        return None
    return (j * int(F.log_table[x])) % (F.q - 1)


def cmul(*vals: int | None) -> int | None:
    """Multiply character values given as exponents; ``None`` (zero) absorbs."""
    total = 0
    for v in vals:
        if v is None:
            return None
        total += v
    return total


def mono(F: FieldCtx, e: int | None) -> CycVal:
    """The exact value ``zeta**e`` (or 0 for ``None``)."""
    n = F.q - 1
    return CycVal.zero(n) if e is None else CycVal.root(n, e)


def char_value(F: FieldCtx, j: int, x: int) -> CycVal:
    return mono(F, char_eval(F, j, x))


def char_at_minus_one(F: FieldCtx, j: int) -> int:
    """Exponent of chi_j(-1)."""
    return char_eval(F, j, F.minus_one)


def delta_char(F: FieldCtx, j: int) -> int:
    return int(j % (F.q - 1) == 0)


def delta_point(x: int) -> int:
    return int(x == 0)


def char_sum(F: FieldCtx, j: int) -> CycVal:
    """Sum of chi_j(u) over every u in F_q."""
    n = F.q - 1
    e = (j * F.log_table[1:]) % n
    return CycVal(np.bincount(e, minlength=n).astype(np.int64), 1, n)


def jacobi(F: FieldCtx, chi: int, lam: int) -> CycVal:
    """J(chi, lam) = sum_u chi(u) lam(1 - u), summed term by term."""
    n = F.q - 1
    coeffs = np.zeros(n, dtype=np.int64)
    for u in F.elements():
        a = char_eval(F, chi, u)
        b = char_eval(F, lam, F.sub(1, u))
        e = cmul(a, b)
        if e is not None:
            coeffs[e % n] += 1
    return CycVal(coeffs, 1)


@lru_cache(maxsize=32)
def jacobi_table(F: FieldCtx) -> np.ndarray:
    """All Jacobi sums at once: ``T[a, b]`` is the numerator of J(chi_a, chi_b)."""
    n = F.q - 1
    u = np.arange(2, F.q)
    lu = F.log_table[u]
    l1u = F.log_table[F.sub_v(1, u)]
    j = np.arange(n)
    e = (j[:, None, None] * lu + j[None, :, None] * l1u) % n
    flat = (j[:, None, None] * n + j[None, :, None]) * n + e
    T = np.bincount(flat.ravel(), minlength=n ** 3).reshape(n, n, n).astype(np.int64)
    T.setflags(write=False)
    return T


@lru_cache(maxsize=32)
def binom_table(F: FieldCtx) -> np.ndarray:
    """``T[A, B]`` is the numerator of {A choose B} = B(-1) J(A, conj B)."""
    n = F.q - 1
    J = jacobi_table(F)
    m1 = F.log_table[F.minus_one]
    T = np.empty_like(J)
    for b in range(n):
        T[:, b, :] = np.roll(J[:, -b % n, :], (b * m1) % n, axis=-1)
    T.setflags(write=False)
    return T


def binom(F: FieldCtx, A: int, B: int) -> CycVal:
    n = F.q - 1
    if F.q <= TABLE_Q_MAX:
        return CycVal(binom_table(F)[A % n, B % n], 1, F.q - 2)
    return jacobi(F, A, -B).shift(char_at_minus_one(F, B))


def binomial_theorem_rhs(F: FieldCtx, A: int, x: int) -> CycVal:
    """delta(x) + 1/(q-1) * sum_chi {A choose chi} chi(x)."""
    n = F.q - 1
    total = CycVal.integer(n, delta_point(x) * n)
    for chi in range(n):
        e = char_eval(F, chi, x)
        if e is not None:
            total = total + binom(F, A, chi).shift(e)
    return total.div_int(n)
