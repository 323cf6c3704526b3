"""Exact values in (1/den) * Z[zeta_n].

A :class:`CycVal` stores a numerator in the group ring Z[x]/(x^n - 1) (entry
``e`` is the multiplicity of ``zeta_n**e``) and a positive integer
denominator.  Nothing is reduced while accumulating; equality is decided by
reducing the cross-multiplied numerator modulo the cyclotomic polynomial.

Coefficients live in int64 arrays while a tracked l1 bound stays below
2**62 and are promoted to Python-int object arrays beyond that, so an
overflow can never produce a wrong verdict.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import OrderMismatch

SAFE = 1 << 62


# -- integer polynomial helpers (Python ints, low-to-high coefficients) ------

def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(a: list[int], m: list[int]) -> tuple[list[int], list[int]]:
    """Exact division with remainder by a monic integer polynomial."""
    if m[-1] != 1:
        raise ValueError("divisor must be monic")
    a = list(a)
    dm = len(m) - 1
    if len(a) <= dm:
        return [0], a + [0] * (dm - len(a))
    quo = [0] * (len(a) - dm)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            quo[i - dm] = c
            for j in range(dm + 1):
                a[i - dm + j] -= c * m[j]
    return quo, a[:dm]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Phi_n as low-to-high integer coefficients, via (x^n - 1) / prod Phi_d."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_poly(d)))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction(n: int) -> tuple[np.ndarray, int]:
    """Matrix whose column i holds x^i mod Phi_n, plus its max |entry|."""
    phi = list(cyclotomic_poly(n))
    deg = len(phi) - 1
    cols = []
    for i in range(n):
        _, r = poly_divmod([0] * i + [1], phi)
        cols.append(r)
    M = np.array(cols, dtype=object).T.reshape(deg, n)
    peak = max(abs(int(v)) for v in M.flat)
    Mi = M.astype(np.int64)
    Mi.setflags(write=False)
    return Mi, peak


def reduce_mod_phi(coeffs, n: int | None = None) -> list[int]:
    """Remainder of a group-ring numerator modulo Phi_n, as Python ints."""
    n = len(coeffs) if n is None else n
    _, r = poly_divmod([int(c) for c in coeffs], list(cyclotomic_poly(n)))
    return r


# -- CycVal -------------------------------------------------------------------

class CycVal:
    """An exact element of (1/den) * Z[zeta_n]."""

    __slots__ = ("coeffs", "den", "bound")

    def __init__(self, coeffs, den: int = 1, bound: int | None = None):
        arr = np.asarray(coeffs)
        if arr.dtype != object and arr.dtype != np.int64:
            arr = arr.astype(np.int64)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("coeffs must be a non-empty vector")
        if den < 1:
            raise ValueError("den must be positive")
        if bound is None:
            bound = int(sum(abs(int(c)) for c in arr)) if arr.dtype == object \
                else int(np.abs(arr).sum())
        if arr.dtype == np.int64 and bound >= SAFE:
            arr = arr.astype(object)
        self.coeffs = arr
        self.den = int(den)
        self.bound = bound

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    @classmethod
    def zero(cls, n: int) -> CycVal:
        return cls(np.zeros(n, dtype=np.int64), 1, 0)

    @classmethod
    def integer(cls, n: int, k: int, den: int = 1) -> CycVal:
        c = np.zeros(n, dtype=np.int64 if abs(k) < SAFE else object)
        c[0] = k
        return cls(c, den, abs(k))

    @classmethod
    def root(cls, n: int, e: int) -> CycVal:
        c = np.zeros(n, dtype=np.int64)
        c[e % n] = 1
        return cls(c, 1, 1)

    def _check(self, other: CycVal) -> None:
        if self.n != other.n:
            raise OrderMismatch(f"orders differ: {self.n} vs {other.n}")

    def __add__(self, other: CycVal) -> CycVal:
        if isinstance(other, int):
            other = CycVal.integer(self.n, other)
        self._check(other)
        if self.den == other.den:
            bnd = self.bound + other.bound
            a, b = _widen(self.coeffs, bnd), _widen(other.coeffs, bnd)
            return CycVal(a + b, self.den, bnd)
        m = self.den * other.den // gcd(self.den, other.den)
        fa, fb = m // self.den, m // other.den
        bnd = self.bound * fa + other.bound * fb
        a, b = _widen(self.coeffs, bnd), _widen(other.coeffs, bnd)
        return CycVal(a * fa + b * fb, m, bnd)

    __radd__ = __add__

    def __neg__(self) -> CycVal:
        return CycVal(-self.coeffs, self.den, self.bound)

    def __sub__(self, other: CycVal) -> CycVal:
        if isinstance(other, int):
            other = CycVal.integer(self.n, other)
        return self + (-other)

    def __rsub__(self, other: int) -> CycVal:
        return CycVal.integer(self.n, other) - self

    def __mul__(self, other) -> CycVal:
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        self._check(other)
        bnd = self.bound * other.bound
        return CycVal(cyclic_conv(self.coeffs, other.coeffs, bnd), self.den * other.den, bnd)

    __rmul__ = __mul__

    def scale(self, k: int) -> CycVal:
        bnd = self.bound * abs(k)
        return CycVal(_widen(self.coeffs, bnd) * k, self.den, bnd)

    def shift(self, e: int) -> CycVal:
        """Multiply by zeta_n**e."""
        return CycVal(np.roll(self.coeffs, e % self.n), self.den, self.bound)

    def div_int(self, m: int) -> CycVal:
        if m < 1:
            raise ValueError("divisor must be a positive integer")
        return CycVal(self.coeffs, self.den * m, self.bound)

    def is_zero(self) -> bool:
        if self.bound == 0:
            return True
        M, peak = _reduction(self.n)
        if self.coeffs.dtype == np.int64 and peak * self.bound < SAFE:
            return not (M @ self.coeffs).any()
        return not any(reduce_mod_phi(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycVal.integer(self.n, other)
        if not isinstance(other, CycVal):
            return NotImplemented
        return cyc_eq(self, other)

    __hash__ = None

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi * np.arange(self.n) / self.n)
        return complex(np.dot(self.coeffs.astype(float), z)) / self.den

    def reduced(self) -> tuple[list[int], int]:
        """Canonical form: numerator mod Phi_n with the content shared with den removed."""
        r = reduce_mod_phi(self.coeffs)
        g = self.den
        for c in r:
            g = gcd(g, c)
        return [c // g for c in r], self.den // g

    def __repr__(self) -> str:
        num, den = self.reduced()
        return f"CycVal(n={self.n}, reduced={num}, den={den})"

    def to_json(self) -> dict:
        return {"coeffs": [int(c) for c in self.coeffs], "den": self.den}

    @classmethod
    def from_json(cls, doc: dict) -> CycVal:
        return cls(np.array([int(c) for c in doc["coeffs"]], dtype=object), int(doc["den"]))


def _widen(arr: np.ndarray, bound: int) -> np.ndarray:
    if arr.dtype == np.int64 and bound >= SAFE:
        return arr.astype(object)
    return arr


@lru_cache(maxsize=None)
def circulant_index(n: int) -> np.ndarray:
    """``idx[k, i] = (k - i) mod n``; gathers the second operand of a cyclic convolution."""
    k = np.arange(n)
    idx = (k[:, None] - k[None, :]) % n
    idx.setflags(write=False)
    return idx


def cyclic_conv(a: np.ndarray, b: np.ndarray, bound: int | None = None) -> np.ndarray:
    """Product in Z[x]/(x^n - 1), batched over leading axes.

    ``bound`` is an upper bound on the l1 norm of the result; above 2**62 the
    computation switches to Python ints.
    """
    n = a.shape[-1]
    bc = b[..., circulant_index(n)]
    if a.dtype == object or b.dtype == object or (bound is not None and bound >= SAFE):
        return (a.astype(object)[..., None, :] * bc.astype(object)).sum(axis=-1)
    return np.einsum("...i,...ki->...k", a, bc)


# -- functional interface -----------------------------------------------------

def cyc_from_root(n: int, e: int) -> CycVal:
    if n < 1:
        raise ValueError("n must be >= 1")
    return CycVal.root(n, e)


def cyc_add(a: CycVal, b: CycVal) -> CycVal:
    return a + b


def cyc_mul(a: CycVal, b: CycVal) -> CycVal:
    return a * b


def cyc_scale(a: CycVal, k: int) -> CycVal:
    return a.scale(k)


def cyc_div_int(a: CycVal, m: int) -> CycVal:
    return a.div_int(m)


def cyc_is_zero(a: CycVal) -> bool:
    return a.is_zero()


def cyc_eq(a: CycVal, b: CycVal) -> bool:
    a._check(b)
    bnd = a.bound * b.den + b.bound * a.den
    diff = _widen(a.coeffs, bnd) * b.den - _widen(b.coeffs, bnd) * a.den
    return CycVal(diff, 1, bnd).is_zero()


def cyc_to_complex(a: CycVal) -> complex:
    return a.to_complex()


def cyc_sum(values, n: int) -> CycVal:
    total = CycVal.zero(n)
    for v in values:
        total = total + v
    return total


def shift_sum(P: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    """``sum_i P[i] * zeta**shifts[i]`` for a stack ``P`` of numerators."""
    n = P.shape[-1]
    k = np.arange(n)
    idx = (k[None, :] - np.asarray(shifts)[:, None]) % n
    return np.take_along_axis(P, idx, axis=-1).sum(axis=0)
