"""Slow, independent reference implementations used only by the tests.

Nothing here imports ffhyper.  Field arithmetic is schoolbook polynomial
multiplication on coefficient tuples, discrete logs come from walking the
powers of the generator, and every character sum is accumulated in complex
floating point straight from its defining formula.
"""
from __future__ import annotations

import cmath
import itertools
from functools import lru_cache


def factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            break
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic(p, d):
    """All monic degree-d polynomials, low-to-high coefficients."""
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


def _encode(low, p):
    # lower coefficients read as a base-p number, constant term least significant
    return sum(c * p ** i for i, c in enumerate(low))


@lru_cache(maxsize=None)
def canonical_modulus(p, n):
    """Smallest monic irreducible of degree n: reducible ones are exactly the
    products of two monic factors of positive degree."""
    reducible = set()
    for d in range(1, n // 2 + 1):
        for f in _monic(p, d):
            for g in _monic(p, n - d):
                reducible.add(tuple(_polymul(f, g, p)))
    cands = [m for m in _monic(p, n) if tuple(m) not in reducible]
    return tuple(min(cands, key=lambda m: _encode(m[:-1], p)))


class NaiveField:
    def __init__(self, q):
        self.q = q
        self.p, self.n = factor_prime_power(q)
        self.modulus = canonical_modulus(self.p, self.n) if self.n > 1 else ()
        self.gen = next(g for g in range(1, q) if self.order(g) == q - 1)
        self.log = {}
        x = 1
        for k in range(q - 1):
            self.log[x] = k
            x = self.mul(x, self.gen)

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.n)]

    def from_digits(self, ds):
        return sum(c * self.p ** i for i, c in enumerate(ds))

    def add(self, a, b):
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        prod = _polymul(self.digits(a), self.digits(b), self.p)
        m = list(self.modulus)
        for i in range(len(prod) - 1, self.n - 1, -1):
            c = prod[i]
            if c:
                for j in range(self.n + 1):
                    prod[i - self.n + j] = (prod[i - self.n + j] - c * m[j]) % self.p
        return self.from_digits(prod[: self.n])

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def order(self, a):
        if a == 0:
            return 0
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    # characters in complex floats
    def chi(self, j, x):
        if x == 0:
            return 0j
        return cmath.exp(2j * cmath.pi * j * self.log[x] / (self.q - 1))


@lru_cache(maxsize=None)
def naive_field(q):
    return NaiveField(q)


def jacobi(F, a, b):
    return sum(F.chi(a, u) * F.chi(b, F.sub(1, u)) for u in range(F.q))


def binom(F, a, b):
    return F.chi(b, F.neg(1)) * jacobi(F, a, -b)


def f21_point(F, A, B, C, x):
    if x == 0:
        return 0j
    m1 = F.neg(1)
    s = sum(F.chi(B, y) * F.chi(C - B, F.sub(1, y)) * F.chi(-A, F.sub(1, F.mul(x, y)))
            for y in range(F.q))
    return F.chi(B + C, m1) * s


def f21_charsum(F, A, B, C, x):
    n = F.q - 1
    return sum(binom(F, A + c, c) * binom(F, B + c, C + c) * F.chi(c, x) for c in range(n)) / n


def f1_double(F, A, B, Bp, C, x, y):
    if F.mul(x, y) == 0:
        return 0j
    m1 = F.neg(1)
    s = 0j
    for u in range(F.q):
        for v in range(F.q):
            w = F.sub(F.sub(1, u), v)
            z = F.sub(F.sub(1, F.mul(u, x)), F.mul(v, y))
            s += F.chi(B, u) * F.chi(Bp, v) * F.chi(C - B - Bp, w) * F.chi(-A, z)
    return F.chi(B + Bp, m1) * s


def f1_single(F, A, B, Bp, C, x, y):
    if F.mul(x, y) == 0:
        return 0j
    m1 = F.neg(1)
    s = sum(F.chi(A, u) * F.chi(C - A, F.sub(1, u)) * F.chi(-B, F.sub(1, F.mul(u, x)))
            * F.chi(-Bp, F.sub(1, F.mul(u, y))) for u in range(F.q))
    return F.chi(A + C, m1) * s


def genfun_lhs(F, A, B, Bp, C, x, y, t):
    n = F.q - 1
    return sum(binom(F, A + th, th) * f1_double(F, A + th, B, Bp, C, x, y) * F.chi(th, t)
               for th in range(n)) / n
