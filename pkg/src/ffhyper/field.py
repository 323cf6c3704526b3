"""Finite fields F_q with exp/log tables.

Elements are plain ints in ``[0, q)``.  For a prime field the int is the
residue; for ``q = p**n`` with ``n > 1`` it is the base-``p`` digit encoding
of the polynomial representative, ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``x**i``.  So in F_4 the element ``x`` is ``2`` and ``x + 1``
is ``3``.

Construction is deterministic: the modulus is the monic irreducible
polynomial whose lower coefficients have the smallest encoding, and the
generator is the smallest element of multiplicative order ``q - 1``.
"""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from math import gcd
from pathlib import Path

import numpy as np

from .errors import CacheError, DivisionByZero, DlogOfZero, LimitExceeded, NotAPrimePower

log = logging.getLogger(__name__)

Q_MAX = 4096
CACHE_VERSION = 1
CACHE_ENV = "FFHYPER_CACHE_DIR"


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise NotAPrimePower otherwise."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    return p, n


# -- polynomials over Z_p, coefficient lists from low to high degree ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod_p(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over Z_p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def poly_mul_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(m: list[int], p: int) -> bool:
    """Exhaustive trial division of a monic polynomial by every monic
    polynomial of degree ``1 .. deg/2``."""
    n = len(m) - 1
    if n < 1 or m[-1] != 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            if not poly_mod_p(m, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> list[int]:
    """Monic irreducible of degree ``n`` with the smallest base-p encoding of
    its lower coefficients (coefficient of x**(n-1) most significant)."""
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        m = low + [1]
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")


# -- the field context --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldCtx:
    p: int
    n: int
    q: int
    modulus: tuple[int, ...]
    generator: int
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)  # log_table[0] == -1

    def __post_init__(self):
        self.exp_table.setflags(write=False)
        self.log_table.setflags(write=False)

    @property
    def order(self) -> int:
        """Order of the multiplicative group, which is also the number of characters."""
        return self.q - 1

    @cached_property
    def digits(self) -> np.ndarray:
        idx = np.arange(self.q)
        d = np.stack([(idx // self.p ** i) % self.p for i in range(self.n)], axis=1)
        d.setflags(write=False)
        return d

    @cached_property
    def _weights(self) -> np.ndarray:
        return np.array([self.p ** i for i in range(self.n)], dtype=np.int64)

    @cached_property
    def minus_one(self) -> int:
        return self.neg(1)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    # scalar arithmetic
    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        p, out, w = self.p, 0, 1
        for _ in range(self.n):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        p, out, w = self.p, 0, 1
        for _ in range(self.n):
            out += (-(a % p) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        return int(self.exp_table[k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return int(self.exp_table[-self.log_table[a] % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of 0")
            return 1 if k == 0 else 0
        return int(self.exp_table[(self.log_table[a] * k) % (self.q - 1)])

    def dlog(self, a: int) -> int:
        if a == 0:
            raise DlogOfZero("discrete log of 0")
        return int(self.log_table[a])

    # vectorised arithmetic on integer arrays of elements
    def add_v(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        if self.n == 1:
            return (a + b) % self.p
        return ((self.digits[a] + self.digits[b]) % self.p) @ self._weights

    def neg_v(self, a) -> np.ndarray:
        a = np.asarray(a)
        if self.n == 1:
            return -a % self.p
        return (-self.digits[a] % self.p) @ self._weights

    def sub_v(self, a, b) -> np.ndarray:
        return self.add_v(a, self.neg_v(b))

    def mul_v(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        k = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        return np.where((a == 0) | (b == 0), 0, self.exp_table[k])

    def describe(self) -> dict:
        """Plain-dict summary used by the CLI."""
        return {
            "q": self.q,
            "p": self.p,
            "n": self.n,
            "modulus": list(self.modulus),
            "modulus_str": poly_str(self.modulus) if self.n > 1 else "",
            "generator": self.generator,
            "exp_table_head": [int(v) for v in self.exp_table[:16]],
            "log_table_head": [int(v) for v in self.log_table[:16]],
        }


def poly_str(coeffs) -> str:
    """Render a low-to-high coefficient list, e.g. ``[1, 1, 1] -> 'x^2+x+1'``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


# -- construction -------------------------------------------------------------

def _elem_mul_poly(a: int, b: int, p: int, n: int, modulus: list[int]) -> int:
    da = [(a // p ** i) % p for i in range(n)]
    db = [(b // p ** i) % p for i in range(n)]
    r = poly_mod_p(poly_mul_p(da, db, p), modulus, p) if n > 1 else [(a * b) % p]
    return sum(c * p ** i for i, c in enumerate(r))


def _power_cycle(g: int, p: int, n: int, modulus: list[int], q: int) -> list[int] | None:
    """Powers g^0 .. g^(q-2) if ``g`` is a generator, else None."""
    out = [1]
    x = 1
    for _ in range(q - 2):
        x = _elem_mul_poly(x, g, p, n, modulus)
        if x == 1:
            return None
        out.append(x)
    if _elem_mul_poly(x, g, p, n, modulus) != 1:
        return None
    return out


def _tables(exp: list[int], q: int) -> tuple[np.ndarray, np.ndarray]:
    exp_table = np.array(exp, dtype=np.int64)
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1)
    return exp_table, log_table


def _construct(q: int) -> FieldCtx:
    p, n = prime_power(q)
    modulus = smallest_irreducible(p, n) if n > 1 else []
    for g in range(1, q):
        cyc = _power_cycle(g, p, n, modulus, q)
        if cyc is not None:
            break
    exp_table, log_table = _tables(cyc, q)
    return FieldCtx(p, n, q, tuple(modulus), g, exp_table, log_table)


def _check_q(q: int) -> None:
    prime_power(q)
    if q > Q_MAX:
        raise LimitExceeded(f"q={q} exceeds Q_MAX={Q_MAX}")


@lru_cache(maxsize=None)
def _build_cached(q: int, cache_dir: str | None) -> FieldCtx:
    if cache_dir is not None:
        path = cache_path(q, cache_dir)
        if path.exists():
            try:
                return load_field_cache(path)
            except CacheError as exc:
                log.warning("rejecting field cache %s: %s", path, exc)
    return _construct(q)


def build_field(q: int, cache_dir: str | os.PathLike | None = None) -> FieldCtx:
    """Return the canonical F_q.

    If ``cache_dir`` (or ``$FFHYPER_CACHE_DIR``) names a directory holding a
    valid cache file for ``q`` the tables are loaded from it; invalid caches
    are logged and ignored.
    """
    _check_q(q)
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    return _build_cached(q, None if cache_dir is None else str(cache_dir))


# -- table cache --------------------------------------------------------------

def cache_path(q: int, cache_dir) -> Path:
    return Path(cache_dir) / f"field_q{q}.json"


def field_to_json(F: FieldCtx) -> dict:
    return {
        "version": CACHE_VERSION,
        "q": F.q,
        "p": F.p,
        "n": F.n,
        "modulus": list(F.modulus),
        "generator": F.generator,
        "log_table": [int(v) for v in F.log_table],
    }


def save_field_cache(F: FieldCtx, cache_dir) -> Path:
    path = cache_path(F.q, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(field_to_json(F)))
    tmp.replace(path)
    return path


def field_from_json(doc: dict) -> FieldCtx:
    """Rebuild a FieldCtx from a cache document, checking every invariant."""
    try:
        if doc["version"] != CACHE_VERSION:
            raise CacheError(f"unsupported cache version {doc['version']!r}")
        q, p, n = int(doc["q"]), int(doc["p"]), int(doc["n"])
        modulus = [int(c) for c in doc["modulus"]]
        g = int(doc["generator"])
        logs = [int(v) for v in doc["log_table"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"malformed cache document: {exc}") from exc

    try:
        if prime_power(q) != (p, n) or q > Q_MAX:
            raise CacheError("q, p, n are inconsistent")
    except NotAPrimePower as exc:
        raise CacheError(str(exc)) from exc
    if n == 1:
        if modulus:
            raise CacheError("prime field must have an empty modulus")
    elif modulus != smallest_irreducible(p, n):
        raise CacheError("modulus is not the canonical irreducible polynomial")
    if len(logs) != q or logs[0] != -1:
        raise CacheError("log_table has the wrong shape or zero sentinel")
    if sorted(logs[1:]) != list(range(q - 1)):
        raise CacheError("log_table is not a bijection onto [0, q-1)")
    if not (0 < g < q) or logs[g] != (1 % (q - 1)):
        raise CacheError("generator does not have discrete log 1")
    exp = [0] * (q - 1)
    for a in range(1, q):
        exp[logs[a]] = a
    if exp[0] != 1:
        raise CacheError("exp_table[0] is not 1")
    for k in range(q - 1):
        if _elem_mul_poly(exp[k], g, p, n, modulus) != exp[(k + 1) % (q - 1)]:
            raise CacheError(f"exp_table inconsistent with multiplication at k={k}")
    for a in range(1, g):
        if gcd(logs[a], q - 1) == 1:
            raise CacheError(f"element {a} < generator is already primitive")
    exp_table, log_table = _tables(exp, q)
    return FieldCtx(p, n, q, tuple(modulus), g, exp_table, log_table)


def load_field_cache(path) -> FieldCtx:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"unreadable cache file: {exc}") from exc
    if not isinstance(doc, dict):
        raise CacheError("cache document is not an object")
    return field_from_json(doc)


def clear_cache(cache_dir, qs=None) -> list[Path]:
    """Delete field cache files (all of them, or only those for ``qs``)."""
    d = Path(cache_dir)
    if not d.is_dir():
        return []
    paths = [cache_path(q, d) for q in qs] if qs else sorted(d.glob("field_q*.json"))
    removed = []
    for path in paths:
        if path.exists():
            path.unlink()
            removed.append(path)
    _build_cached.cache_clear()
    return removed
