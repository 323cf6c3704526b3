"""Exact sweeps of identities over parameter domains.

Each registered identity names its parameters, the domain each one ranges
over, a left-hand side and a right-hand side given as a list of terms.  A
sweep visits the domain exhaustively or draws a seeded sample, compares
both sides exactly and records every mismatch together with the value of
each right-hand-side term.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import appell, characters, hypergeometric
from .characters import binom, char_at_minus_one, delta_char
from .cyclo import CycVal
from .errors import EmptyDomain, IndexOutOfRange, UnknownIdentity
from .field import FieldCtx, build_field

JSON_SAFE_INT = (1 << 53) - 1


# -- parameter domains ---------------------------------------------------------

def domain_values(kind: str, q: int) -> list:
    if kind == "char":
        return list(range(q - 1))
    if kind == "elem":
        return list(range(q))
    if kind == "unit":
        return list(range(1, q))
    if kind == "unit_ne1":
        return list(range(2, q))
    if kind == "elem_ne01":  # x with x not in {0, 1}
        return list(range(2, q))
    if kind == "axes":  # (x, y) with xy = 0
        return [(w, 0) for w in range(q)] + [(0, w) for w in range(1, q)]
    if kind == "form":
        return [0, 1]
    raise ValueError(f"unknown domain kind {kind!r}")


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    params: tuple[tuple[str, str], ...]
    lhs: Callable[..., CycVal]
    rhs_terms: Callable[..., list[CycVal]]
    description: str = ""
    probe: bool = False

    def domain(self, q: int) -> list[list]:
        return [domain_values(kind, q) for _, kind in self.params]

    def cardinality(self, q: int) -> int:
        return math.prod(len(v) for v in self.domain(q))


REGISTRY: dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    REGISTRY[spec.id] = spec
    return spec


def get_identity(key) -> IdentitySpec:
    if isinstance(key, IdentitySpec):
        return key
    try:
        return REGISTRY[key]
    except KeyError:
        raise UnknownIdentity(key) from None


CH = "char"
A4 = (("A", CH), ("B", CH), ("Bp", CH), ("C", CH))


def _one(v):
    return lambda F, **p: [v(F, **p)]


register(IdentitySpec(
    "orth", (("chi", CH),),
    lambda F, chi: characters.char_sum(F, chi),
    _one(lambda F, chi: CycVal.integer(F.q - 1, (F.q - 1) * delta_char(F, chi))),
    "sum_u chi(u) = (q-1) delta(chi)"))

register(IdentitySpec(
    "prop2.1.i", (("A", CH), ("B", CH)),
    lambda F, A, B: binom(F, A, B),
    _one(lambda F, A, B: binom(F, A, A - B)),
    "{A choose B} = {A choose A conj(B)}"))

register(IdentitySpec(
    "prop2.1.ii", (("A", CH), ("B", CH)),
    lambda F, A, B: binom(F, A, B),
    _one(lambda F, A, B: binom(F, B - A, B).shift(char_at_minus_one(F, B))),
    "{A choose B} = {B conj(A) choose B} B(-1)"))

register(IdentitySpec(
    "prop2.1.iii", (("A", CH), ("B", CH)),
    lambda F, A, B: binom(F, A, B),
    _one(lambda F, A, B: binom(F, -B, -A).shift(char_at_minus_one(F, A + B))),
    "{A choose B} = {conj(B) choose conj(A)} AB(-1)"))

register(IdentitySpec(
    "prop2.1.iv", (("A", CH), ("form", "form")),
    lambda F, A, form: binom(F, A, 0 if form == 0 else A),
    _one(lambda F, A, form: CycVal.integer(F.q - 1, -1 + (F.q - 1) * delta_char(F, A))),
    "{A choose eps} = {A choose A} = -1 + (q-1) delta(A)  (form 0 / form 1)"))

register(IdentitySpec(
    "prop2.2", (("A", CH), ("x", "elem")),
    lambda F, A, x: characters.char_value(F, A, F.add(1, x)),
    _one(lambda F, A, x: characters.binomial_theorem_rhs(F, A, x)),
    "A(1+x) = delta(x) + 1/(q-1) sum_chi {A choose chi} chi(x)"))

register(IdentitySpec(
    "greene3.6", (("A", CH), ("B", CH), ("C", CH), ("x", "elem")),
    hypergeometric.f21_point,
    _one(hypergeometric.f21_charsum),
    "2F1 point sum = 2F1 character sum"))

register(IdentitySpec(
    "eq1.1", (("A", CH), ("B", CH), ("C", CH)),
    lambda F, A, B, C: hypergeometric.f21_point(F, A, B, C, 1),
    _one(lambda F, A, B, C: binom(F, B, C - A).shift(char_at_minus_one(F, A))),
    "2F1(A, B; C | 1) = A(-1) {B choose conj(A) C}"))

register(IdentitySpec(
    "prop3.1.a", (("A", CH), ("C", CH), ("x", "elem")),
    lambda F, A, C, x: hypergeometric.f21_charsum(F, A, 0, C, x),
    _one(hypergeometric.rhs_2f1_eps),
    "2F1(A, eps; C | x) closed form"))

register(IdentitySpec(
    "prop3.1.b", (("A", CH), ("B", CH), ("x", "elem")),
    lambda F, A, B, x: hypergeometric.f21_charsum(F, A, B, A, x),
    _one(hypergeometric.rhs_2f1_same),
    "2F1(A, B; A | x) closed form"))

register(IdentitySpec(
    "prop3.1.c", (("A", CH), ("B", CH), ("C", CH), ("D", CH), ("x", "elem")),
    lambda F, A, B, C, D, x: hypergeometric.hyper_charsum(F, [A, B, C], [A, D], x),
    _one(hypergeometric.rhs_3f2_reduction),
    "3F2(A, B, C; A, D | x) reduction to 2F1"))

register(IdentitySpec(
    "eq1.2", A4 + (("x", "elem"), ("y", "elem")),
    appell.f1_double,
    _one(lambda F, A, B, Bp, C, x, y: appell.f1_double(F, A, Bp, B, C, y, x)),
    "F1(A; B, B'; C; x, y) = F1(A; B', B; C; y, x)"))

register(IdentitySpec(
    "f1.vanish", A4 + (("pt", "axes"),),
    lambda F, A, B, Bp, C, pt: appell.f1_double(F, A, B, Bp, C, *pt),
    _one(lambda F, **p: CycVal.zero(F.q - 1)),
    "F1 vanishes when xy = 0"))

register(IdentitySpec(
    "thm2.1", A4 + (("x", "elem"), ("y", "unit")),
    appell.f1_double, appell.thm21_terms,
    "F1 as a double character sum plus three correction terms, y != 0"))

register(IdentitySpec(
    "thm2.1.y1", A4 + (("x", "elem"),),
    lambda F, A, B, Bp, C, x: appell.f1_double(F, A, B, Bp, C, x, 1),
    appell.f1_at_y1_terms,
    "F1 at y = 1 in terms of 2F1"))

register(IdentitySpec(
    "thm3.red.b", (("A", CH), ("B", CH), ("C", CH), ("x", "elem"), ("y", "unit_ne1")),
    lambda F, A, B, C, x, y: appell.f1_double(F, A, B, 0, C, x, y),
    appell.thm31_terms,
    "F1(A; B, eps; C; x, y) reduction, y not in {0, 1}"))

register(IdentitySpec(
    "thm3.red.bp", (("A", CH), ("Bp", CH), ("C", CH), ("x", "elem_ne01"), ("y", "elem")),
    lambda F, A, Bp, C, x, y: appell.f1_double(F, A, 0, Bp, C, x, y),
    appell.thm32_terms,
    "F1(A; eps, B'; C; x, y) reduction, x not in {0, 1}"))

_GENFUN_PARAMS = A4 + (("x", "unit"), ("y", "unit_ne1"), ("t", "unit_ne1"))

register(IdentitySpec(
    "thm4.1", _GENFUN_PARAMS,
    appell.genfun_lhs, appell.genfun_terms,
    "generating function in the first character, nine terms"))

register(IdentitySpec(
    "thm4.1.corrected", _GENFUN_PARAMS,
    appell.genfun_lhs, appell.genfun_corrected_terms,
    "generating function with the term weights that hold on the whole domain"))

register(IdentitySpec(
    "probe.thm2.1.y0", A4 + (("x", "elem"),),
    lambda F, A, B, Bp, C, x: appell.f1_double(F, A, B, Bp, C, x, 0),
    lambda F, A, B, Bp, C, x: appell.thm21_terms(F, A, B, Bp, C, x, 0, allow_y0=True),
    "does the general expansion also hold at y = 0? (recorded, not asserted)",
    probe=True))


# -- reports -----------------------------------------------------------------------

@dataclass
class Failure:
    index: int  # position of the case in the sweep order
    params: dict
    lhs: CycVal
    rhs: CycVal
    terms: list[CycVal]

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "terms": [t.to_json() for t in self.terms],
        }


@dataclass
class VerifyReport:
    identity: str
    q: int
    mode: str
    seed: int | None
    cases: int
    failures: list[Failure] = field(default_factory=list)
    duration_ms: float = 0.0
    count: int | None = None
    probe: bool = False
    localization: dict | None = None

    @property
    def verdict(self) -> str | None:
        """"pass" or "fail"; probes carry no verdict."""
        if self.probe:
            return None
        return "fail" if self.failures else "pass"

    @property
    def equal(self) -> int:
        return self.cases - len(self.failures)

    def to_json(self, include_duration: bool = True) -> dict:
        doc = {
            "identity": self.identity,
            "q": self.q,
            "mode": self.mode,
            "seed": self.seed,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
        }
        if include_duration:
            doc["duration_ms"] = round(self.duration_ms, 3)
        if self.probe:
            doc["probe"] = True
            doc["equal"] = self.equal
        if self.localization is not None:
            doc["localization"] = self.localization
        return _stringify_big(doc)

    def dumps(self, include_duration: bool = True) -> str:
        return json.dumps(self.to_json(include_duration))

    def summary(self) -> str:
        tag = self.mode if self.mode == "exhaustive" else f"sample n={self.count} seed={self.seed}"
        if self.probe:
            return (f"{self.identity} q={self.q} [{tag}] probe: equal in {self.equal}"
                    f" of {self.cases} cases ({self.duration_ms:.0f} ms)")
        head = f"{self.identity} q={self.q} [{tag}] {self.verdict.upper()}"
        tail = f"{self.cases} cases, {len(self.failures)} failures ({self.duration_ms:.0f} ms)"
        if self.localization and self.localization.get("changed_terms"):
            tail += f", discrepancy at terms {self.localization['changed_terms']}"
        return f"{head}: {tail}"


def _stringify_big(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: _stringify_big(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify_big(v) for v in obj]
    return obj


# -- sweeping --------------------------------------------------------------------

def _unrank(index: int, domain: list[list]) -> list:
    out = []
    for values in reversed(domain):
        index, r = divmod(index, len(values))
        out.append(values[r])
    return out[::-1]


def _params(spec: IdentitySpec, values: list) -> dict:
    return {name: v for (name, _), v in zip(spec.params, values)}


def _json_params(params: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}


def check_case(spec: IdentitySpec, F: FieldCtx, params: dict):
    """Evaluate one case; returns ``(equal, lhs, rhs, terms)``."""
    lhs = spec.lhs(F, **params)
    terms = spec.rhs_terms(F, **params)
    rhs = terms[0]
    for t in terms[1:]:
        rhs = rhs + t
    return lhs == rhs, lhs, rhs, terms


def _run_indices(spec: IdentitySpec, F: FieldCtx, positions, indices) -> list[Failure]:
    domain = spec.domain(F.q)
    failures = []
    for pos, idx in zip(positions, indices):
        params = _params(spec, _unrank(int(idx), domain))
        ok, lhs, rhs, terms = check_case(spec, F, params)
        if not ok:
            failures.append(Failure(int(pos), _json_params(params), lhs, rhs, terms))
    return failures


def _worker(args):
    identity, q, positions, indices = args
    return _run_indices(get_identity(identity), build_field(q), positions, indices)


def sample_indices(total: int, count: int, seed: int) -> np.ndarray:
    """``count`` uniform draws from ``range(total)`` with replacement.

    Philox is counter-based, so the stream depends on the seed alone.
    """
    rng = np.random.Generator(np.random.Philox(key=seed & ((1 << 64) - 1)))
    return rng.integers(0, total, size=count, dtype=np.int64)


def sweep(identity, q: int, mode: str = "exhaustive", count: int | None = None,
          seed: int | None = None, jobs: int = 1, localize: bool = True) -> VerifyReport:
    """Check ``identity`` on F_q over its whole domain or on a seeded sample.

    The report does not depend on ``jobs``: failures are ordered by their
    position in the sweep.
    """
    spec = get_identity(identity)
    F = build_field(q)
    total = spec.cardinality(q)
    if total == 0:
        raise EmptyDomain(f"{spec.id} has an empty domain at q={q}")
    if mode == "exhaustive":
        indices = np.arange(total, dtype=np.int64)
        seed = None
        count = None
    elif mode == "sample":
        if count is None or count < 1:
            raise ValueError("sample mode needs count >= 1")
        seed = 0 if seed is None else int(seed)
        indices = sample_indices(total, count, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    positions = np.arange(len(indices))

    t0 = time.perf_counter()
    if jobs <= 1 or spec.id not in REGISTRY or REGISTRY[spec.id] is not spec:
        failures = _run_indices(spec, F, positions, indices)
    else:
        chunks = [(spec.id, q, p, i) for p, i in
                  zip(np.array_split(positions, jobs), np.array_split(indices, jobs)) if len(p)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            failures = [f for part in pool.map(_worker, chunks) for f in part]
        failures.sort(key=lambda f: f.index)
    report = VerifyReport(spec.id, q, mode, seed, len(indices), failures,
                          (time.perf_counter() - t0) * 1000, count, spec.probe)
    if localize and failures and not spec.probe:
        report.localization = localize_terms(report, spec)
    return report


# -- diagnostics -----------------------------------------------------------------

def explain_failure(report: VerifyReport, index: int) -> dict:
    """Per-term breakdown of one recorded failure, with the residual
    ``lhs - sum(terms)``."""
    if not 0 <= index < len(report.failures):
        raise IndexOutOfRange(f"report has {len(report.failures)} failures, asked for #{index}")
    f = report.failures[index]
    residual = f.lhs
    for t in f.terms:
        residual = residual - t
    return {
        "params": f.params,
        "lhs": f.lhs,
        "terms": list(f.terms),
        "residual": residual,
        "residual_complex": residual.to_complex(),
        "terms_complex": [t.to_complex() for t in f.terms],
    }


def _weight_candidates(k: int, max_changes: int):
    base = (1,) * k
    yield base
    for d in range(1, max_changes + 1):
        for pos in itertools.combinations(range(k), d):
            for alts in itertools.product((0, -1), repeat=d):
                w = list(base)
                for i, a in zip(pos, alts):
                    w[i] = a
                yield tuple(w)


def localize_terms(report: VerifyReport, spec: IdentitySpec | None = None,
                   passing_sample: int = 200, max_changes: int = 5) -> dict | None:
    """Find the fewest terms to drop (weight 0) or negate (weight -1) so the
    identity holds on every recorded failure and on a sample of passing cases.

    Candidates are screened in floating point and confirmed exactly.
    Returns None when the right-hand side has a single term or nothing
    within ``max_changes`` fits.
    """
    if not report.failures:
        return None
    spec = spec or get_identity(report.identity)
    k = len(report.failures[0].terms)
    if k < 2:
        return None
    F = build_field(report.q)
    cases = [(f.lhs, f.terms) for f in report.failures]
    domain = spec.domain(report.q)
    total = spec.cardinality(report.q)
    extra = sample_indices(total, passing_sample, 0x5eed)
    for idx in extra:
        params = _params(spec, _unrank(int(idx), domain))
        _, lhs, _, terms = check_case(spec, F, params)
        cases.append((lhs, terms))

    lhs_c = np.array([c[0].to_complex() for c in cases])
    terms_c = np.array([[t.to_complex() for t in c[1]] for c in cases])
    found = []
    best = None
    for w in _weight_candidates(k, max_changes):
        changes = sum(1 for v in w if v != 1)
        if best is not None and changes > best:
            break
        if np.max(np.abs(terms_c @ np.array(w) - lhs_c)) > 1e-6:
            continue
        if all(_weighted_ok(lhs, terms, w) for lhs, terms in cases):
            found.append(list(w))
            best = changes
    if not found:
        return {"changed_terms": None, "weights": None, "checked_cases": len(cases)}
    w = found[0]
    return {
        "changed_terms": [i + 1 for i, v in enumerate(w) if v != 1],
        "weights": w,
        "alternatives": len(found) - 1,
        "checked_cases": len(cases),
    }


def _weighted_ok(lhs: CycVal, terms: list[CycVal], w) -> bool:
    total = lhs
    for t, c in zip(terms, w):
        if c:
            total = total - t.scale(c)
    return total.is_zero()


def run_many(ids, qs, **kwargs) -> list[VerifyReport]:
    return [sweep(i, q, **kwargs) for i in ids for q in qs]

