import itertools
import json
from pathlib import Path

import pytest

from ffhyper.appell import (
    GENFUN_CORRECTED_WEIGHTS,
    f1_at_y1_rhs,
    f1_at_y1_terms,
    f1_double,
    f1_single,
    genfun_corrected_terms,
    genfun_lhs,
    genfun_rhs,
    genfun_terms,
    thm21_rhs,
    thm21_terms,
    thm31_rhs,
    thm32_rhs,
)
from ffhyper.cyclo import CycVal, cyc_sum
from ffhyper.errors import DomainRestriction
from ffhyper.field import build_field

import oracles

FIXTURES = json.loads((Path(__file__).parent / "fixtures" / "oracle_values.json").read_text())


def _ids(c):
    return f"q{c['q']}-" + "-".join(map(str, c["args"]))


def test_hand_example():
    F = build_field(3)
    assert f1_double(F, 1, 1, 1, 0, 1, 2) == 2
    assert thm21_rhs(F, 1, 1, 1, 0, 1, 2) == 2


@pytest.mark.parametrize("case", FIXTURES["f1_double"], ids=_ids)
def test_f1_double_frozen_oracle(case):
    z = f1_double(build_field(case["q"]), *case["args"]).to_complex()
    assert abs(z - complex(*case["value"])) < 1e-8


@pytest.mark.parametrize("case", FIXTURES["f1_single"], ids=_ids)
def test_f1_single_frozen_oracle(case):
    z = f1_single(build_field(case["q"]), *case["args"]).to_complex()
    assert abs(z - complex(*case["value"])) < 1e-8


@pytest.mark.parametrize("case", FIXTURES["genfun_lhs"], ids=_ids)
def test_genfun_lhs_frozen_oracle(case):
    z = genfun_lhs(build_field(case["q"]), *case["args"]).to_complex()
    assert abs(z - complex(*case["value"])) < 1e-8


@pytest.mark.parametrize("q", [3, 4])
def test_f1_double_live_oracle_exhaustive(q):
    F, N = build_field(q), oracles.naive_field(q)
    for args in itertools.product(range(q - 1), repeat=4):
        for x, y in itertools.product(range(q), repeat=2):
            want = oracles.f1_double(N, *args, x, y)
            assert abs(f1_double(F, *args, x, y).to_complex() - want) < 1e-9


def test_vanishing_on_axes():
    F = build_field(7)
    for x in range(7):
        assert f1_double(F, 1, 2, 3, 4, x, 0) == 0
        assert f1_double(F, 1, 2, 3, 4, 0, x) == 0
        assert f1_single(F, 1, 2, 3, 4, x, 0) == 0


def test_f1_single_diagonal_is_a_single_sum():
    F, N = build_field(7), oracles.naive_field(7)
    m1 = F.minus_one
    for A, B, Bp, C in [(1, 2, 3, 4), (0, 5, 1, 2), (3, 3, 3, 0)]:
        for x in range(1, 7):
            want = N.chi(A + C, m1) * sum(
                N.chi(A, u) * N.chi(C - A, N.sub(1, u)) * N.chi(-B - Bp, N.sub(1, N.mul(u, x)))
                for u in range(7))
            assert abs(f1_single(F, A, B, Bp, C, x, x).to_complex() - want) < 1e-9


def test_two_analogues_differ():
    # smallest counterexample at q = 5 in sweep order
    F = build_field(5)
    found = next(args for args in itertools.product(range(4), range(4), range(4), range(4),
                                                    range(1, 5), range(1, 5))
                 if not f1_double(F, *args) == f1_single(F, *args))
    assert found == (0, 0, 0, 0, 1, 1)
    # 13 pairs of units with u + v != 1 against 3 units u != 1
    assert f1_double(F, *found) == 13
    assert f1_single(F, *found) == 3
    N = oracles.naive_field(5)
    assert abs(oracles.f1_double(N, *found) - 13) < 1e-9
    assert abs(oracles.f1_single(N, *found) - 3) < 1e-9


def test_thm21_zero_x():
    F = build_field(5)
    for args in [(1, 2, 3, 0), (0, 0, 0, 0), (3, 1, 2, 2)]:
        for y in range(1, 5):
            assert cyc_sum(thm21_terms(F, *args, 0, y), 4) == 0
            assert f1_double(F, *args, 0, y) == 0


def test_thm21_rejects_y0():
    with pytest.raises(DomainRestriction):
        thm21_rhs(build_field(5), 1, 1, 1, 1, 2, 0)
    assert len(thm21_terms(build_field(5), 1, 1, 1, 1, 2, 0, allow_y0=True)) == 4


def test_y1_delta_branch():
    F = build_field(7)
    # A conj(C) B' = eps: A=1, C=3, B'=2
    _, t2 = f1_at_y1_terms(F, 1, 4, 2, 3, 5)
    # (q-1) conj(A)(x) B'(-1)
    assert t2 == CycVal.root(6, -F.dlog(5) + 2 * F.dlog(F.minus_one)).scale(6)
    assert f1_at_y1_rhs(F, 1, 4, 2, 3, 5) == f1_double(F, 1, 4, 2, 3, 5, 1)
    assert f1_at_y1_rhs(F, 1, 4, 2, 3, 0) == 0


def test_reductions_domain():
    F = build_field(5)
    for y in (0, 1):
        with pytest.raises(DomainRestriction):
            thm31_rhs(F, 1, 1, 1, 2, y)
    for x in (0, 1):
        with pytest.raises(DomainRestriction):
            thm32_rhs(F, 1, 1, 1, x, 2)


def test_reductions_mirror_each_other():
    F = build_field(7)
    for A, B, C in itertools.product(range(6), repeat=3):
        for x in range(2, 7):
            for y in (0, 3):
                assert thm32_rhs(F, A, B, C, x, y) == (
                    f1_double(F, A, 0, B, C, x, y) if y == 0 else thm31_rhs(F, A, B, C, y, x))


def test_reduction_delta_branch():
    F = build_field(5)
    # y = x with B = eps switches on the third term
    assert thm31_rhs(F, 1, 0, 2, 3, 3) == f1_double(F, 1, 0, 0, 2, 3, 3)


def test_genfun_domain():
    F = build_field(5)
    for bad in [(0, 2, 2), (1, 1, 2), (1, 0, 2), (1, 2, 1), (1, 2, 0)]:
        with pytest.raises(DomainRestriction):
            genfun_lhs(F, 0, 0, 0, 0, *bad)
        with pytest.raises(DomainRestriction):
            genfun_rhs(F, 0, 0, 0, 0, *bad)


def test_genfun_term7_delta():
    F = build_field(5)
    # 1 - y - t = 0 and A B' conj(C) = eps
    y, t = 2, 4
    assert F.sub(F.sub(1, y), t) == 0
    terms = genfun_terms(F, 1, 2, 1, 2, 3, y, t)
    assert len(terms) == 9
    assert not terms[6].is_zero()
    assert genfun_terms(F, 1, 2, 1, 3, 3, y, t)[6].is_zero()


def test_genfun_as_printed_fails_somewhere():
    F = build_field(3)
    args = (0, 0, 0, 0, 1, 2, 2)
    assert not genfun_lhs(F, *args) == genfun_rhs(F, *args)
    fixed = cyc_sum(genfun_corrected_terms(F, *args), 2)
    assert genfun_lhs(F, *args) == fixed


def test_corrected_weights_shape():
    assert len(GENFUN_CORRECTED_WEIGHTS) == 9
    assert {w for w in GENFUN_CORRECTED_WEIGHTS} <= {-1, 0, 1}


@pytest.mark.parametrize("q", [3, 4])
def test_genfun_corrected_exhaustive(q):
    F = build_field(q)
    for chars in itertools.product(range(q - 1), repeat=4):
        for x in range(1, q):
            for y in range(2, q):
                for t in range(2, q):
                    lhs = genfun_lhs(F, *chars, x, y, t)
                    assert lhs == cyc_sum(genfun_corrected_terms(F, *chars, x, y, t), q - 1)
