import numpy as np
import pytest

from ffhyper.characters import (
    binom,
    binom_table,
    binomial_theorem_rhs,
    char_eval,
    char_sum,
    char_value,
    delta_char,
    delta_point,
    jacobi,
    jacobi_table,
)
from ffhyper.cyclo import CycVal
from ffhyper.field import build_field

import oracles


def test_char_eval():
    F = build_field(5)
    assert all(char_eval(F, j, 0) is None for j in range(4))
    assert all(char_eval(F, 0, x) == 0 for x in range(1, 5))
    assert char_eval(F, 2, 4) == 0
    assert char_eval(F, 1, 2) == 1


def test_deltas():
    F = build_field(7)
    assert delta_char(F, 0) == 1
    assert delta_char(F, 1) == 0
    assert delta_char(F, 6) == 1
    assert delta_point(0) == 1 and delta_point(1) == 0 and delta_point(4) == 0


def test_jacobi_examples():
    for q in (3, 4, 5, 8, 9):
        assert jacobi(build_field(q), 0, 0) == q - 2
    assert jacobi(build_field(5), 2, 2) == -1
    assert jacobi(build_field(3), 1, 1) == 1
    assert abs(jacobi(build_field(5), 2, 2).to_complex() + 1) < 1e-9


def test_binom_examples():
    for q in (3, 5, 8, 13):
        F = build_field(q)
        assert binom(F, 0, 0) == q - 2
        for A in range(1, q - 1):
            assert binom(F, A, 0) == -1
    assert binom(build_field(3), 1, 1) == -1


def test_binomial_theorem_examples():
    F = build_field(5)
    assert binomial_theorem_rhs(F, 2, 0) == 1
    assert binomial_theorem_rhs(F, 2, 3) == char_value(F, 2, 4) == 1


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11])
def test_jacobi_table_matches_direct_loop(q):
    F = build_field(q)
    T = jacobi_table(F)
    for a in range(q - 1):
        for b in range(q - 1):
            assert np.array_equal(T[a, b], jacobi(F, a, b).coeffs)


@pytest.mark.parametrize("q", [5, 9])
def test_binom_table_definition(q):
    F = build_field(q)
    T = binom_table(F)
    m1 = F.dlog(F.minus_one)
    for a in range(q - 1):
        for b in range(q - 1):
            want = jacobi(F, a, -b).shift(b * m1)
            assert CycVal(T[a, b]) == want


def test_large_field_binom_without_table():
    F = build_field(131)
    v = binom(F, 7, 3)
    assert abs(v.to_complex() - oracles.binom(oracles.naive_field(131), 7, 3)) < 1e-8


@pytest.mark.parametrize("q", [4, 5, 7, 9])
def test_jacobi_against_float_oracle(q):
    F, N = build_field(q), oracles.naive_field(q)
    for a in range(q - 1):
        for b in range(q - 1):
            assert abs(jacobi(F, a, b).to_complex() - oracles.jacobi(N, a, b)) < 1e-9


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13, 16])
def test_jacobi_absolute_value(q):
    F = build_field(q)
    n = q - 1
    for a in range(1, n):
        for b in range(1, n):
            if (a + b) % n:
                assert abs(abs(jacobi(F, a, b).to_complex()) ** 2 - q) < 1e-6


@pytest.mark.parametrize("q", [2, 3, 4, 27, 64])
def test_orthogonality(q):
    F = build_field(q)
    for j in range(q - 1):
        assert char_sum(F, j) == (q - 1) * delta_char(F, j)
