from fractions import Fraction

import pytest

from analytic import (
    double_factorial,
    m1_closed,
    m2_leading,
    p_row_zero,
    row_sum_target,
    x_closed_form,
)
from analytic.closed_forms import c1, c1_tail, rows_beyond
from analytic.errors import ArgumentDomainError

from config import GlobalConfig

GlobalConfig.DEBUG_MODE = True


@pytest.mark.parametrize("n,expected", [(-1, 1), (0, 1), (1, 1), (7, 105), (8, 384)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


@pytest.mark.parametrize("n", [3, 1000, 10**6])
def test_m1_closed(n):
    assert m1_closed(n, 1) == Fraction(2 * n, 3)
    assert m1_closed(n, 2) == Fraction(n, 6)
    assert m1_closed(0, 7) == 0


def test_m2_leading():
    assert m2_leading(10**6, 100) == 400
    assert m2_leading(12345, 2) == 12345


@pytest.mark.parametrize(
    "call",
    [lambda: m1_closed(5, 0), lambda: m1_closed(-1, 2), lambda: m2_leading(5, 0), lambda: double_factorial(-3)],
)
def test_domain_errors(call):
    with pytest.raises(ArgumentDomainError):
        call()


def test_x_closed_form():
    assert x_closed_form(0) == 1
    assert x_closed_form(2) == Fraction(1, 6)


def test_row_sum_target():
    assert row_sum_target(1) == Fraction(2, 3)
    assert row_sum_target(2) == Fraction(1, 6)


def test_row_sums_telescope_to_one():
    partial = sum((row_sum_target(l) for l in range(1, 41)), Fraction(0))
    assert partial + rows_beyond(40) == 1


def test_c1_tail_matches_partial_sums():
    head = sum((c1(k) for k in range(0, 21)), Fraction(0))
    assert head + c1_tail(20) == Fraction(2, 3)
    middle = sum((c1(k) for k in range(21, 2001)), Fraction(0))
    assert c1_tail(20) == middle + c1_tail(2000)
    assert c1_tail(20) == Fraction(137, 1518)


def test_p_row_zero():
    assert p_row_zero(1) == 0
    assert p_row_zero(2) == 1
    assert p_row_zero(5) == Fraction(1, 8)
