from fractions import Fraction

import numpy as np
import pytest

from oracle import RecurrenceDP, dp_expectations, full_window, p20_closed
from oracle.dp import compensated_sum
from oracle.errors import WindowTooSmallError

from config import GlobalConfig

GlobalConfig.DEBUG_MODE = True


def full(n, mode="exact"):
    return dp_expectations(n, *full_window(n), mode=mode)


def test_single_vertex():
    table = full(1)
    assert table.ep(2, 0) == 1
    assert table.m1(2) == 1
    assert not table.EN.any()


def test_two_vertices():
    table = full(2)
    assert table.ep(2, 0) == Fraction(2, 3)
    assert table.ep(3, 0) == Fraction(2, 3)
    assert table.en(1, 2) == Fraction(2, 3)
    assert [table.m1(d) for d in (1, 2, 3)] == [Fraction(2, 3)] * 3


def test_three_vertices_boundary_cell():
    assert full(3).en(2, 2) == Fraction(2, 15)


@pytest.mark.parametrize("n", [1, 2, 5, 12, 20])
def test_mass_conservation(n):
    table = full(n)
    assert table.EN.sum() + table.EP.sum() == n
    assert table.M1.sum() == n
    assert table.outside_mass == 0
    assert table.is_full_window


@pytest.mark.parametrize("n", [1, 2, 3, 10, 25])
def test_p20_closed_form(n):
    assert dp_expectations(n, 2, 1, 2, mode="exact").ep(2, 0) == p20_closed(n)


@pytest.mark.parametrize("n", [2, 6, 40, 64])
def test_first_degrees_closed_forms(n):
    table = dp_expectations(n, 2, 1, 3, mode="exact")
    assert table.m1(1) == Fraction(2 * (n - 1), 3)
    assert table.m1(2) == Fraction(n, 6) + Fraction(1, 12) + Fraction(3, 4 * (2 * n - 1))


def test_unreachable_cells_are_zero():
    n = 6
    table = full(n)
    for l in range(table.lmax + 1):
        for k in range(table.kmax + 1):
            if 2 * l + k > 2 * n:
                assert table.en(l, k) == 0
            if 2 * l + k - 2 > 2 * n:
                assert table.ep(l, k) == 0


def test_small_window_is_exact_inside():
    n = 12
    small = dp_expectations(n, 3, 4, 4, mode="exact")
    reference = full(n)
    for l in range(small.lmax + 1):
        for k in range(small.kmax + 1):
            assert small.en(l, k) == reference.en(l, k)
            assert small.ep(l, k) == reference.ep(l, k)
    assert not small.is_full_window
    assert small.outside_mass > 0


def test_float_tracks_exact():
    n = 15
    exact, approximate = full(n), full(n, "float")
    for name in ("EN", "EP", "M1"):
        np.testing.assert_allclose(
            getattr(approximate, name),
            getattr(exact, name).astype(np.float64),
            rtol=1e-12,
            atol=1e-14,
        )


def test_compensated_sum_keeps_rounding_error():
    terms = [np.array([1.0, 0.5]), np.array([1e-16, 0.25]), np.array([1e-16, 0.25])]
    total, error = compensated_sum(terms)
    np.testing.assert_array_equal(total, [1.0, 1.0])
    assert error[0] == pytest.approx(2e-16)
    assert error[1] == 0.0


def test_float_leaf_count_over_many_steps():
    n = 3000
    table = dp_expectations(n, 40, 40, 40, mode="float")
    assert table.m1(1) == pytest.approx(2 * (n - 1) / 3, rel=1e-13)


def test_auto_mode_switches_to_float():
    assert dp_expectations(10, 3, 3, 3).mode == "exact"
    assert dp_expectations(500, 3, 3, 3).mode == "float"


def test_window_access():
    table = dp_expectations(5, 2, 2, 2, mode="exact")
    with pytest.raises(WindowTooSmallError):
        table.en(3, 0)
    with pytest.raises(WindowTooSmallError):
        table.m1(table.dmax + 1)


@pytest.mark.parametrize("window", [(0, 2, 2), (2, 0, 2), (2, 2, 0)])
def test_empty_window(window):
    with pytest.raises(WindowTooSmallError):
        RecurrenceDP().run(4, *window)


def test_rows_listing():
    rows = list(full(2).rows())
    assert ("EN", 1, 2, Fraction(2, 3)) in rows
    assert ("M1", 0, 3, Fraction(2, 3)) in rows
    assert all(value != 0 for _, _, _, value in rows)


def test_secdeg_expectation():
    table = full(2)
    # X_2(0): two looped vertices w.p. 1/3, one w.p. 2/3
    assert table.secdeg_expectation(0) == Fraction(4, 3)
