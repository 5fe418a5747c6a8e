from fractions import Fraction

import numpy as np
import pytest

from analytic import AnalyticInterface, c_table, p_table
from analytic.errors import TableRangeError
from analytic.tables import resolve_mode

from config import GlobalConfig

GlobalConfig.DEBUG_MODE = True

analytic = AnalyticInterface()


@pytest.mark.parametrize(
    "cell,expected",
    [
        ((1, 1), Fraction(2, 15)),
        ((1, 2), Fraction(1, 10)),
        ((2, 1), Fraction(2, 105)),
        ((5, 0), Fraction(0)),
        ((0, 4), Fraction(0)),
    ],
)
def test_c_values(cell, expected):
    assert analytic.c_table(6, 6, "exact")[cell] == expected


@pytest.mark.parametrize(
    "cell,expected",
    [
        ((2, 0), Fraction(1)),
        ((3, 0), Fraction(1, 2)),
        ((4, 0), Fraction(1, 4)),
        ((3, 1), Fraction(1, 10)),
        ((2, 3), Fraction(0)),
        ((1, 0), Fraction(0)),
    ],
)
def test_p_values(cell, expected):
    assert analytic.p_table(6, 6, "exact")[cell] == expected


def test_p_first_column_halves():
    table = p_table(30, 3, "exact")
    for l in range(2, 31):
        assert table[l, 0] == Fraction(1, 2 ** (l - 2))


def test_float_tables_track_exact_tables():
    for build in (c_table, p_table):
        exact = build(40, 40, "exact").as_float()
        approximate = build(40, 40, "float").values
        np.testing.assert_allclose(approximate, exact, rtol=1e-12, atol=0)


def test_zero_row_and_column():
    table = c_table(10, 10, "float")
    assert not table.values[:, 0].any()
    assert not table.values[0, :].any()


def test_p_ceiling_holds():
    table = p_table(60, 60, "exact")
    for l in range(2, 61):
        ceiling = Fraction(6, l * (l + 1))
        assert all(value <= ceiling for value in table.row(l))


def test_auto_mode(monkeypatch):
    assert resolve_mode("auto", 10, 10) == "exact"
    assert resolve_mode("auto", 10, 10_000) == "float"
    assert c_table(3, 3).mode == "exact"


@pytest.mark.parametrize("lmax,kmax", [(0, 5), (3, -1)])
def test_empty_window(lmax, kmax):
    with pytest.raises(TableRangeError):
        c_table(lmax, kmax)


def test_unknown_mode():
    with pytest.raises(TableRangeError):
        p_table(3, 3, "decimal")


def test_cell_outside_table():
    table = c_table(4, 4)
    with pytest.raises(TableRangeError):
        table[5, 1]
    with pytest.raises(TableRangeError):
        table.column(9)


def test_cells_and_formatting():
    table = c_table(2, 2, "exact")
    cells = list(table.cells())
    assert len(cells) == 2 * 3
    assert (1, 2, Fraction(1, 10)) in cells
    assert table.format_value(Fraction(1, 10)) == "1/10"
    assert c_table(2, 2, "float").format_value(0.1) == "0.1"


def test_truncation_diagnostics():
    table = c_table(50, 50, "float")
    diagnostics = table.diagnostics
    assert diagnostics.total_missing > 0
    assert abs(diagnostics.row_mass[1] + diagnostics.row_missing[1] - 2 / 3) < 1e-12
    assert p_table(5, 5).diagnostics.total_missing is None
