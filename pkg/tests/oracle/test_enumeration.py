from fractions import Fraction

import pytest

from oracle import (
    HistoryEnumerator,
    OracleInterface,
    boundary_expectation,
    compare_tables,
    dp_expectations,
    dp_vs_enum,
    enumerate_exact,
    full_window,
    looped_boundary_expectation,
    stated_looped_boundary,
)
from oracle.enumeration import count_subtree, history_prefixes
from oracle.errors import EnumerationCapError

from config import GlobalConfig

GlobalConfig.DEBUG_MODE = True


def test_single_vertex():
    table = enumerate_exact(1)
    assert table.ep(2, 0) == 1
    assert table.provenance == "enumeration"
    assert sum(1 for _ in table.rows()) == 2


def test_two_vertices():
    table = enumerate_exact(2)
    assert table.ep(2, 0) == Fraction(2, 3)
    assert table.ep(3, 0) == Fraction(2, 3)
    assert table.en(1, 2) == Fraction(2, 3)
    assert table.m1(1) == table.m1(2) == table.m1(3) == Fraction(2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_recurrences_match_enumeration(n):
    report = dp_vs_enum(n, mode="exact")
    assert report.passed
    assert report.identical
    assert report.max_abs_diff == 0.0
    assert report.uncovered == []


def test_float_recurrences_match_enumeration():
    report = dp_vs_enum(5, mode="float")
    assert report.mode == "float"
    assert report.max_abs_diff < 1e-12
    assert report.passed


def test_parallel_enumeration_matches_sequential():
    sequential = enumerate_exact(5)
    parallel = HistoryEnumerator().run(5, workers=2)
    assert compare_tables(sequential, parallel).identical


def test_prefixes_partition_the_sequences():
    n = 5
    total = sum(count_subtree(n, prefix).sequences for prefix in history_prefixes(n))
    assert total == 9 * 7 * 5 * 3


def test_cap():
    with pytest.raises(EnumerationCapError):
        HistoryEnumerator(cap=3).run(4)
    with pytest.raises(EnumerationCapError):
        enumerate_exact(9)


def test_windowed_table_is_reported_uncovered():
    report = compare_tables(dp_expectations(4, 2, 2, 2, mode="exact"), enumerate_exact(4))
    assert report.uncovered
    assert not report.passed


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_loopless_boundary(l):
    assert enumerate_exact(l + 1).en(l, 2) == boundary_expectation(l)


@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_looped_boundary(l):
    table = enumerate_exact(l - 1)
    assert table.ep(l, 0) == looped_boundary_expectation(l)
    assert table.ep(l, 0) != stated_looped_boundary(l)


def test_small_n_looped_exceedance():
    report = dp_vs_enum(2)
    cells = {(e.l, e.k): e for e in report.looped_bound_exceedances}
    assert (3, 0) in cells
    assert cells[3, 0].expectation == "2/3"
    assert cells[3, 0].bound == "1/2"
    assert cells[3, 0].small_n


def test_boundary_rows():
    rows = OracleInterface().boundary_rows(5)
    assert rows
    assert all(row.matches for row in rows)
    assert {row.name for row in rows} >= {"loopless"}


def test_enumeration_window():
    table = enumerate_exact(3)
    assert (table.lmax, table.kmax, table.dmax) == full_window(3)
