import math

import pytest

from analytic import (
    AnalyticInterface,
    IdentityChecker,
    c_table,
    check_c_bound,
    column_moments,
    column_total,
    constructive_C,
    identity_checks,
    p_table,
)
from analytic.errors import TableRangeError, ToleranceUnreachableError

from config import GlobalConfig

GlobalConfig.DEBUG_MODE = True


@pytest.fixture(scope="module")
def exact_tables():
    return c_table(40, 40, "exact"), p_table(40, 40, "exact")


@pytest.fixture(scope="module")
def wide_tables():
    return c_table(300, 60, "float"), p_table(300, 60, "float")


def test_row_and_total_sums_are_exact_after_tail_correction(exact_tables):
    report = identity_checks(*exact_tables)
    for check in report.by_name("row_sum") + report.by_name("total_sum"):
        assert check.residual == 0.0
        assert check.passed
    assert report.by_name("row_sum")[0].raw_residual > 0


def test_bounds_hold_in_exact_tables(exact_tables):
    report = identity_checks(*exact_tables)
    for name in ("c_bound", "c2_lower_bound", "p_upper_bound", "p_row_zero"):
        assert all(check.passed for check in report.by_name(name)), name


def test_column_identities_on_tall_table(wide_tables):
    report = IdentityChecker().check(*wide_tables)
    for name in ("column_identity", "z_upper_bound", "error_envelope"):
        for check in report.by_name(name):
            assert check.passed, (name, check.index, check.residual)
    assert report.worst("column_identity").residual < 1e-9


def test_x_asymptotics(wide_tables):
    checks = IdentityChecker().x_asymptotics(wide_tables[0])
    assert [check.index for check in checks] == list(range(2, 51))
    assert all(check.passed for check in checks)


def test_short_table_misses_column_mass():
    report = identity_checks(c_table(5, 5, "exact"), p_table(5, 5, "exact"))
    assert not report.passed
    assert any(check.name == "column_identity" for check in report.failures())
    assert report.by_name("total_sum")[0].passed


def test_checker_rejects_swapped_tables(exact_tables):
    ctable, ptable = exact_tables
    with pytest.raises(TableRangeError):
        identity_checks(ptable, ctable)


def test_constructive_C_is_running_max(exact_tables):
    ctable = exact_tables[0]
    values = [constructive_C(ctable, k) for k in range(0, 20)]
    assert values[0] == 0
    assert values[1] == ctable[1, 1] * 2
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert check_c_bound(ctable).passed


def test_column_moments_with_tails(wide_tables):
    ctable = wide_tables[0]
    moments = column_moments(ctable, 5)
    assert moments.x_tail < 1e-9
    assert not moments.row_sum_fallback
    rhs = 6 * math.fsum(ctable.values[1, 1:6])
    lhs = moments.z * 5 + math.fsum(l * l * (l + 1) * ctable.values[l, 5] for l in range(2, 301))
    assert abs(lhs - rhs) < 1e-9
    assert moments.z <= rhs / 5 + 1e-12


def test_column_moments_zero_column(wide_tables):
    assert column_moments(wide_tables[0], 0).x == 0.0


def test_column_moments_short_table():
    with pytest.raises(ToleranceUnreachableError):
        column_moments(c_table(10, 10, "exact"), 5)


def test_column_moments_row_sum_fallback():
    moments = column_moments(c_table(3, 8, "exact"), 8, tolerance=math.inf)
    assert moments.row_sum_fallback
    assert moments.x_tail > 0


def test_column_total(wide_tables):
    ctable = wide_tables[0]
    # c(1,2) = 1/10 plus x_2, about 0.0283
    assert abs(column_total(ctable, 2) - 0.1283) < 0.002
    assert 0.25 < column_total(ctable, 40) * 40**2 / 4 < 2


def test_interface_passthrough(exact_tables):
    interface = AnalyticInterface()
    assert interface.check_c_bound(exact_tables[0]).passed
    assert interface.identity_checks(*exact_tables).lmax == 40


@pytest.mark.slow
def test_identities_at_full_size():
    ctable, ptable = c_table(300, 300, "exact"), p_table(300, 300, "exact")
    report = identity_checks(ctable, ptable, tol=1e-6)

    assert report.by_name("total_sum")[0].residual < 1e-6
    assert all(check.passed for check in report.by_name("row_sum") if check.index <= 20)
    for check in report.by_name("column_identity"):
        if check.index <= 50:
            assert check.residual < 1e-9
    assert report.by_name("p_upper_bound")[0].passed


def test_residuals_shrink_with_truncation():
    checker = IdentityChecker()
    short = [
        c for c in checker.column_identities(c_table(10, 10, "float"))
        if c.name == "column_identity"
    ]
    tall = [
        c for c in checker.column_identities(c_table(30, 10, "float"))
        if c.name == "column_identity"
    ]
    assert max(c.residual for c in tall) < max(c.residual for c in short)
    for low, high in zip(short, tall):
        assert low.index == high.index
        assert high.residual <= low.residual + 1e-12

    small = checker.row_and_total_sums(c_table(30, 30, "exact"))[-1]
    large = checker.row_and_total_sums(c_table(60, 60, "exact"))[-1]
    assert small.name == large.name == "total_sum"
    assert large.raw_residual < small.raw_residual
