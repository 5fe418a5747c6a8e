import math

import pytest

from config import GlobalConfig
from experiments import ExperimentsInterface, ReportBuilder, concentration_threshold, load_golden
from experiments.errors import ExperimentConfigError

GlobalConfig.DEBUG_MODE = True

experiments = ExperimentsInterface()


def test_golden_files():
    assert load_golden("theorem2")["C"] == 5.0
    assert load_golden("concentration")["cv_ceiling"] == 0.1
    with pytest.raises(ExperimentConfigError):
        load_golden("missing")


def test_theorem2_from_recurrences():
    report = experiments.theorem2_report(10**5, kmax=40)
    assert report.passed
    assert report.golden_ref == "golden/theorem2.json"
    k2 = report.rows[1]
    assert k2.k == 2
    assert 0.1 <= k2.ratio <= 0.2
    assert [row.checked for row in report.rows[9:40]] == [True] * 31


def test_theorem2_needs_seed_for_monte_carlo():
    with pytest.raises(ExperimentConfigError):
        experiments.theorem2_report(100, kmax=5, source="mc")
    with pytest.raises(ExperimentConfigError):
        experiments.theorem2_report(100, kmax=5, source="exact")


def test_theorem1_m1_reduces_to_first_degree_formula():
    report = experiments.theorem1_report(2000, 1, 5, 10, seed=5)
    assert report.kind == "theorem1"
    for row in report.rows:
        assert row.formula == pytest.approx(4 * 2000 / (row.d * (row.d + 1) * (row.d + 2)))


def test_degree_report_against_recurrences():
    report = experiments.degree_report(500, 6, 40, seed=9)
    assert report.passed
    assert all(row.exact is not None for row in report.rows)


def test_concentration_needs_replicates():
    with pytest.raises(ExperimentConfigError):
        experiments.concentration_report(1000, [1, 2], 49, seed=1)


def test_concentration_threshold():
    assert concentration_threshold(100, 2) == pytest.approx(2 * 10 * math.log(100) ** 2)


def test_concentration_small():
    report = experiments.concentration_report(2000, [1, 2, 3], 50, seed=3)
    assert [row.k for row in report.rows] == [1, 2, 3]
    assert all(row.exceedances == 0 for row in report.rows)
    assert all(row.cv_se >= 0 for row in report.rows)
    again = experiments.concentration_report(2000, [1, 2, 3], 50, seed=3)
    assert again == report


def test_concentration_trend():
    small = experiments.concentration_report(500, [1, 2], 60, seed=4, cv_ceiling=math.inf)
    large = experiments.concentration_report(5000, [1, 2], 60, seed=4, cv_ceiling=math.inf)
    trend = experiments.concentration_trend(small, large)
    assert [row.k for row in trend.rows] == [1, 2]
    assert trend.passed


def test_bound_checks_small_grid():
    report = experiments.bound_checks([10, 40], lmax=8, kmax=10)
    names = {(row.n, row.bound) for row in report.rows}
    assert {(10, "lemma1"), (10, "theorem4"), (10, "lemma2"), (10, "p20")} <= names
    assert report.passed


def test_bound_checks_report_small_n_exceedance():
    report = ReportBuilder().bound_checks([2], lmax=4, kmax=4)
    assert any(
        e["n"] == 2 and (e["l"], e["k"]) == (3, 0) for e in report.looped_exceedances
    )
    lemma2 = next(row for row in report.rows if row.bound == "lemma2")
    assert lemma2.cells == 0
    assert lemma2.passed


@pytest.mark.slow
def test_bound_checks_default_grid():
    report = experiments.bound_checks([10, 100, 1000, 10_000])
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize("m", [2, 3])
def test_theorem1_at_scale(m):
    report = experiments.theorem1_report(10**5, m, 10, 50, seed=21)
    assert report.passed
    assert [row.d for row in report.rows] == list(range(m, 11))


@pytest.mark.slow
def test_concentration_at_scale():
    large = experiments.concentration_report(10**5, list(range(1, 11)), 200, seed=8)
    assert large.passed
    small = experiments.concentration_report(10**4, list(range(1, 11)), 200, seed=8, cv_ceiling=math.inf)
    assert experiments.concentration_trend(small, large).passed


@pytest.mark.slow
def test_theorem2_at_a_million():
    report = experiments.theorem2_report(10**6, kmax=40, lmax=64)
    checked = [row for row in report.rows if row.checked]
    assert [row.k for row in checked] == [2] + list(range(10, 41))
    assert all(row.within for row in checked)
    assert report.passed
