from .interface import OracleInterface
from .boundaries import (
    boundary_expectation,
    looped_boundary_expectation,
    p20_closed,
    stated_looped_boundary,
)
from .diff import compare_tables, dp_vs_enum, looped_bound_exceedances
from .dp import RecurrenceDP, dp_expectations
from .enumeration import HistoryEnumerator, enumerate_exact
from .expectation_table import ExpectationTable, full_window
from .models import BoundaryRow, DiffReport, ThetaCell, ThetaTildeRow
from .theta import theta_table, theta_tilde

__all__ = [
    "OracleInterface",
    "BoundaryRow",
    "DiffReport",
    "ExpectationTable",
    "HistoryEnumerator",
    "RecurrenceDP",
    "ThetaCell",
    "ThetaTildeRow",
    "boundary_expectation",
    "compare_tables",
    "dp_expectations",
    "dp_vs_enum",
    "enumerate_exact",
    "full_window",
    "looped_bound_exceedances",
    "looped_boundary_expectation",
    "p20_closed",
    "stated_looped_boundary",
    "theta_table",
    "theta_tilde",
]
