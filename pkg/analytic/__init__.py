from .interface import AnalyticInterface
from .closed_forms import (
    double_factorial,
    m1_closed,
    m2_leading,
    p_row_zero,
    row_sum_target,
    x_closed_form,
)
from .identities import IdentityChecker, check_c_bound, identity_checks
from .models import IdentityCheck, IdentityReport
from .moments import ColumnMoments, column_moments, column_total, constructive_C
from .tables import AnalyticTable, TruncationDiagnostics, c_table, p_table

__all__ = [
    "AnalyticInterface",
    "AnalyticTable",
    "ColumnMoments",
    "IdentityCheck",
    "IdentityChecker",
    "IdentityReport",
    "TruncationDiagnostics",
    "c_table",
    "check_c_bound",
    "column_moments",
    "column_total",
    "constructive_C",
    "double_factorial",
    "identity_checks",
    "m1_closed",
    "m2_leading",
    "p_row_zero",
    "p_table",
    "row_sum_target",
    "x_closed_form",
]
