from fractions import Fraction

from .closed_forms import m1_closed, m2_leading, x_closed_form
from .identities import check_c_bound, identity_checks
from .models import IdentityCheck, IdentityReport
from .moments import ColumnMoments, column_moments, column_total, constructive_C
from .tables import AnalyticTable, Mode, Number, c_table, p_table


class AnalyticInterface:
    """
    Constant tables, closed forms and their series identities.
    """

    def c_table(self, lmax: int, kmax: int, mode: Mode = "auto") -> AnalyticTable:
        return c_table(lmax, kmax, mode)

    def p_table(self, lmax: int, kmax: int, mode: Mode = "auto") -> AnalyticTable:
        return p_table(lmax, kmax, mode)

    def m1_closed(self, n: int, d: int) -> Fraction:
        return m1_closed(n, d)

    def m2_leading(self, n: int, k: int) -> Fraction:
        return m2_leading(n, k)

    def x_closed_form(self, k: int) -> Fraction:
        return x_closed_form(k)

    def column_moments(
        self, table: AnalyticTable, k: int, tolerance: float = 1e-9
    ) -> ColumnMoments:
        return column_moments(table, k, tolerance)

    def column_total(self, table: AnalyticTable, k: int) -> float:
        return column_total(table, k)

    def constructive_C(self, table: AnalyticTable, k: int) -> Number:
        return constructive_C(table, k)

    def check_c_bound(self, table: AnalyticTable) -> IdentityCheck:
        return check_c_bound(table)

    def identity_checks(
        self,
        ctable: AnalyticTable,
        ptable: AnalyticTable,
        tol: float = 1e-6,
        column_tol: float = 1e-9,
    ) -> IdentityReport:
        return identity_checks(ctable, ptable, tol, column_tol)
