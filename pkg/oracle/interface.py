from fractions import Fraction

from analytic import AnalyticTable
from .boundaries import (
    boundary_expectation,
    looped_boundary_expectation,
    p20_closed,
    stated_looped_boundary,
)
from .diff import compare_tables, dp_vs_enum
from .dp import Mode, dp_expectations
from .enumeration import enumerate_exact
from .expectation_table import ExpectationTable
from .models import BoundaryRow, DiffReport, ThetaCell, ThetaTildeRow
from .theta import theta_table, theta_tilde


class OracleInterface:
    """
    Exact expectations of G_1^n by recurrence and by enumeration.
    """

    def dp_expectations(
        self, n: int, lmax: int, kmax: int, dmax: int, mode: Mode = "auto"
    ) -> ExpectationTable:
        return dp_expectations(n, lmax, kmax, dmax, mode)

    def enumerate_exact(self, n: int, workers: int = 1) -> ExpectationTable:
        return enumerate_exact(n, workers)

    def dp_vs_enum(self, n: int, mode: str = "exact", workers: int = 1) -> DiffReport:
        return dp_vs_enum(n, mode, workers)

    def compare_tables(
        self, left: ExpectationTable, right: ExpectationTable
    ) -> DiffReport:
        return compare_tables(left, right)

    def theta_table(
        self, table: ExpectationTable, ctable: AnalyticTable
    ) -> list[ThetaCell]:
        return theta_table(table, ctable)

    def theta_tilde(self, table: ExpectationTable) -> list[ThetaTildeRow]:
        return theta_tilde(table)

    def boundary_expectation(self, l: int) -> Fraction:
        return boundary_expectation(l)

    def looped_boundary_expectation(self, l: int) -> Fraction:
        return looped_boundary_expectation(l)

    def p20_closed(self, n: int) -> Fraction:
        return p20_closed(n)

    def boundary_rows(self, lmax: int) -> list[BoundaryRow]:
        """
        Both boundary probabilities next to enumeration, for every l whose
        graph size stays within the enumeration cap.
        """
        rows = []
        for l in range(1, lmax + 1):
            table = enumerate_exact(l + 1)
            closed = boundary_expectation(l)
            enumerated = table.en(l, 2)
            rows.append(
                BoundaryRow(
                    name="loopless",
                    l=l,
                    n=l + 1,
                    closed_form=str(closed),
                    enumerated=str(enumerated),
                    matches=closed == enumerated,
                )
            )
            if l >= 3:
                table = enumerate_exact(l - 1)
                closed = looped_boundary_expectation(l)
                enumerated = table.ep(l, 0)
                rows.append(
                    BoundaryRow(
                        name="looped",
                        l=l,
                        n=l - 1,
                        closed_form=str(closed),
                        enumerated=str(enumerated),
                        stated=str(stated_looped_boundary(l)),
                        matches=closed == enumerated,
                    )
                )
        return rows
