import math
from fractions import Fraction

from logger import Logger
from .closed_forms import (
    c1_tail,
    c2_floor,
    p_ceiling,
    p_row_zero,
    row_sum_target,
    rows_beyond,
    x_closed_form,
)
from .config import AnalyticConfig
from .errors import TableRangeError
from .models import IdentityCheck, IdentityReport
from .moments import c_bound, constructive_C
from .tables import AnalyticTable, total


class IdentityChecker:
    """
    Verifies the series identities and bounds satisfied by the c and p tables.

    Truncated sums miss the mass beyond the window. Row and total sums are
    therefore compared after adding the exact tail of each row, obtained from
    summing the recurrence over a row:
        (l+2) R_l(K) = (l-1) R_{l-1}(K) - (l+K) c(l,K)
    which gives the tail T_l = sum_{k>K} c(l,k) as
        T_1 = -2/(K+2) + 8/(K+3) - 4/(K+4)
        T_l = [(l-1) T_{l-1} + (l+K) c(l,K)] / (l+2)
    and rows l > L hold 2/((L+1)(L+2)) in total. The uncorrected residual is
    reported alongside as raw_residual.
    """

    def __init__(self, tolerance: float = 1e-6, column_tolerance: float = 1e-9):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)
        self.tolerance = tolerance
        self.column_tolerance = column_tolerance

    def check(self, ctable: AnalyticTable, ptable: AnalyticTable) -> IdentityReport:
        if ctable.kind != "c" or ptable.kind != "p":
            raise TableRangeError("identity checks need a c table and a p table")

        checks = (
            self.row_and_total_sums(ctable)
            + self.column_identities(ctable)
            + self.error_envelope(ctable)
            + self.x_asymptotics(ctable)
            + [self.c2_lower_bound(ctable), check_c_bound(ctable)]
            + self.p_bounds(ptable)
        )
        report = IdentityReport(
            lmax=ctable.lmax, kmax=ctable.kmax, mode=ctable.mode, checks=checks
        )

        for failure in report.failures():
            self.logger.warning(
                f"Identity {failure.name}[{failure.index}] failed: "
                f"residual {failure.residual:.3e} > {failure.tolerance:.3e}"
            )
        self.logger.info(
            f"Checked {len(checks)} identities, {len(report.failures())} failed"
        )
        return report

    def row_and_total_sums(self, table: AnalyticTable) -> list[IdentityCheck]:
        exact = table.exact
        L, K = table.lmax, table.kmax
        last = [table.values[l, K] for l in range(L + 1)]

        checks = []
        corrected_total = []
        raw_total = []
        tail = c1_tail(K) if exact else float(c1_tail(K))
        for l in range(1, L + 1):
            if l > 1:
                tail = ((l - 1) * tail + (l + K) * last[l]) / (l + 2)
            inside = total(table.values[l, :], exact)
            target = row_sum_target(l) if exact else float(row_sum_target(l))

            residual = abs(float(inside + tail - target))
            checks.append(
                IdentityCheck(
                    name="row_sum",
                    index=l,
                    residual=residual,
                    raw_residual=abs(float(target - inside)),
                    tolerance=self.tolerance,
                    passed=residual <= self.tolerance,
                )
            )
            corrected_total.append(inside + tail)
            raw_total.append(inside)

        beyond = rows_beyond(L) if exact else float(rows_beyond(L))
        residual = abs(float(total(corrected_total, exact) + beyond - 1))
        checks.append(
            IdentityCheck(
                name="total_sum",
                residual=residual,
                raw_residual=abs(float(1 - total(raw_total, exact))),
                tolerance=self.tolerance,
                passed=residual <= self.tolerance,
            )
        )
        return checks

    def column_identities(self, table: AnalyticTable) -> list[IdentityCheck]:
        """
        sum_{l>=2} (l+k) l (l+1) c(l,k) = 6 sum_{s<=k} c(1,s), and the bound
        z_k <= (1/k) 6 sum_{s<=k} c(1,s) that follows from it.

        Column sums are taken in float64 with compensated summation, also for
        exact tables.
        """
        values = table.as_float()
        rows = range(2, table.lmax + 1)
        checks = []
        for k in range(1, table.kmax + 1):
            column = values[:, k]
            lhs = math.fsum((l + k) * l * (l + 1) * column[l] for l in rows)
            rhs = 6 * math.fsum(values[1, 1 : k + 1])
            residual = abs(lhs - rhs)
            checks.append(
                IdentityCheck(
                    name="column_identity",
                    index=k,
                    residual=residual,
                    tolerance=self.column_tolerance,
                    passed=residual <= self.column_tolerance,
                )
            )

            z = math.fsum(l * (l + 1) * column[l] for l in rows)
            excess = max(0.0, z - rhs / k)
            checks.append(
                IdentityCheck(
                    name="z_upper_bound",
                    index=k,
                    residual=excess,
                    tolerance=self.column_tolerance,
                    passed=excess <= self.column_tolerance,
                )
            )
        return checks

    def error_envelope(self, table: AnalyticTable) -> list[IdentityCheck]:
        """
        sum_l (2l+k)^2 c(l,k) = (4+4k) c(1,k) + 4 z_k + (4k-4) y_k + k^2 sum_l c(l,k)
        """
        values = table.as_float()
        rows = range(2, table.lmax + 1)
        checks = []
        for k in range(1, table.kmax + 1):
            column = values[:, k]
            lhs = math.fsum((2 * l + k) ** 2 * column[l] for l in range(1, table.lmax + 1))
            y = math.fsum(l * column[l] for l in rows)
            z = math.fsum(l * (l + 1) * column[l] for l in rows)
            mass = math.fsum(column[1:])
            rhs = math.fsum(
                [(4 + 4 * k) * column[1], 4 * z, (4 * k - 4) * y, k * k * mass]
            )

            residual = abs(lhs - rhs)
            checks.append(
                IdentityCheck(
                    name="error_envelope",
                    index=k,
                    residual=residual,
                    tolerance=self.column_tolerance,
                    passed=residual <= self.column_tolerance,
                )
            )
        return checks

    def x_asymptotics(self, table: AnalyticTable) -> list[IdentityCheck]:
        """
        |x_k - 2/((k+1)(k+2))| k^3 / ln^2 k stays bounded for 2 <= k <= 50.
        """
        values = table.as_float()
        constant = AnalyticConfig.X_ASYMPTOTIC_CONSTANT
        checks = []
        for k in range(2, min(table.kmax, 50) + 1):
            x = math.fsum(values[2:, k])
            scaled = abs(x - float(x_closed_form(k))) * k**3 / math.log(k) ** 2
            checks.append(
                IdentityCheck(
                    name="x_asymptotic",
                    index=k,
                    residual=scaled,
                    tolerance=constant,
                    passed=scaled <= constant,
                )
            )
        return checks

    def c2_lower_bound(self, table: AnalyticTable) -> IdentityCheck:
        """c(l, 2) >= 24 (l-1)! / (5 (2l+4)!!) for every row."""
        if table.kmax < 2:
            return IdentityCheck(
                name="c2_lower_bound",
                residual=0.0,
                tolerance=0.0,
                passed=True,
                detail="column 2 outside the table",
            )

        worst, worst_row = 0.0, None
        for l in range(1, table.lmax + 1):
            floor = c2_floor(l)
            value = table.values[l, 2]
            if table.exact:
                shortfall = float(floor - value) if value < floor else 0.0
            else:
                # relative slack for float rounding
                shortfall = max(0.0, float(floor) * (1 - 1e-12) - value)
            if shortfall > worst:
                worst, worst_row = shortfall, l
        return IdentityCheck(
            name="c2_lower_bound",
            index=worst_row,
            residual=worst,
            tolerance=0.0,
            passed=worst == 0.0,
        )

    def p_bounds(self, table: AnalyticTable) -> list[IdentityCheck]:
        """p(l, k) <= 6/(l(l+1)) everywhere and p(l, 0) = 2^-(l-2)."""
        exact = table.exact
        worst, worst_cell = 0.0, None
        for l in range(2, table.lmax + 1):
            ceiling = p_ceiling(l) if exact else float(p_ceiling(l)) * (1 + 1e-12)
            for k in range(table.kmax + 1):
                excess = table.values[l, k] - ceiling
                if excess > 0 and float(excess) > worst:
                    worst, worst_cell = float(excess), (l, k)

        checks = [
            IdentityCheck(
                name="p_upper_bound",
                residual=worst,
                tolerance=0.0,
                passed=worst_cell is None,
                detail=None if worst_cell is None else f"worst cell {worst_cell}",
            )
        ]
        for l in range(2, table.lmax + 1):
            residual = abs(float(table.values[l, 0] - p_row_zero(l)))
            checks.append(
                IdentityCheck(
                    name="p_row_zero",
                    index=l,
                    residual=residual,
                    tolerance=self.tolerance,
                    passed=residual <= self.tolerance,
                )
            )
        return checks


def check_c_bound(table: AnalyticTable) -> IdentityCheck:
    """
    c(l, k) <= C(k) 2^-l (l-1)!/(l-k)! for every cell with l >= k >= 1.

    The bound is walked down each column with
    bound(l+1) = bound(l) (l / (l-k+1)) / 2, exactly in exact mode.
    """
    if table.kind != "c":
        raise TableRangeError(f"expected a c table, received a {table.kind} table")

    worst, worst_cell = 0.0, None
    for k in range(1, min(table.lmax, table.kmax) + 1):
        constant = constructive_C(table, k)
        if table.exact:
            bound = constant * Fraction(math.factorial(k - 1), 2**k)
        else:
            bound = c_bound(constant, k, k)

        for l in range(k, table.lmax + 1):
            value = table.values[l, k]
            slack = 0 if table.exact else 1e-12 * bound
            if value > bound + slack:
                excess = float((value - bound) / bound) if bound else math.inf
                if excess > worst:
                    worst, worst_cell = excess, (l, k)
            bound = bound * l / (2 * (l - k + 1))

    return IdentityCheck(
        name="c_bound",
        residual=worst,
        tolerance=0.0,
        passed=worst_cell is None,
        detail=None if worst_cell is None else f"worst cell {worst_cell}",
    )


def identity_checks(
    ctable: AnalyticTable,
    ptable: AnalyticTable,
    tol: float = 1e-6,
    column_tol: float = 1e-9,
) -> IdentityReport:
    return IdentityChecker(tolerance=tol, column_tolerance=column_tol).check(ctable, ptable)
