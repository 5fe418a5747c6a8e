from fractions import Fraction

from analytic import AnalyticTable, m1_closed
from .expectation_table import ExpectationTable
from .models import ThetaCell, ThetaTildeRow

# bounds are met with equality at d = 1, so comparisons allow float rounding
SLACK = 1 + 1e-12
# float recurrences over many steps drift by more than the relative slack
FLOAT_SLACK = 1e-9


def theta_table(
    table: ExpectationTable,
    ctable: AnalyticTable,
    lmax: int | None = None,
    kmax: int | None = None,
) -> list[ThetaCell]:
    """
    theta(n, l, k) = EN(l, k) / (n c(l, k)) - 1 for every cell with c(l, k) > 0
    inside both windows, each with its bound (2l+k-1)^2 / n.
    """
    n = table.n
    lmax = min(table.lmax, ctable.lmax, lmax or table.lmax)
    kmax = min(table.kmax, ctable.kmax, kmax or table.kmax)
    absolute = 0.0 if table.exact and ctable.exact else FLOAT_SLACK

    cells = []
    for l in range(1, lmax + 1):
        for k in range(1, kmax + 1):
            c = ctable.values[l, k]
            if not c > 0:
                continue
            if table.exact and ctable.exact:
                theta = float(Fraction(table.EN[l, k]) / (n * Fraction(c)) - 1)
            else:
                theta = float(table.EN[l, k]) / (n * float(c)) - 1
            bound = (2 * l + k - 1) ** 2 / n
            passed = abs(theta) <= bound * SLACK + absolute
            cells.append(ThetaCell(l=l, k=k, theta=theta, bound=bound, passed=passed))
    return cells


def theta_tilde(table: ExpectationTable, dmax: int | None = None) -> list[ThetaTildeRow]:
    """
    theta~(n, d) = M1(d) d(d+1)(d+2) / (4n) - 1 with its bound d^2 / n, and the
    sharper 1/n at d = 1 and 4/n at d = 2.
    """
    n = table.n
    sharp = {1: 1 / n, 2: 4 / n}
    absolute = 0.0 if table.exact else FLOAT_SLACK
    rows = []
    for d in range(1, min(table.dmax, dmax or table.dmax) + 1):
        if table.exact:
            theta = float(Fraction(table.M1[d]) / m1_closed(n, d) - 1)
        else:
            theta = float(table.M1[d]) / float(m1_closed(n, d)) - 1
        bound = d * d / n
        passed = abs(theta) <= bound * SLACK + absolute
        if d in sharp:
            passed = passed and abs(theta) <= sharp[d] * SLACK + absolute
        rows.append(
            ThetaTildeRow(
                d=d, theta=theta, bound=bound, sharp_bound=sharp.get(d), passed=passed
            )
        )
    return rows
