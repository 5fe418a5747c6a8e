from fractions import Fraction

import numpy as np

from analytic import p_table
from logger import Logger
from .dp import RecurrenceDP
from .enumeration import HistoryEnumerator
from .expectation_table import ExpectationTable, full_window
from .models import CellDiff, DiffReport, LoopedBoundExceedance, UncoveredCell

FLOAT_TOLERANCE = 1e-12

# largest number of differing cells listed in a report
MISMATCH_LIMIT = 50


def _matrices(table: ExpectationTable) -> dict[str, np.ndarray]:
    return {"EN": table.EN, "EP": table.EP, "M1": table.M1[None, :]}


def _uncovered(name: str, kind: str, values: np.ndarray, shape: tuple[int, int]):
    rows, cols = shape
    outside = [
        (int(l), int(k))
        for l, k in zip(*np.nonzero(values))
        if l >= rows or k >= cols
    ]
    return [
        UncoveredCell(kind=kind, l=l if kind != "M1" else 0, k=k, present_in=name)
        for l, k in outside
    ]


def _format(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def compare_tables(
    left: ExpectationTable, right: ExpectationTable, tolerance: float = FLOAT_TOLERANCE
) -> DiffReport:
    """
    Cell-by-cell comparison of two expectation tables of the same n over the
    window they share. Nonzero cells that only one window holds are listed as
    uncovered. Exact comparison is used when both tables are exact.
    """
    if left.n != right.n:
        raise ValueError(f"cannot compare tables of n={left.n} and n={right.n}")

    exact = left.exact and right.exact
    mismatches = []
    uncovered = []
    compared = 0
    max_diff = 0.0
    identical = True

    right_matrices = _matrices(right)
    for kind, a in _matrices(left).items():
        b = right_matrices[kind]
        rows, cols = min(a.shape[0], b.shape[0]), min(a.shape[1], b.shape[1])
        uncovered += _uncovered(left.provenance, kind, a, (rows, cols))
        uncovered += _uncovered(right.provenance, kind, b, (rows, cols))

        for l in range(rows):
            for k in range(cols):
                compared += 1
                x, y = a[l, k], b[l, k]
                if exact:
                    same = x == y
                    difference = abs(float(Fraction(x) - Fraction(y)))
                else:
                    difference = abs(float(x) - float(y))
                    same = difference == 0.0
                max_diff = max(max_diff, difference)
                if not same:
                    identical = False
                    if len(mismatches) < MISMATCH_LIMIT:
                        mismatches.append(
                            CellDiff(
                                kind=kind,
                                l=l if kind != "M1" else 0,
                                k=k,
                                left=_format(x),
                                right=_format(y),
                                difference=difference,
                            )
                        )

    return DiffReport(
        n=left.n,
        mode="exact" if exact else "float",
        left=left.provenance,
        right=right.provenance,
        cells_compared=compared,
        max_abs_diff=max_diff,
        identical=identical,
        tolerance=0.0 if exact else tolerance,
        mismatches=mismatches,
        uncovered=uncovered,
    )


def looped_bound_exceedances(table: ExpectationTable) -> list[LoopedBoundExceedance]:
    """
    Cells with E P_n(l, k) > p(l, k). Cells with n < 2l + k are marked small_n;
    at n = 2 the cell (3, 0) exceeds its bound (2/3 > 1/2).
    """
    bounds = p_table(table.lmax, table.kmax, mode="exact" if table.exact else "float")
    exceedances = []
    for l, k in zip(*np.nonzero(table.EP)):
        l, k = int(l), int(k)
        expectation, bound = table.EP[l, k], bounds.values[l, k]
        if expectation > bound:
            exceedances.append(
                LoopedBoundExceedance(
                    l=l,
                    k=k,
                    expectation=_format(expectation),
                    bound=_format(bound),
                    small_n=table.n < 2 * l + k,
                )
            )
    return exceedances


class OracleComparison:
    """Runs both exact routes for one n and compares them."""

    def __init__(self):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)

    def dp_vs_enum(self, n: int, mode: str = "exact", workers: int = 1) -> DiffReport:
        enumerated = HistoryEnumerator().run(n, workers)
        computed = RecurrenceDP().run(n, *full_window(n), mode=mode)

        report = compare_tables(computed, enumerated)
        report.looped_bound_exceedances = looped_bound_exceedances(enumerated)

        if report.passed:
            self.logger.info(
                f"Recurrences and enumeration agree for n={n} "
                f"(max diff {report.max_abs_diff:.3e})"
            )
        else:
            self.logger.warning(
                f"Recurrences and enumeration differ for n={n}: "
                f"max diff {report.max_abs_diff:.3e}, {len(report.uncovered)} uncovered cells"
            )
        for exceedance in report.looped_bound_exceedances:
            self.logger.warning(
                f"E P_{n}({exceedance.l},{exceedance.k}) = {exceedance.expectation} "
                f"exceeds p = {exceedance.bound}"
            )
        return report


def dp_vs_enum(n: int, mode: str = "exact", workers: int = 1) -> DiffReport:
    return OracleComparison().dp_vs_enum(n, mode, workers)
