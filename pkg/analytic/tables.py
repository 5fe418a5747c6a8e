import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal

import numpy as np

from logger import Logger
from .closed_forms import row_sum_target
from .config import AnalyticConfig
from .errors import TableRangeError

Mode = Literal["exact", "float", "auto"]
Number = Fraction | float

_logger = Logger().get_logger(name="AnalyticTables")


def resolve_mode(mode: Mode, lmax: int, kmax: int) -> str:
    """
    Turn "auto" into "exact" or "float" depending on the table size.
    """
    if mode == "auto":
        return "exact" if max(lmax, kmax) <= AnalyticConfig.EXACT_MODE_LIMIT else "float"
    if mode not in ("exact", "float"):
        raise TableRangeError(f"unknown mode {mode!r}, expected exact, float or auto")
    return mode


def total(values, exact: bool) -> Number:
    """Sum of an iterable of table values; compensated in float mode."""
    if exact:
        return sum(values, Fraction(0))
    return math.fsum(values)


@dataclass(frozen=True)
class TruncationDiagnostics:
    """
    Mass of each row inside the window and, for c tables, how much of the
    known row and total sums lies outside it.
    """

    row_mass: dict[int, float] = field(default_factory=dict)
    row_missing: dict[int, float] = field(default_factory=dict)
    total_mass: float = 0.0
    total_missing: float | None = None


@dataclass(frozen=True)
class AnalyticTable:
    """
    Truncated c(l, k) or p(l, k) table, values[l, k] for 0 <= l <= lmax and
    0 <= k <= kmax. Exact tables hold Fractions in an object array, float tables
    hold float64.
    """

    kind: str
    lmax: int
    kmax: int
    mode: str
    values: np.ndarray
    diagnostics: TruncationDiagnostics

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def value(self, l: int, k: int) -> Number:
        if not (0 <= l <= self.lmax and 0 <= k <= self.kmax):
            raise TableRangeError(
                f"cell ({l}, {k}) is outside the {self.kind} table "
                f"(lmax={self.lmax}, kmax={self.kmax})"
            )
        return self.values[l, k]

    def __getitem__(self, cell: tuple[int, int]) -> Number:
        return self.value(*cell)

    def zero(self) -> Number:
        return Fraction(0) if self.exact else 0.0

    def row(self, l: int) -> list[Number]:
        self.value(l, 0)
        return list(self.values[l, :])

    def column(self, k: int) -> list[Number]:
        self.value(0, k)
        return list(self.values[:, k])

    def as_float(self) -> np.ndarray:
        return self.values.astype(np.float64)

    def cells(self) -> Iterator[tuple[int, int, Number]]:
        """Every cell with l >= 1, row by row."""
        for l in range(1, self.lmax + 1):
            for k in range(self.kmax + 1):
                yield l, k, self.values[l, k]

    def format_value(self, value: Number) -> str:
        if self.exact:
            value = Fraction(value)
            return f"{value.numerator}/{value.denominator}"
        return repr(float(value))


def _check_window(lmax: int, kmax: int):
    if lmax < 1 or kmax < 0:
        raise TableRangeError(
            f"table needs lmax >= 1 and kmax >= 0, received lmax={lmax}, kmax={kmax}"
        )


def _ratio(numerator: int, denominator: int, exact: bool) -> Number:
    return Fraction(numerator, denominator) if exact else numerator / denominator


def _to_array(rows: list[list[Number]], exact: bool) -> np.ndarray:
    if exact:
        array = np.empty((len(rows), len(rows[0])), dtype=object)
        for l, row in enumerate(rows):
            array[l, :] = row
    else:
        array = np.array(rows, dtype=np.float64)
    array.setflags(write=False)
    return array


def _diagnostics(rows: list[list[Number]], exact: bool, kind: str) -> TruncationDiagnostics:
    lmax = len(rows) - 1
    row_mass = {l: total(rows[l], exact) for l in range(1, lmax + 1)}
    mass = total(row_mass.values(), exact)

    if kind != "c":
        return TruncationDiagnostics(
            row_mass={l: float(v) for l, v in row_mass.items()}, total_mass=float(mass)
        )
    return TruncationDiagnostics(
        row_mass={l: float(v) for l, v in row_mass.items()},
        row_missing={l: float(row_sum_target(l) - v) for l, v in row_mass.items()},
        total_mass=float(mass),
        total_missing=float(1 - mass),
    )


def c_table(lmax: int, kmax: int, mode: Mode = "auto") -> AnalyticTable:
    """
    Build c(l, k) for l <= lmax and k <= kmax.

    Row 1 is the closed form (2k^2 + 14k) / ((k+1)(k+2)(k+3)(k+4)); every other
    row follows
        c(l, k) = [c(l, k-1)(l+k-1) + c(l-1, k)(l-1)] / (2l+k+2)
    with c(l, 0) = c(0, k) = 0. Each cell depends only on cells above and to the
    left, so nothing inside the rectangle is truncated.

    Args:
        lmax (int): last row, >= 1
        kmax (int): last column, >= 0
        mode (str): "exact" (Fractions), "float" (float64) or "auto"

    Raises:
        TableRangeError: if the window is empty or the mode is unknown
    """
    _check_window(lmax, kmax)
    mode = resolve_mode(mode, lmax, kmax)
    exact = mode == "exact"
    zero = Fraction(0) if exact else 0.0

    rows = [[zero] * (kmax + 1) for _ in range(lmax + 1)]
    for k in range(1, kmax + 1):
        rows[1][k] = _ratio(
            2 * k * k + 14 * k, (k + 1) * (k + 2) * (k + 3) * (k + 4), exact
        )
    for l in range(2, lmax + 1):
        above, current = rows[l - 1], rows[l]
        for k in range(1, kmax + 1):
            current[k] = (current[k - 1] * (l + k - 1) + above[k] * (l - 1)) / (
                2 * l + k + 2
            )

    _logger.info(f"Built c table lmax={lmax} kmax={kmax} mode={mode}")
    return AnalyticTable(
        kind="c",
        lmax=lmax,
        kmax=kmax,
        mode=mode,
        values=_to_array(rows, exact),
        diagnostics=_diagnostics(rows, exact, "c"),
    )


def p_table(lmax: int, kmax: int, mode: Mode = "auto") -> AnalyticTable:
    """
    Build p(l, k) for l <= lmax and k <= kmax.

    p(2, 0) = 1, p(l, k) = 0 for l < 2 and for l = 2, k > 0; for l >= 3
        p(l, k) = [p(l, k-1)(l+k-3) + p(l-1, k)(l-1)] / (2l+k-2)
    which gives p(l, 0) = 2^-(l-2) on the first column.
    """
    _check_window(lmax, kmax)
    mode = resolve_mode(mode, lmax, kmax)
    exact = mode == "exact"
    zero = Fraction(0) if exact else 0.0

    rows = [[zero] * (kmax + 1) for _ in range(lmax + 1)]
    if lmax >= 2:
        rows[2][0] = Fraction(1) if exact else 1.0
    for l in range(3, lmax + 1):
        above, current = rows[l - 1], rows[l]
        current[0] = above[0] * (l - 1) / (2 * l - 2)
        for k in range(1, kmax + 1):
            current[k] = (current[k - 1] * (l + k - 3) + above[k] * (l - 1)) / (
                2 * l + k - 2
            )

    _logger.info(f"Built p table lmax={lmax} kmax={kmax} mode={mode}")
    return AnalyticTable(
        kind="p",
        lmax=lmax,
        kmax=kmax,
        mode=mode,
        values=_to_array(rows, exact),
        diagnostics=_diagnostics(rows, exact, "p"),
    )
