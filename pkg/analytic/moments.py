import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .closed_forms import row_sum_target
from .config import AnalyticConfig
from .errors import TableRangeError, ToleranceUnreachableError
from .tables import AnalyticTable, Number, c_table, total


@dataclass(frozen=True)
class ColumnMoments:
    """
    Weighted sums of column k of the c table over l >= 2:
    x = sum c(l,k), y = sum l c(l,k), z = sum l(l+1) c(l,k).

    x, y and z are the truncated sums over the table rows; the *_tail fields
    are upper bounds on what the rows beyond the table add.
    """

    k: int
    x: float
    y: float
    z: float
    x_tail: float
    y_tail: float
    z_tail: float
    bound_constant: float
    row_sum_fallback: bool = False


def _require_c(table: AnalyticTable):
    if table.kind != "c":
        raise TableRangeError(f"expected a c table, received a {table.kind} table")


def constructive_C(table: AnalyticTable, k: int) -> Number:
    """
    Constant of the bound c(l, k) <= C(k) 2^-l (l-1)!/(l-k)! for l >= k.

    C(0) = 0 and C(k) = max(C(k-1), c(k,k) 2^k / (k-1)!), so the bound holds on
    the diagonal and carries over to l > k through the recurrence.

    Raises:
        TableRangeError: if c(k, k) is not in the table
    """
    _require_c(table)
    if k < 0 or k > min(table.lmax, table.kmax):
        raise TableRangeError(
            f"C({k}) needs c({k},{k}); table has lmax={table.lmax}, kmax={table.kmax}"
        )

    constant = table.zero()
    for j in range(1, k + 1):
        if table.exact:
            candidate = table.values[j, j] * Fraction(2**j, math.factorial(j - 1))
        else:
            candidate = float(table.values[j, j]) * math.exp(
                j * math.log(2) - math.lgamma(j)
            )
        constant = max(constant, candidate)
    return constant


def c_bound(constant: Number, l: int, k: int) -> float:
    """C(k) 2^-l (l-1)!/(l-k)! as a float, evaluated in logs."""
    if constant <= 0:
        return 0.0
    return math.exp(
        math.log(constant) - l * math.log(2) + math.lgamma(l) - math.lgamma(l - k + 1)
    )


def _bound_tail(
    constant: Number, k: int, start: int, weight: Callable[[int], int]
) -> float:
    """
    sum over l >= start of weight(l) C(k) 2^-l (l-1)!/(l-k)!, start >= k.

    Once the terms decay geometrically the remainder is closed with the
    geometric series of the current ratio.
    """
    if constant <= 0:
        return 0.0

    running = 0.0
    term = weight(start) * c_bound(constant, start, k)
    for l in range(start, start + AnalyticConfig.TAIL_MAX_TERMS):
        running += term
        following = weight(l + 1) * c_bound(constant, l + 1, k)
        ratio = following / term if term > 0 else 0.0
        if l > 4 * k + 4 and ratio < 0.9 and term <= (
            AnalyticConfig.TAIL_RELATIVE_CUTOFF * running
        ):
            return running + term * ratio / (1 - ratio)
        term = following

    raise ToleranceUnreachableError(
        f"tail of column {k} did not converge after {AnalyticConfig.TAIL_MAX_TERMS} terms"
    )


_WEIGHTS: dict[str, Callable[[int], int]] = {
    "x": lambda l: 1,
    "y": lambda l: l,
    "z": lambda l: l * (l + 1),
}


def column_moments(
    table: AnalyticTable, k: int, tolerance: float = 1e-9
) -> ColumnMoments:
    """
    x_k, y_k and z_k of column k with rigorous truncation tails.

    Rows l > lmax with l >= k are bounded through constructive_C. Rows
    lmax < l < k, which the bound does not cover, fall back to the row sum
    4/(l(l+1)(l+2)) and set row_sum_fallback.

    Args:
        table (AnalyticTable): c table with k <= kmax
        k (int): column
        tolerance (float): largest acceptable tail of any of the three sums

    Raises:
        TableRangeError: if k is outside the table or the table is not a c table
        ToleranceUnreachableError: if a tail exceeds the tolerance
    """
    _require_c(table)
    if not 0 <= k <= table.kmax:
        raise TableRangeError(f"column {k} is outside the table (kmax={table.kmax})")

    column = table.column(k)
    sums = {
        name: float(
            total((weight(l) * column[l] for l in range(2, table.lmax + 1)), table.exact)
        )
        for name, weight in _WEIGHTS.items()
    }
    if k == 0:
        return ColumnMoments(
            k=0, x=0.0, y=0.0, z=0.0, x_tail=0.0, y_tail=0.0, z_tail=0.0, bound_constant=0.0
        )

    if min(table.lmax, table.kmax) >= k:
        constant = constructive_C(table, k)
    else:
        constant = constructive_C(c_table(k, k, mode=table.mode), k)

    fallback_rows = range(table.lmax + 1, k)
    start = max(table.lmax + 1, k)
    tails = {}
    for name, weight in _WEIGHTS.items():
        fallback = math.fsum(float(weight(l) * row_sum_target(l)) for l in fallback_rows)
        tails[name] = fallback + _bound_tail(constant, k, start, weight)
        if tails[name] > tolerance:
            raise ToleranceUnreachableError(
                f"{name}_{k} tail {tails[name]:.3e} exceeds tolerance {tolerance:.3e} "
                f"at lmax={table.lmax}"
            )

    return ColumnMoments(
        k=k,
        x=sums["x"],
        y=sums["y"],
        z=sums["z"],
        x_tail=tails["x"],
        y_tail=tails["y"],
        z_tail=tails["z"],
        bound_constant=float(constant),
        row_sum_fallback=len(fallback_rows) > 0,
    )


def column_total(table: AnalyticTable, k: int) -> float:
    """
    c(1, k) + x_k, the constant in front of n of E X_n(k); close to 4/k^2.
    """
    _require_c(table)
    if not 1 <= k <= table.kmax:
        raise TableRangeError(f"column {k} is outside 1..{table.kmax}")
    return float(total(table.column(k)[1:], table.exact))
