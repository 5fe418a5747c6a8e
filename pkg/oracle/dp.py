from fractions import Fraction
from typing import Literal

import numpy as np

from logger import Logger
from .config import OracleConfig
from .errors import RecurrenceInvariantError, WindowTooSmallError
from .expectation_table import ExpectationTable, full_window

Mode = Literal["exact", "float", "auto"]


class RecurrenceDP:
    """
    Runs the conditional-expectation recurrences of G_1^i from i = 1 to n.

    Going from i to i + 1 vertices, with s = 2i + 1 slots:
        EN(l,k) <- EN(l,k)(1 - (2l+k)/s) + EN(l-1,k)(l-1)/s + EN(l,k-1)(l+k-1)/s
                   + [l = 1] k M1(k)/s
        EP(l,k) <- EP(l,k)(1 - (2l+k-2)/s) + EP(l-1,k)(l-1)/s + EP(l,k-1)(l+k-3)/s
                   + [(l,k) = (2,0)] 1/s
        M1(d)   <- M1(d)(1 - d/s) + M1(d-1)(d-1)/s + [d = 1] 2i/s + [d = 2] 1/s
    starting from EP(2,0) = 1, M1(2) = 1 at i = 1.

    Every cell depends only on cells with smaller or equal l and k (and on M1
    up to kmax), so values inside the window are exact however small it is.
    """

    def __init__(self):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)

    def run(
        self, n: int, lmax: int, kmax: int, dmax: int, mode: Mode = "auto"
    ) -> ExpectationTable:
        """
        Args:
            n (int): number of vertices, >= 1
            lmax (int): largest degree l of the EN/EP window
            kmax (int): largest second degree k of the window
            dmax (int): largest degree of M1
            mode (str): "exact", "float" or "auto" (exact up to EXACT_DP_LIMIT)

        Raises:
            WindowTooSmallError: if a window parameter is below 1
            RecurrenceInvariantError: if a negative coefficient meets a nonzero
                value, or a full-window run loses mass
        """
        if n < 1:
            raise ValueError(f"n must be >= 1, received {n}")
        if min(lmax, kmax, dmax) < 1:
            raise WindowTooSmallError(
                f"window parameters must be >= 1, received ({lmax}, {kmax}, {dmax})"
            )

        if mode == "auto":
            mode = "exact" if n <= OracleConfig.EXACT_DP_LIMIT else "float"
        elif mode == "exact" and n > OracleConfig.EXACT_DP_LIMIT:
            self.logger.warning(
                f"Exact recurrences for n={n} above {OracleConfig.EXACT_DP_LIMIT} will be slow"
            )
        elif mode not in ("exact", "float"):
            raise ValueError(f"unknown mode {mode!r}, expected exact, float or auto")

        # room for the initial state and for the k M1(k) inflow of column k
        lmax = max(lmax, 2)
        dmax = max(dmax, kmax, 2)
        full = all(a >= b for a, b in zip((lmax, kmax, dmax), full_window(n)))

        self.logger.info(
            f"Running recurrences n={n} window=({lmax}, {kmax}, {dmax}) mode={mode}"
        )
        if mode == "exact":
            EN, EP, M1 = self._run_exact(n, lmax, kmax, dmax, full)
        else:
            EN, EP, M1 = self._run_float(n, lmax, kmax, dmax, full)

        for array in (EN, EP, M1):
            array.setflags(write=False)
        self.logger.info(f"Finished recurrences n={n}")
        return ExpectationTable(
            n=n,
            lmax=lmax,
            kmax=kmax,
            dmax=dmax,
            mode=mode,
            provenance="dp",
            EN=EN,
            EP=EP,
            M1=M1,
        )

    def _run_exact(self, n: int, L: int, K: int, D: int, full: bool):
        zero = Fraction(0)
        EN = [[zero] * (K + 1) for _ in range(L + 1)]
        EP = [[zero] * (K + 1) for _ in range(L + 1)]
        M1 = [zero] * (D + 1)
        EP[2][0] = Fraction(1)
        M1[2] = Fraction(1)

        for i in range(1, n):
            s = 2 * i + 1
            self._check_negative_exact(i, EN, EP, M1)

            new_M1 = [zero] * (D + 1)
            for d in range(1, D + 1):
                value = M1[d] * (s - d) + M1[d - 1] * (d - 1)
                if d == 1:
                    value += 2 * i
                elif d == 2:
                    value += 1
                new_M1[d] = Fraction(value) / s

            new_EN = [[zero] * (K + 1) for _ in range(L + 1)]
            new_EP = [[zero] * (K + 1) for _ in range(L + 1)]
            for l in range(1, L + 1):
                for k in range(K + 1):
                    value = EN[l][k] * (s - 2 * l - k) + EN[l - 1][k] * (l - 1)
                    if k:
                        value += EN[l][k - 1] * (l + k - 1)
                    if l == 1:
                        value += k * M1[k]
                    new_EN[l][k] = Fraction(value) / s

                    if l < 2:
                        continue
                    value = EP[l][k] * (s - 2 * l - k + 2) + EP[l - 1][k] * (l - 1)
                    if k:
                        value += EP[l][k - 1] * (l + k - 3)
                    if l == 2 and k == 0:
                        value += 1
                    new_EP[l][k] = Fraction(value) / s

            EN, EP, M1 = new_EN, new_EP, new_M1
            if full:
                self._check_mass(i + 1, sum(map(sum, EN)) + sum(map(sum, EP)), sum(M1), 0)
            self.logger.debug(f"Step {i + 1} of {n} done")

        return _object_array(EN), _object_array(EP), _object_array([M1])[0]

    def _run_float(self, n: int, L: int, K: int, D: int, full: bool):
        """
        float64 recurrences with compensated updates: every table is carried as
        a value plus a low-order correction that collects the rounding error of
        each step's sum and is pushed through the same linear update.
        """
        l = np.arange(L + 1, dtype=np.float64)[:, None]
        k = np.arange(K + 1, dtype=np.float64)[None, :]
        d = np.arange(D + 1, dtype=np.float64)

        # spoil, row inflow and column inflow coefficients
        loopless = (2 * l + k, l - 1, l + k - 1)
        looped = (2 * l + k - 2, l - 1, l + k - 3)
        columns = k[0]
        # no coefficient is negative once s exceeds every spoil count
        widest = max(2 * L + K, D)

        EN, EN_low = np.zeros((L + 1, K + 1)), np.zeros((L + 1, K + 1))
        EP, EP_low = np.zeros((L + 1, K + 1)), np.zeros((L + 1, K + 1))
        M1, M1_low = np.zeros(D + 1), np.zeros(D + 1)
        EP[2, 0] = 1.0
        M1[2] = 1.0

        for i in range(1, n):
            s = 2.0 * i + 1
            if s <= widest:
                self._check_negative_float(i, s, EN, EP, M1, loopless[0], looped[0], d)

            source = np.zeros(D + 1)
            source[1] = 2 * i / s
            source[2] = 1 / s
            new_M1, error = compensated_sum(_degree_terms(M1, d, s) + [source])
            new_M1_low = sum(_degree_terms(M1_low, d, s)) + error

            source = np.zeros((L + 1, K + 1))
            source[1, :] = columns * M1[: K + 1] / s
            new_EN, error = compensated_sum(_census_terms(EN, s, *loopless) + [source])
            new_EN_low = (
                sum(_census_terms(EN_low, s, *loopless)) + error
            )
            new_EN_low[1, :] += columns * M1_low[: K + 1] / s
            new_EN[0, :] = new_EN_low[0, :] = 0.0

            source = np.zeros((L + 1, K + 1))
            source[2, 0] = 1 / s
            new_EP, error = compensated_sum(_census_terms(EP, s, *looped) + [source])
            new_EP_low = sum(_census_terms(EP_low, s, *looped)) + error
            new_EP[:2, :] = new_EP_low[:2, :] = 0.0

            EN, EP, M1 = new_EN, new_EP, new_M1
            EN_low, EP_low, M1_low = new_EN_low, new_EP_low, new_M1_low
            if full:
                self._check_mass(
                    i + 1,
                    (EN + EN_low).sum() + (EP + EP_low).sum(),
                    (M1 + M1_low).sum(),
                    OracleConfig.FLOAT_MASS_TOLERANCE * (i + 1),
                )
            if i % 10_000 == 0:
                self.logger.debug(f"Step {i + 1} of {n} done")

        return EN + EN_low, EP + EP_low, M1 + M1_low

    def _check_negative_exact(self, i: int, EN, EP, M1):
        s = 2 * i + 1
        for l, row in enumerate(EN):
            for k, value in enumerate(row):
                if value and 2 * l + k > s:
                    self._negative(i, "EN", l, k)
        for l, row in enumerate(EP):
            for k, value in enumerate(row):
                if value and 2 * l + k - 2 > s:
                    self._negative(i, "EP", l, k)
        for d, value in enumerate(M1):
            if value and d > s:
                self._negative(i, "M1", 0, d)

    def _check_negative_float(self, i, s, EN, EP, M1, spoil_n, spoil_p, d):
        for name, values, spoil in (("EN", EN, spoil_n), ("EP", EP, spoil_p)):
            bad = np.argwhere((spoil > s) & (values != 0))
            if bad.size:
                self._negative(i, name, int(bad[0][0]), int(bad[0][1]))
        bad = np.flatnonzero((d > s) & (M1 != 0))
        if bad.size:
            self._negative(i, "M1", 0, int(bad[0]))

    def _negative(self, i: int, name: str, l: int, k: int):
        message = (
            f"{name}({l},{k}) is nonzero at i={i} although its update coefficient "
            f"is negative"
        )
        self.logger.error(message)
        raise RecurrenceInvariantError(message)

    def _check_mass(self, i: int, census, degrees, tolerance: float):
        for name, mass in (("EN + EP", census), ("M1", degrees)):
            if abs(mass - i) > tolerance:
                message = f"{name} sums to {float(mass)} instead of {i}"
                self.logger.error(message)
                raise RecurrenceInvariantError(message)


def _object_array(rows: list[list]) -> np.ndarray:
    array = np.empty((len(rows), len(rows[0])), dtype=object)
    for index, row in enumerate(rows):
        array[index, :] = row
    return array


def dp_expectations(
    n: int, lmax: int, kmax: int, dmax: int, mode: Mode = "auto"
) -> ExpectationTable:
    return RecurrenceDP().run(n, lmax, kmax, dmax, mode)


def two_sum(a, b):
    """Error-free sum: a + b == total + error exactly, elementwise."""
    total = a + b
    b_virtual = total - a
    error = (a - (total - b_virtual)) + (b - b_virtual)
    return total, error


def compensated_sum(terms: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Sum of equally shaped arrays, with the accumulated rounding error."""
    total = terms[0]
    error = np.zeros_like(total)
    for term in terms[1:]:
        total, rounding = two_sum(total, term)
        error += rounding
    return total, error


def _degree_terms(M1: np.ndarray, d: np.ndarray, s: float) -> list[np.ndarray]:
    kept = M1 * (1 - d / s)
    shifted = np.zeros_like(M1)
    shifted[1:] = M1[:-1] * d[:-1] / s
    return [kept, shifted]


def _census_terms(values, s, spoil, row, col) -> list[np.ndarray]:
    kept = values * (1 - spoil / s)
    from_row = np.zeros_like(values)
    from_row[1:, :] = values[:-1, :] * row[1:] / s
    from_col = np.zeros_like(values)
    from_col[:, 1:] = values[:, :-1] * col[:, 1:] / s
    return [kept, from_row, from_col]
