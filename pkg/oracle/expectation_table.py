from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import WindowTooSmallError

Number = Fraction | float


def full_window(n: int) -> tuple[int, int, int]:
    """
    Smallest (lmax, kmax, dmax) holding every reachable cell of G_1^n: degrees
    reach n + 1 (vertex 1 with its loop and every other vertex attached to it)
    and second degrees reach 2n.
    """
    return n + 1, 2 * n, n + 1


@dataclass(frozen=True)
class ExpectationTable:
    """
    Exact expectations E N_n(l, k), E P_n(l, k) and M1_n(d) inside a window.

    EN and EP are indexed [l, k] for l <= lmax, k <= kmax; M1 is indexed [d]
    for d <= dmax. Exact tables hold Fractions in object arrays.
    """

    n: int
    lmax: int
    kmax: int
    dmax: int
    mode: str
    provenance: str
    EN: np.ndarray
    EP: np.ndarray
    M1: np.ndarray

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def is_full_window(self) -> bool:
        lmax, kmax, dmax = full_window(self.n)
        return self.lmax >= lmax and self.kmax >= kmax and self.dmax >= dmax

    def _check_cell(self, l: int, k: int):
        if not (0 <= l <= self.lmax and 0 <= k <= self.kmax):
            raise WindowTooSmallError(
                f"cell ({l}, {k}) is outside the window lmax={self.lmax}, kmax={self.kmax}"
            )

    def en(self, l: int, k: int) -> Number:
        self._check_cell(l, k)
        return self.EN[l, k]

    def ep(self, l: int, k: int) -> Number:
        self._check_cell(l, k)
        return self.EP[l, k]

    def m1(self, d: int) -> Number:
        if not 0 <= d <= self.dmax:
            raise WindowTooSmallError(f"degree {d} is outside the window dmax={self.dmax}")
        return self.M1[d]

    def secdeg_expectation(self, k: int) -> Number:
        """
        E X_n(k) restricted to rows l <= lmax; exact when the window holds
        every row, otherwise outside_mass bounds what is missing.
        """
        self._check_cell(0, k)
        return self.EN[:, k].sum() + self.EP[:, k].sum()

    @property
    def outside_mass(self) -> Number:
        """Expected number of vertices whose (l, k) falls outside the window."""
        return self.n - (self.EN.sum() + self.EP.sum())

    def rows(self) -> Iterator[tuple[str, int, int, Number]]:
        """(kind, l, k, value) for every nonzero cell; M1 rows put d in the k column."""
        for kind, matrix in (("EN", self.EN), ("EP", self.EP)):
            for l, k in zip(*np.nonzero(matrix)):
                yield kind, int(l), int(k), matrix[l, k]
        for d in np.flatnonzero(self.M1):
            yield "M1", 0, int(d), self.M1[d]

    def format_value(self, value: Number) -> str:
        if self.exact:
            value = Fraction(value)
            return f"{value.numerator}/{value.denominator}"
        return repr(float(value))
