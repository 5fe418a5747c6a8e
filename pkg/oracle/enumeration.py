from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from multiprocessing import Pool

import numpy as np

from graph_statistics import census_of_history
from logger import Logger
from multigraph import AttachmentHistory
from .config import OracleConfig
from .errors import EnumerationCapError, RecurrenceInvariantError
from .expectation_table import ExpectationTable, full_window


@dataclass
class WeightedCounts:
    """
    Integer census totals over a set of histories, each history weighted by
    the number of slot sequences realizing it.
    """

    N: Counter = field(default_factory=Counter)
    P: Counter = field(default_factory=Counter)
    degrees: Counter = field(default_factory=Counter)
    sequences: int = 0

    def add(self, history: list[int], multiplicity: int):
        census = census_of_history(AttachmentHistory(history))
        for cell, count in census.N.items():
            self.N[cell] += count * multiplicity
        for cell, count in census.P.items():
            self.P[cell] += count * multiplicity
        for d, count in census.degree_hist.items():
            self.degrees[d] += count * multiplicity
        self.sequences += multiplicity

    def merge(self, other: "WeightedCounts") -> "WeightedCounts":
        return WeightedCounts(
            N=self.N + other.N,
            P=self.P + other.P,
            degrees=self.degrees + other.degrees,
            sequences=self.sequences + other.sequences,
        )


def _walk(n: int, targets: list[int], degrees: list[int], multiplicity: int, sink):
    """
    Extend a history prefix in every possible way. degrees[v] is the degree of
    v in the prefix graph (index 0 unused); attaching vertex t to s has
    degrees[s] slots, a loop at t has one.
    """
    t = len(targets) + 1
    if t > n:
        sink.add(targets, multiplicity)
        return

    for s in range(1, t):
        weight = degrees[s]
        targets.append(s)
        degrees[s] += 1
        degrees.append(1)
        _walk(n, targets, degrees, multiplicity * weight, sink)
        degrees.pop()
        degrees[s] -= 1
        targets.pop()

    targets.append(t)
    degrees.append(2)
    _walk(n, targets, degrees, multiplicity, sink)
    degrees.pop()
    targets.pop()


def _prefix_state(prefix: list[int]) -> tuple[list[int], int]:
    """Degrees and multiplicity after a fixed history prefix."""
    degrees = [0]
    multiplicity = 1
    for t, s in enumerate(prefix, start=1):
        if s == t:
            degrees.append(2)
        else:
            multiplicity *= degrees[s]
            degrees[s] += 1
            degrees.append(1)
    return degrees, multiplicity


def count_subtree(n: int, prefix: list[int]) -> WeightedCounts:
    """Weighted census totals over every history of length n starting with prefix."""
    degrees, multiplicity = _prefix_state(prefix)
    sink = WeightedCounts()
    _walk(n, list(prefix), degrees, multiplicity, sink)
    return sink


def _count_subtree(args: tuple[int, list[int]]) -> WeightedCounts:
    return count_subtree(*args)


def history_prefixes(n: int) -> list[list[int]]:
    """Valid prefixes fixing the targets of vertices 2 and 3 (as far as n allows)."""
    prefixes = [[1]]
    for t in range(2, min(n, 3) + 1):
        prefixes = [prefix + [s] for prefix in prefixes for s in range(1, t + 1)]
    return prefixes


class HistoryEnumerator:
    """
    Exact expectations of G_1^n by visiting every attachment history.

    Each of the (2n - 1)!! slot sequences is equally likely. Histories are
    visited once each (n! of them) together with the number of slot sequences
    that produce them, so the expectations come out as integer totals divided
    by (2n - 1)!!.
    """

    def __init__(self, cap: int | None = None):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)
        self.cap = OracleConfig.ENUMERATION_CAP if cap is None else cap

    def run(self, n: int, workers: int = 1) -> ExpectationTable:
        """
        Args:
            n (int): number of vertices, 1 <= n <= cap
            workers (int): processes sharing the prefixes of vertices 2 and 3

        Raises:
            EnumerationCapError: if n is above the cap
        """
        if n < 1:
            raise ValueError(f"n must be >= 1, received {n}")
        if n > self.cap:
            message = f"n={n} is above the enumeration cap {self.cap}"
            self.logger.error(message)
            raise EnumerationCapError(message)

        jobs = [(n, prefix) for prefix in history_prefixes(n)]
        self.logger.info(f"Enumerating n={n} over {len(jobs)} prefixes, workers={workers}")
        if workers > 1:
            with Pool(processes=workers) as pool:
                parts = pool.map(_count_subtree, jobs)
        else:
            parts = [_count_subtree(job) for job in jobs]

        counts = WeightedCounts()
        for part in parts:
            counts = counts.merge(part)

        sequences = prod(range(2 * n - 1, 0, -2))
        if counts.sequences != sequences:
            raise RecurrenceInvariantError(
                f"enumeration covered {counts.sequences} slot sequences, expected {sequences}"
            )
        self.logger.info(f"Enumerated {sequences} slot sequences for n={n}")
        return self._table(n, counts, sequences)

    def _table(self, n: int, counts: WeightedCounts, sequences: int) -> ExpectationTable:
        lmax, kmax, dmax = full_window(n)
        EN = np.full((lmax + 1, kmax + 1), Fraction(0), dtype=object)
        EP = np.full((lmax + 1, kmax + 1), Fraction(0), dtype=object)
        M1 = np.full(dmax + 1, Fraction(0), dtype=object)
        for (l, k), total in counts.N.items():
            EN[l, k] = Fraction(total, sequences)
        for (l, k), total in counts.P.items():
            EP[l, k] = Fraction(total, sequences)
        for d, total in counts.degrees.items():
            M1[d] = Fraction(total, sequences)

        for array in (EN, EP, M1):
            array.setflags(write=False)
        return ExpectationTable(
            n=n,
            lmax=lmax,
            kmax=kmax,
            dmax=dmax,
            mode="exact",
            provenance="enumeration",
            EN=EN,
            EP=EP,
            M1=M1,
        )


def enumerate_exact(n: int, workers: int = 1) -> ExpectationTable:
    return HistoryEnumerator().run(n, workers)
