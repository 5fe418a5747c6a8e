from typing import Literal

from .models import (
    BoundReport,
    ConcentrationReport,
    ConcentrationTrendReport,
    DegreeReport,
    ExperimentConfig,
    MonteCarloReport,
    Theorem2Report,
)
from .monte_carlo import MonteCarloHarness
from .replicate_queue import ReplicateQueue
from .reports import ReportBuilder


class ExperimentsInterface:
    """
    Monte-Carlo runs and theorem-level reports.

    Args:
        threads (int): local worker processes for replicates
        use_queue (bool): send replicate batches to the rq "replicates" queue
    """

    def __init__(self, threads: int = 1, use_queue: bool = False):
        replicate_queue = ReplicateQueue() if use_queue else None
        self.harness = MonteCarloHarness(replicate_queue)
        self.reports = ReportBuilder(threads=threads, replicate_queue=replicate_queue)

    def monte_carlo(self, cfg: ExperimentConfig) -> MonteCarloReport:
        return self.harness.run(cfg)

    def theorem2_report(
        self,
        n: int,
        kmax: int,
        source: Literal["mc", "dp"] = "dp",
        C: float | None = None,
        replicates: int = 100,
        seed: int | None = None,
        lmax: int = 64,
    ) -> Theorem2Report:
        return self.reports.theorem2_report(n, kmax, source, C, replicates, seed, lmax)

    def theorem1_report(
        self, n: int, m: int, dmax: int, replicates: int, seed: int | None
    ) -> DegreeReport:
        return self.reports.theorem1_report(n, m, dmax, replicates, seed)

    def degree_report(
        self, n: int, dmax: int, replicates: int, seed: int | None
    ) -> DegreeReport:
        return self.reports.degree_report(n, dmax, replicates, seed)

    def concentration_report(
        self,
        n: int,
        klist: list[int],
        replicates: int,
        seed: int | None,
        cv_ceiling: float | None = None,
    ) -> ConcentrationReport:
        return self.reports.concentration_report(n, klist, replicates, seed, cv_ceiling)

    def concentration_trend(
        self, small: ConcentrationReport, large: ConcentrationReport
    ) -> ConcentrationTrendReport:
        return self.reports.concentration_trend(small, large)

    def bound_checks(
        self, n_grid: list[int], lmax: int = 20, kmax: int = 30
    ) -> BoundReport:
        return self.reports.bound_checks(n_grid, lmax, kmax)
