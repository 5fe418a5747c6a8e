from functools import partial
from multiprocessing import Pool

import numpy as np

from analytic import m1_closed, m2_leading
from logger import Logger
from oracle import ExpectationTable, dp_expectations
from .config import ExperimentsConfig
from .models import ExperimentConfig, MonteCarloReport, SummaryRow
from .replicates import ReplicateStatistics, compute_batch, compute_replicate


def degree_formula(n: int, m: int, d: int) -> float:
    """Leading term 2nm(m+1) / (d(d+1)(d+2)) of #_m^n(d)."""
    return 2 * n * m * (m + 1) / (d * (d + 1) * (d + 2))


def _summary(kind: str, l: int, k: int, samples: np.ndarray, **columns) -> SummaryRow:
    replicates = samples.shape[0]
    std = float(samples.std(ddof=1)) if replicates > 1 else 0.0
    return SummaryRow(
        kind=kind,
        l=l,
        k=k,
        mean=float(samples.mean()),
        std=std,
        se=std / np.sqrt(replicates),
        min=float(samples.min()),
        max=float(samples.max()),
        **columns,
    )


class MonteCarloHarness:
    """
    Runs independent replicates and reduces them in replicate order, so the
    report depends on the configuration only and not on how many processes
    (or queue workers) computed it.
    """

    def __init__(self, replicate_queue=None):
        """
        Args:
            replicate_queue (ReplicateQueue, optional): dispatch batches to rq
                workers instead of the local process pool
        """
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)
        self.replicate_queue = replicate_queue

    def collect(self, cfg: ExperimentConfig) -> list[ReplicateStatistics]:
        start = cfg.first_replicate
        stop = start + cfg.replicates

        if self.replicate_queue is not None:
            replicates = self.replicate_queue.run_batches(cfg, start, stop)
        elif cfg.threads > 1:
            with Pool(processes=cfg.threads) as pool:
                replicates = list(
                    pool.imap(partial(compute_replicate, cfg), range(start, stop))
                )
        else:
            replicates = compute_batch(cfg, start, stop)

        self.logger.info(
            f"Collected {len(replicates)} replicates of n={cfg.n}, m={cfg.m}"
        )
        return replicates

    def exact_reference(self, cfg: ExperimentConfig) -> ExpectationTable | None:
        if not cfg.compare_exact or cfg.m != 1:
            return None
        return dp_expectations(
            cfg.n,
            lmax=max(ExperimentsConfig.DP_ROW_WINDOW, cfg.dmax),
            kmax=max(cfg.kmax, 1),
            dmax=cfg.dmax,
            mode="auto",
        )

    def run(self, cfg: ExperimentConfig) -> MonteCarloReport:
        replicates = self.collect(cfg)
        reference = self.exact_reference(cfg)

        secdeg = np.stack([r.secdeg for r in replicates])
        degrees = np.stack([r.degrees for r in replicates])
        N = np.stack([r.N for r in replicates])
        P = np.stack([r.P for r in replicates])

        rows = []
        for k in range(cfg.kmax + 1):
            exact = None if reference is None else float(reference.secdeg_expectation(k))
            closed = float(m2_leading(cfg.n, k)) if k >= 1 and cfg.m == 1 else None
            rows.append(
                _summary("secdeg", 0, k, secdeg[:, k], exact=exact, closed_form=closed)
            )
        for d in range(1, cfg.dmax + 1):
            exact = None if reference is None else float(reference.m1(d))
            closed = (
                float(m1_closed(cfg.n, d))
                if cfg.m == 1
                else degree_formula(cfg.n, cfg.m, d)
            )
            rows.append(
                _summary("deg", 0, d, degrees[:, d], exact=exact, closed_form=closed)
            )
        for kind, samples, table in (("N", N, "EN"), ("P", P, "EP")):
            occupied = np.argwhere(samples.sum(axis=0) > 0)
            for l, k in occupied:
                exact = None
                if reference is not None and l <= reference.lmax:
                    exact = float(getattr(reference, table)[l, k])
                rows.append(_summary(kind, int(l), int(k), samples[:, l, k], exact=exact))

        return MonteCarloReport(
            config=cfg,
            rows=rows,
            secdeg_samples=secdeg.tolist(),
            degree_samples=degrees.tolist(),
            exact_outside_mass=(
                None if reference is None else float(reference.outside_mass)
            ),
        )


def monte_carlo(cfg: ExperimentConfig, replicate_queue=None) -> MonteCarloReport:
    return MonteCarloHarness(replicate_queue).run(cfg)
