from dataclasses import dataclass

import numpy as np

from generator import Generator, replicate_seed
from graph_statistics import joint_counts
from multigraph import MultiGraph
from .models import ExperimentConfig


@dataclass(frozen=True)
class ReplicateStatistics:
    """
    Census of one replicate cut to the report window: secdeg[k] = X_n(k) for
    k <= kmax, degrees[d] = #(d) for d <= dmax, N[l, k] and P[l, k] for
    l <= dmax, k <= kmax.
    """

    index: int
    secdeg: np.ndarray
    degrees: np.ndarray
    N: np.ndarray
    P: np.ndarray


def _vector(histogram: dict[int, int], size: int) -> np.ndarray:
    vector = np.zeros(size, dtype=np.int64)
    for key, count in histogram.items():
        if key < size:
            vector[key] = count
    return vector


def _matrix(cells: dict[tuple[int, int], int], rows: int, cols: int) -> np.ndarray:
    matrix = np.zeros((rows, cols), dtype=np.int64)
    for (l, k), count in cells.items():
        if l < rows and k < cols:
            matrix[l, k] = count
    return matrix


def sample_graph(cfg: ExperimentConfig, replicate: int) -> MultiGraph:
    seed = replicate_seed(cfg.seed, replicate)
    if cfg.m == 1:
        return MultiGraph.from_history(Generator().generate(cfg.n, seed))
    return Generator().generate_collapsed(cfg.n, cfg.m, seed)


def compute_replicate(cfg: ExperimentConfig, replicate: int) -> ReplicateStatistics:
    counts = joint_counts(sample_graph(cfg, replicate))
    rows, cols = cfg.dmax + 1, cfg.kmax + 1
    return ReplicateStatistics(
        index=replicate,
        secdeg=_vector(counts.secdeg_hist, cols),
        degrees=_vector(counts.degree_hist, rows),
        N=_matrix(counts.N, rows, cols),
        P=_matrix(counts.P, rows, cols),
    )


def compute_batch(
    cfg: ExperimentConfig, start: int, stop: int
) -> list[ReplicateStatistics]:
    """Replicates start .. stop - 1, in order."""
    return [compute_replicate(cfg, replicate) for replicate in range(start, stop)]
