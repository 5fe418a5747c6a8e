from .interface import ExperimentsInterface
from .golden import load_golden
from .models import (
    BoundReport,
    ConcentrationReport,
    ConcentrationTrendReport,
    DegreeReport,
    ExperimentConfig,
    MonteCarloReport,
    Report,
    SummaryRow,
    Theorem2Report,
)
from .monte_carlo import MonteCarloHarness, degree_formula, monte_carlo
from .replicates import ReplicateStatistics, compute_batch, compute_replicate
from .reports import ReportBuilder, concentration_threshold

__all__ = [
    "ExperimentsInterface",
    "BoundReport",
    "ConcentrationReport",
    "ConcentrationTrendReport",
    "DegreeReport",
    "ExperimentConfig",
    "MonteCarloHarness",
    "MonteCarloReport",
    "Report",
    "ReplicateStatistics",
    "ReportBuilder",
    "SummaryRow",
    "Theorem2Report",
    "compute_batch",
    "compute_replicate",
    "concentration_threshold",
    "degree_formula",
    "load_golden",
    "monte_carlo",
]
