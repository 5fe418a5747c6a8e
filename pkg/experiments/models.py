from typing import Any

from pydantic import BaseModel, Field, computed_field, model_validator

from config import GlobalConfig


class ExperimentConfig(BaseModel):
    """
    One Monte-Carlo run: replicates first_replicate .. first_replicate + R - 1
    of G_m^n, replicate r seeded with mix(seed, r).
    """

    n: int = Field(ge=1)
    m: int = Field(default=1, ge=1)
    replicates: int = Field(ge=1)
    kmax: int = Field(default=20, ge=0)
    dmax: int = Field(default=20, ge=1)
    seed: int = Field(ge=0, le=2**64 - 1)
    threads: int = Field(default=1, ge=1)
    first_replicate: int = Field(default=0, ge=0)
    compare_exact: bool = True
    out: str | None = None


class SummaryRow(BaseModel):
    """
    Replicate statistics of one observable. kind is secdeg (X_n(k), k in the k
    column), deg (#(d), d in the k column), N or P (cell (l, k)).
    """

    kind: str
    l: int
    k: int
    mean: float
    std: float
    se: float
    min: float
    max: float
    exact: float | None = None
    closed_form: float | None = None

    @model_validator(mode="after")
    def _mean_inside_range(self):
        if not self.min - 1e-9 <= self.mean <= self.max + 1e-9:
            raise ValueError(f"mean {self.mean} outside [{self.min}, {self.max}]")
        return self

    @computed_field
    @property
    def standard_errors(self) -> float | None:
        """|mean - exact| in units of SE, when an exact value is known."""
        if self.exact is None:
            return None
        if self.se == 0:
            return 0.0 if self.mean == self.exact else float("inf")
        return abs(self.mean - self.exact) / self.se


class MonteCarloReport(BaseModel):
    version: str = GlobalConfig.VERSION_TAG
    config: ExperimentConfig
    rows: list[SummaryRow]
    # per-replicate X_n(k), k = 0..kmax, and #(d), d = 0..dmax, in replicate order
    secdeg_samples: list[list[int]]
    degree_samples: list[list[int]]
    exact_outside_mass: float | None = None
    golden_ref: str | None = None

    def row(self, kind: str, k: int, l: int = 0) -> SummaryRow:
        for row in self.rows:
            if row.kind == kind and row.k == k and row.l == l:
                return row
        raise KeyError((kind, l, k))


class Report(BaseModel):
    """Common frame of every report: {config, rows[], golden_ref}."""

    version: str = GlobalConfig.VERSION_TAG
    kind: str
    config: dict[str, Any]
    golden_ref: str | None = None


class Theorem2Row(BaseModel):
    k: int
    mean: float
    ratio: float
    envelope: float
    lower: float
    upper: float
    checked: bool
    within: bool


class Theorem2Report(Report):
    kind: str = "theorem2"
    rows: list[Theorem2Row]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.within for row in self.rows if row.checked)


class DegreeRow(BaseModel):
    d: int
    mean: float
    se: float
    formula: float
    relative_error: float
    exact: float | None = None
    within: bool


class DegreeReport(Report):
    rows: list[DegreeRow]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.within for row in self.rows)


class ConcentrationRow(BaseModel):
    k: int
    mean: float
    std: float
    cv: float
    cv_se: float
    threshold: float
    exceedances: int
    frequency: float
    within: bool


class ConcentrationReport(Report):
    kind: str = "concentration"
    rows: list[ConcentrationRow]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.within for row in self.rows)


class ConcentrationTrendRow(BaseModel):
    k: int
    n_small: int
    n_large: int
    cv_small: float
    cv_large: float
    allowance: float
    within: bool


class ConcentrationTrendReport(Report):
    kind: str = "concentration_trend"
    rows: list[ConcentrationTrendRow]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.within for row in self.rows)


class BoundRow(BaseModel):
    """
    Worst cell of one bound at one n. ratio is |theta| / bound (at most 1 when
    the bound holds); Lemma 2 rows use EP - p instead.
    """

    n: int
    bound: str
    l: int | None = None
    k: int | None = None
    ratio: float
    cells: int
    passed: bool
    detail: str | None = None


class BoundReport(Report):
    kind: str = "bounds"
    rows: list[BoundRow]
    looped_exceedances: list[dict[str, Any]] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)
