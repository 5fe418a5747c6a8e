from pydantic import BaseModel, computed_field


class CellDiff(BaseModel):
    kind: str
    l: int
    k: int
    left: str
    right: str
    difference: float


class UncoveredCell(BaseModel):
    """A nonzero cell of one table that lies outside the other table's window."""

    kind: str
    l: int
    k: int
    present_in: str


class LoopedBoundExceedance(BaseModel):
    """A cell with E P_n(l, k) > p(l, k)."""

    l: int
    k: int
    expectation: str
    bound: str
    small_n: bool


class DiffReport(BaseModel):
    n: int
    mode: str
    left: str
    right: str
    cells_compared: int
    max_abs_diff: float
    identical: bool
    tolerance: float
    mismatches: list[CellDiff]
    uncovered: list[UncoveredCell]
    looped_bound_exceedances: list[LoopedBoundExceedance] = []

    @computed_field
    @property
    def passed(self) -> bool:
        if self.uncovered:
            return False
        if self.mode == "exact":
            return self.identical
        return self.max_abs_diff <= self.tolerance


class ThetaCell(BaseModel):
    """Relative error EN / (n c) - 1 of one cell against its bound (2l+k-1)^2 / n."""

    l: int
    k: int
    theta: float
    bound: float
    passed: bool


class ThetaTildeRow(BaseModel):
    """Relative error of M1(d) against 4n/(d(d+1)(d+2)), bounded by d^2/n."""

    d: int
    theta: float
    bound: float
    sharp_bound: float | None = None
    passed: bool


class BoundaryRow(BaseModel):
    """Closed-form boundary probability next to its enumerated value."""

    name: str
    l: int
    n: int
    closed_form: str
    enumerated: str
    stated: str | None = None
    matches: bool
