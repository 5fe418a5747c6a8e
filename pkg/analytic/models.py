from pydantic import BaseModel, computed_field


class IdentityCheck(BaseModel):
    """
    One verified identity or bound. residual is the quantity compared with
    tolerance; raw_residual, when present, is the same identity evaluated
    without the truncation correction.
    """

    name: str
    index: int | None = None
    residual: float
    raw_residual: float | None = None
    tolerance: float
    passed: bool
    detail: str | None = None


class IdentityReport(BaseModel):
    lmax: int
    kmax: int
    mode: str
    checks: list[IdentityCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def by_name(self, name: str) -> list[IdentityCheck]:
        return [check for check in self.checks if check.name == name]

    def worst(self, name: str) -> IdentityCheck:
        return max(self.by_name(name), key=lambda check: check.residual)
