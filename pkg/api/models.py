"""
Pydantic models for API request/response validation.
"""

from pydantic import BaseModel, Field


# ============================================================
# Analytic Models
# ============================================================


class TableCell(BaseModel):
    l: int
    k: int
    value: str


class AnalyticTableResponse(BaseModel):
    kind: str
    lmax: int
    kmax: int
    mode: str
    cells: list[TableCell]


# ============================================================
# Oracle Models
# ============================================================


class ExpectationRow(BaseModel):
    kind: str = Field(..., description="EN, EP or M1")
    l: int
    k: int = Field(..., description="second degree, or degree d for M1 rows")
    value: str


class ExpectationResponse(BaseModel):
    n: int
    lmax: int
    kmax: int
    dmax: int
    mode: str
    provenance: str
    rows: list[ExpectationRow]


# ============================================================
# Generator Models
# ============================================================


class GenerateRequest(BaseModel):
    n: int = Field(..., ge=0, le=10**6)
    m: int = Field(1, ge=1, le=100)
    seed: int = Field(..., ge=0, le=2**64 - 1)


class GenerateResponse(BaseModel):
    n: int
    m: int
    seed: int
    edges: int
    degree_hist: dict[int, int]
    secdeg_hist: dict[int, int]


class ErrorResponse(BaseModel):
    status: str = "error"
    message: str
