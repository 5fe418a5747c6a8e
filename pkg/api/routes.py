"""
Read-only routes over the analytic tables, the exact oracles and the generator.
"""

from typing import Literal

from fastapi import APIRouter, Query

from analytic import AnalyticInterface
from generator import GeneratorInterface
from graph_statistics import StatisticsInterface
from multigraph import MultiGraph
from oracle import DiffReport, OracleInterface
from oracle.config import OracleConfig
from oracle.errors import ExactModeLimitError
from .models import (
    AnalyticTableResponse,
    ExpectationResponse,
    ExpectationRow,
    GenerateRequest,
    GenerateResponse,
    TableCell,
)

router = APIRouter()

analytic = AnalyticInterface()
oracle = OracleInterface()
generator = GeneratorInterface()
statistics = StatisticsInterface()


@router.get("/analytic/{kind}", response_model=AnalyticTableResponse)
def get_analytic_table(
    kind: Literal["c", "p"],
    lmax: int = Query(10, ge=1, le=500),
    kmax: int = Query(10, ge=0, le=500),
    mode: Literal["exact", "float", "auto"] = "auto",
):
    build = analytic.c_table if kind == "c" else analytic.p_table
    table = build(lmax, kmax, mode)
    return AnalyticTableResponse(
        kind=table.kind,
        lmax=table.lmax,
        kmax=table.kmax,
        mode=table.mode,
        cells=[
            TableCell(l=l, k=k, value=table.format_value(value))
            for l, k, value in table.cells()
        ],
    )


@router.get("/oracle/dp", response_model=ExpectationResponse)
def get_dp_expectations(
    n: int = Query(..., ge=1, le=10**5),
    lmax: int = Query(10, ge=1, le=200),
    kmax: int = Query(10, ge=1, le=200),
    dmax: int = Query(10, ge=1, le=10**5),
    mode: Literal["exact", "float", "auto"] = "auto",
):
    if mode == "exact" and n > OracleConfig.EXACT_DP_LIMIT:
        raise ExactModeLimitError(
            f"exact recurrences are served up to n = {OracleConfig.EXACT_DP_LIMIT}, "
            f"received n = {n}; use mode=float"
        )
    table = oracle.dp_expectations(n, lmax, kmax, dmax, mode)
    return ExpectationResponse(
        n=table.n,
        lmax=table.lmax,
        kmax=table.kmax,
        dmax=table.dmax,
        mode=table.mode,
        provenance=table.provenance,
        rows=[
            ExpectationRow(kind=kind, l=l, k=k, value=table.format_value(value))
            for kind, l, k, value in table.rows()
        ],
    )


@router.get("/oracle/diff", response_model=DiffReport)
def get_oracle_diff(
    n: int = Query(..., ge=1),
    mode: Literal["exact", "float"] = "exact",
):
    return oracle.dp_vs_enum(n, mode)


@router.post("/generate", response_model=GenerateResponse)
def post_generate(request: GenerateRequest):
    if request.m == 1:
        graph = MultiGraph.from_history(generator.generate(request.n, request.seed))
    else:
        graph = generator.generate_collapsed(request.n, request.m, request.seed)
    return GenerateResponse(
        n=request.n,
        m=request.m,
        seed=request.seed,
        edges=graph.edge_count,
        degree_hist=statistics.degree_histogram(graph),
        secdeg_hist=statistics.second_degree_histogram(graph),
    )
