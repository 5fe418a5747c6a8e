import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from analytic.errors import (
    ArgumentDomainError,
    TableRangeError,
    ToleranceUnreachableError,
)
from generator.errors import GeneratorStateError
from logger import Logger
from multigraph.errors import BlockSizeError, InvalidHistoryError, UnknownVertexError
from oracle.errors import (
    EnumerationCapError,
    ExactModeLimitError,
    RecurrenceInvariantError,
    WindowTooSmallError,
)
from .models import ErrorResponse
from .routes import router

LIBRARY_ERRORS = (
    ArgumentDomainError,
    BlockSizeError,
    EnumerationCapError,
    ExactModeLimitError,
    GeneratorStateError,
    InvalidHistoryError,
    RecurrenceInvariantError,
    TableRangeError,
    ToleranceUnreachableError,
    UnknownVertexError,
    WindowTooSmallError,
)

logger = Logger().get_logger(name="api")

app = FastAPI(
    title="pa-secdeg API",
    description="Read-only access to second-degree tables, exact oracles and the generator",
    version="1.0.0",
)

origins = [
    "http://localhost",
    "http://localhost:8888",  # Jupyter default port
    "http://127.0.0.1",
    "http://127.0.0.1:8888",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


async def library_error_handler(request: Request, exc: Exception):
    """
    Library errors are caller mistakes (window too small, n above the
    enumeration cap, ...) and map to 400
    """
    logger.warning(f"{request.url.path}: {exc}")
    return JSONResponse(
        status_code=400, content=ErrorResponse(message=str(exc)).model_dump()
    )


for error in LIBRARY_ERRORS:
    app.add_exception_handler(error, library_error_handler)

app.include_router(router)


@app.get("/")
def root():
    return {"status": "ok", "version": app.version}


if __name__ == "__main__":
    uvicorn.run("api.main:app")
