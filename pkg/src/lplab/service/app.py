"""FastAPI application wiring the handlers to versioned endpoints.

Domain errors become structured JSON bodies {"error": {"kind", "message"}}:
data problems map to 400, numeric breakdowns to 422, violated internal
guarantees to 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DataError, InternalInvariantError, LpLabError, NumericError
from . import handlers
from .models import (
    ConstructRequest,
    ExperimentRequest,
    FitRequest,
    HealthResponse,
    ReportResponse,
    SynthRequest,
    SynthResponse,
)

API_VERSION = "0.1.0"


def _status_for(exc: LpLabError) -> int:
    if isinstance(exc, DataError):
        return 400
    if isinstance(exc, NumericError):
        return 422
    if isinstance(exc, InternalInvariantError):
        return 500
    return 500


def create_app() -> FastAPI:
    app = FastAPI(
        title="lp-lab",
        version=API_VERSION,
        description="Linear prediction construction and fitting service",
    )

    @app.exception_handler(LpLabError)
    async def _domain_error(request: Request, exc: LpLabError) -> JSONResponse:
        return JSONResponse(
            status_code=_status_for(exc),
            content={"error": {"kind": exc.kind, "message": str(exc)}},
        )

    @app.get("/v1/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=API_VERSION)

    @app.post("/v1/synth", response_model=SynthResponse)
    def synth(request: SynthRequest) -> SynthResponse:
        return handlers.run_synth(request)

    @app.post("/v1/fit", response_model=ReportResponse, response_model_exclude_none=True)
    def fit(request: FitRequest) -> dict:
        return handlers.run_fit(request)

    @app.post(
        "/v1/construct", response_model=ReportResponse, response_model_exclude_none=True
    )
    def construct(request: ConstructRequest) -> dict:
        return handlers.run_construct(request)

    @app.post(
        "/v1/experiment", response_model=ReportResponse, response_model_exclude_none=True
    )
    def experiment(request: ExperimentRequest) -> dict:
        return handlers.run_experiment(request)

    return app


app = create_app()
