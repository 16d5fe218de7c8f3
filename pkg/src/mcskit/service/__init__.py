"""FastAPI application wrapping the solver package.

Domain errors map onto HTTP statuses: malformed documents and invalid
operands give 400, guard violations give 422. Run with
`uvicorn mcskit.service:app`.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import GuardExceededError, InputError
from . import handlers
from . import models as m


def create_app() -> FastAPI:
    app = FastAPI(title="mcskit", version="0.1.0")

    @app.exception_handler(InputError)
    async def _input_error(request: Request, exc: InputError):
        return JSONResponse(
            status_code=400,
            content=m.ErrorResponse(kind=type(exc).__name__, detail=str(exc)).model_dump(),
        )

    @app.exception_handler(GuardExceededError)
    async def _guard_error(request: Request, exc: GuardExceededError):
        return JSONResponse(
            status_code=422,
            content=m.ErrorResponse(kind="GuardExceededError", detail=str(exc)).model_dump(),
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/solve/approx", response_model=m.AcsResponse)
    def solve_approx(req: m.SolveApproxRequest) -> m.AcsResponse:
        return handlers.solve_approx(req)

    @app.post("/solve/exact", response_model=m.SolveExactResponse)
    def solve_exact(req: m.SolveExactRequest) -> m.SolveExactResponse:
        return handlers.solve_exact(req)

    @app.post("/check", response_model=m.CheckResponse)
    def check(req: m.CheckRequest) -> m.CheckResponse:
        return handlers.check(req)

    @app.post("/reduce", response_model=m.ReduceResponse)
    def reduce(req: m.ReduceRequest) -> m.ReduceResponse:
        return handlers.reduce(req)

    @app.post("/verify-reduction", response_model=m.VerifyReductionResponse)
    def verify_reduction(req: m.VerifyReductionRequest) -> m.VerifyReductionResponse:
        return handlers.verify_reduction(req)

    @app.post("/gen", response_model=m.GenResponse)
    def gen(req: m.GenRequest) -> m.GenResponse:
        return handlers.gen(req)

    @app.post("/bench", response_model=m.BenchResponse)
    def bench(req: m.BenchRequest) -> m.BenchResponse:
        return handlers.bench(req)

    return app


app = create_app()
