"""FastAPI application exposing the exact-arithmetic endpoints."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..pathcount import BudgetExceededError
from . import handlers, schemas

app = FastAPI(
    title="hankelpath",
    description="Exact Hankel determinants of lattice-path sequences, "
                "continued-fraction transformation orbits, and the signed "
                "path-tuple oracle.",
    version="0.1.0",
)


def _guard(func, request):
    try:
        return func(request)
    except handlers.UsageError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except BudgetExceededError as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/seq", response_model=schemas.SeqResponse)
def seq(request: schemas.SeqRequest) -> schemas.SeqResponse:
    return _guard(handlers.seq, request)


@app.post("/hankel", response_model=schemas.HankelResponse)
def hankel_table(request: schemas.HankelRequest) -> schemas.HankelResponse:
    return _guard(handlers.hankel_table, request)


@app.post("/transform", response_model=schemas.TransformResponse)
def transform_orbit(request: schemas.TransformRequest) -> schemas.TransformResponse:
    return _guard(handlers.transform_orbit, request)


@app.post("/lgv", response_model=schemas.LgvResponse)
def lgv(request: schemas.LgvRequest) -> schemas.LgvResponse:
    return _guard(handlers.lgv, request)


@app.post("/verify", response_model=schemas.VerifyResponse)
def run_verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
    return _guard(handlers.run_verify, request)
