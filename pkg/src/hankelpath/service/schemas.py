"""Pydantic request/response models for the HTTP API and the CLI client."""

from __future__ import annotations

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class SeriesSpec(BaseModel):
    """Rational series as ascending coefficient arrays of scalar strings."""

    num: List[str]
    den: List[str] = Field(default_factory=lambda: ["1"])


class SeqRequest(BaseModel):
    ell: int
    t: str = "1"
    n_max: int = Field(ge=0)


class SeqResponse(BaseModel):
    ell: int
    t: str
    terms: List[str]


class HankelRequest(BaseModel):
    ell: int
    t: str = "1"
    shift: int = Field(default=0, ge=0)
    n_max: int = Field(ge=1)
    detect_period: bool = False
    max_period: int = Field(default=20, ge=1)


class HankelRow(BaseModel):
    n: int
    det: str


class PeriodReport(BaseModel):
    period: int
    offset: int


class HankelResponse(BaseModel):
    ell: int
    t: str
    shift: int
    rows: List[HankelRow]
    period: Optional[PeriodReport] = None


class QuadraticSpec(BaseModel):
    """a(x) F^2 + b(x) F + c(x) = 0, to be canonicalized."""

    a: SeriesSpec
    b: SeriesSpec
    c: SeriesSpec


class CanonicalFESpec(BaseModel):
    d: int = Field(ge=0)
    k: int = Field(ge=1)
    u: SeriesSpec
    v: SeriesSpec


class TransformRequest(BaseModel):
    fe: Optional[CanonicalFESpec] = None
    quadratic: Optional[QuadraticSpec] = None
    shift: int = Field(default=0, ge=0)
    max_steps: int = Field(default=16, ge=1)


class FactorSpec(BaseModel):
    base: str
    offset: int


class ChainSpec(BaseModel):
    sign: int
    delta: int
    factors: List[FactorSpec]


class StepSpec(BaseModel):
    kind: str
    before: CanonicalFESpec
    after: CanonicalFESpec
    chain: ChainSpec
    note: str


class TransformResponse(BaseModel):
    status: str
    states: List[CanonicalFESpec]
    steps: List[StepSpec]
    cycle: Optional[Tuple[int, int]] = None
    recurrence: Optional[ChainSpec] = None


class LgvRequest(BaseModel):
    initials: List[Tuple[int, int]]
    terminals: List[Tuple[int, int]]
    ell: int
    t: str = "1"
    budget: int = Field(default=20_000_000, ge=1)


class LgvResponse(BaseModel):
    signed_sum: str
    determinant: str
    match: bool


class VerifyRequest(BaseModel):
    only: Optional[str] = None


class VerifyItem(BaseModel):
    name: str
    passed: bool
    detail: str
    seconds: float


class VerifyResponse(BaseModel):
    ok: bool
    results: List[VerifyItem]
