"""Request/response models shared by the HTTP service and the CLI client."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class SolveApproxRequest(BaseModel):
    instance: str = Field(description="interval-format document")
    run_exact: bool = False
    guard: Optional[int] = None


class AcsResponse(BaseModel):
    size: int
    subset: list[int]
    bar_count: int
    repair_added: int
    ratio_bound: int
    degraded: bool
    exact_size: Optional[int] = None
    achieved_ratio: Optional[float] = None
    timings: dict[str, float]


class SolveExactRequest(BaseModel):
    instance: str = Field(description="graph, interval, or chords document")
    budget: Optional[int] = None
    guard: Optional[int] = None


class SolveExactResponse(BaseModel):
    found: bool
    size: Optional[int] = None
    subset: Optional[list[int]] = None


class CheckRequest(BaseModel):
    instance: str
    subset: list[int]


class CheckResponse(BaseModel):
    consistent: bool


class ReduceRequest(BaseModel):
    diagram: str = Field(description="chords-format document")


class ReduceResponse(BaseModel):
    instance: str = Field(description="chords document with pendant records")
    vertex_count: int
    edge_count: int
    pendant_of: dict[int, int]


class VerifyReductionRequest(BaseModel):
    diagram: str
    guard: Optional[int] = None


class VerifyReductionResponse(BaseModel):
    n: int
    dominating_size: int
    mcs_size: int
    expected_mcs_size: int
    verdict: bool
    dominating_set: list[int]
    consistent_subset: list[int]


class GenRequest(BaseModel):
    kind: str = Field(pattern="^(interval|chords)$")
    n: int = Field(ge=1)
    alpha: int = Field(ge=1)
    seed: int = Field(ge=0)


class GenResponse(BaseModel):
    content: str


class BenchRequest(BaseModel):
    n: int = Field(ge=1)
    alpha: int = Field(ge=1)
    trials: int = Field(ge=0)
    seed: int = Field(ge=0)
    exact_max: Optional[int] = None
    guard: Optional[int] = None


class BenchRow(BaseModel):
    seed: int
    n: int
    alpha: int
    acs_size: int
    bar_count: int
    repair_added: int
    degraded: bool
    exact_size: Optional[int] = None
    ratio: Optional[float] = None
    skipped: bool = False


class BenchResponse(BaseModel):
    rows: list[BenchRow]
    max_ratio: Optional[float] = None
    mean_ratio: Optional[float] = None
    csv: str


class ErrorResponse(BaseModel):
    kind: str
    detail: str
