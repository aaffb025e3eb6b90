"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Scheme = Literal["S1", "S2", "Holevo", "Fock"]
Cell = Union[int, float, str, None]


class SweepSpec(BaseModel):
    """One swept parameter: endpoints, point count, and axis scale.

    A single-point sweep (points == 1) requires start == stop; otherwise
    start < stop, and log scale additionally requires start > 0.  ``fixed``
    carries values for the parameters held constant, e.g. {"n_n": 0.2}.
    """

    variable: Literal["n_s", "n_n"] = "n_s"
    scale: Literal["log", "linear"] = "log"
    start: float
    stop: float
    points: int = Field(ge=1)
    fixed: dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_bounds(self) -> "SweepSpec":
        if self.points == 1:
            if self.start != self.stop:
                raise ValueError("a single-point sweep needs start == stop")
        elif self.start >= self.stop:
            raise ValueError("start must be below stop")
        if self.scale == "log" and self.start <= 0:
            raise ValueError("log sweeps need start > 0")
        return self


class TableResponse(BaseModel):
    columns: list[str]
    rows: list[list[Cell]]


class CapacityCurvesRequest(BaseModel):
    sweep: SweepSpec
    schemes: list[Scheme] = Field(default=list(("S1", "S2", "Holevo", "Fock")), min_length=1)

    @model_validator(mode="after")
    def _check_variable(self) -> "CapacityCurvesRequest":
        if self.sweep.variable != "n_s":
            raise ValueError("capacity curves sweep n_s; hold n_n in sweep.fixed")
        return self


class PieCurvesRequest(BaseModel):
    sweep: SweepSpec
    include_ppm_orders: list[int] = Field(default=[2, 4, 8])
    include_approx: bool = False

    @model_validator(mode="after")
    def _check(self) -> "PieCurvesRequest":
        if self.sweep.variable != "n_s":
            raise ValueError("efficiency curves sweep n_s; hold n_n in sweep.fixed")
        for order in self.include_ppm_orders:
            if order < 2 or order & (order - 1):
                raise ValueError("PPM orders shown here must be powers of two")
        return self


class PieHeatmapRequest(BaseModel):
    ns_sweep: SweepSpec
    nn_sweep: SweepSpec

    @model_validator(mode="after")
    def _check(self) -> "PieHeatmapRequest":
        if self.ns_sweep.variable != "n_s" or self.nn_sweep.variable != "n_n":
            raise ValueError("heatmap needs an n_s sweep and an n_n sweep")
        return self


class BpskChiRequest(BaseModel):
    sweep: SweepSpec

    @model_validator(mode="after")
    def _check(self) -> "BpskChiRequest":
        if self.sweep.variable != "n_s":
            raise ValueError("the constellation comparison sweeps n_s")
        return self


class SuperadditivityRequest(BaseModel):
    orders: list[Literal[2, 4, 8, 16]] = Field(default=[2, 4, 8], min_length=1)
    n_s: float = Field(default=1e-4, gt=0)


class ValidateRequest(BaseModel):
    seed: int = 1234
    samples: int = Field(default=1_000_000, ge=100_000)


class CheckModel(BaseModel):
    name: str
    measured: float
    expected: float
    band: float
    passed: bool


class ValidateResponse(BaseModel):
    passed: bool
    seed: int
    samples: int
    checks: list[CheckModel]


class HealthResponse(BaseModel):
    status: str
    version: str
