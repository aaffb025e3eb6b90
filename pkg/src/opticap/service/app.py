"""FastAPI service exposing the sweep and validation computations."""

from __future__ import annotations

from fastapi import FastAPI

from .. import __version__, curves
from ..validate import run_validation
from .schemas import (
    BpskChiRequest,
    CapacityCurvesRequest,
    CheckModel,
    HealthResponse,
    PieCurvesRequest,
    PieHeatmapRequest,
    SuperadditivityRequest,
    SweepSpec,
    TableResponse,
    ValidateRequest,
    ValidateResponse,
)


def _grid(sweep: SweepSpec):
    return curves.sweep_values(sweep.start, sweep.stop, sweep.points, sweep.scale == "log")


def _fixed_nn(sweep: SweepSpec) -> float:
    n_n = float(sweep.fixed.get("n_n", 0.0))
    if n_n < 0:
        raise ValueError("fixed n_n must be nonnegative")
    return n_n


def create_app() -> FastAPI:
    app = FastAPI(
        title="opticap service",
        version=__version__,
        description=(
            "Capacity and photon-efficiency limits of the discrete-slot AWGN "
            "optical channel, served as tabular sweeps."
        ),
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/capacity-curves", response_model=TableResponse)
    def capacity_curves(request: CapacityCurvesRequest) -> TableResponse:
        columns, rows = curves.capacity_curve_table(
            _grid(request.sweep), _fixed_nn(request.sweep), request.schemes
        )
        return TableResponse(columns=columns, rows=rows)

    @app.post("/pie-curves", response_model=TableResponse)
    def pie_curves(request: PieCurvesRequest) -> TableResponse:
        columns, rows = curves.pie_curve_table(
            _grid(request.sweep),
            _fixed_nn(request.sweep),
            request.include_ppm_orders,
            request.include_approx,
        )
        return TableResponse(columns=columns, rows=rows)

    @app.post("/pie-heatmap", response_model=TableResponse)
    def pie_heatmap(request: PieHeatmapRequest) -> TableResponse:
        columns, rows = curves.pie_heatmap_table(
            _grid(request.ns_sweep), _grid(request.nn_sweep)
        )
        return TableResponse(columns=columns, rows=rows)

    @app.post("/bpsk-chi", response_model=TableResponse)
    def bpsk_chi(request: BpskChiRequest) -> TableResponse:
        columns, rows = curves.bpsk_chi_table(_grid(request.sweep))
        return TableResponse(columns=columns, rows=rows)

    @app.post("/superadditivity", response_model=TableResponse)
    def superadditivity(request: SuperadditivityRequest) -> TableResponse:
        columns, rows = curves.superadditivity_table(request.orders, request.n_s)
        return TableResponse(columns=columns, rows=rows)

    @app.post("/validate", response_model=ValidateResponse)
    def validate(request: ValidateRequest) -> ValidateResponse:
        checks = run_validation(request.seed, request.samples)
        models = [
            CheckModel(
                name=c.name,
                measured=c.measured,
                expected=c.expected,
                band=c.band,
                passed=c.passed,
            )
            for c in checks
        ]
        return ValidateResponse(
            passed=all(c.passed for c in checks),
            seed=request.seed,
            samples=request.samples,
            checks=models,
        )

    return app


app = create_app()
