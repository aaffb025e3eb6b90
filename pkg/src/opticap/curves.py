"""Parameter sweeps assembled into tabular records.

These functions back both the HTTP service and the command-line client.
Each table function returns (columns, rows) with plain Python scalars so the
output serializes identically everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import infotheory
from .fock import chi_bpsk_closed_form
from .hadamard import optimize_p1
from .infotheory import GaussianMixtureLaw, MiProblem, mutual_information
from .ppm import PpmParams, optimal_ppm_order_exact, ppm_pie, ppm_pie_opt_approx

SCHEMES = ("S1", "S2", "Holevo", "Fock")

_CAPACITY_FUNCTIONS = {
    "S1": lambda n_s, n_n: infotheory.capacity_shannon_1q(n_s, n_n),
    "S2": lambda n_s, n_n: infotheory.capacity_shannon_2q(n_s, n_n),
    "Holevo": lambda n_s, n_n: infotheory.capacity_holevo(n_s, n_n),
    # Lossless photon-number encoding is drawn against n_s for comparison.
    "Fock": lambda n_s, n_n: infotheory.capacity_fock(n_s),
}


@dataclass(frozen=True)
class CapacityPoint:
    """One point of a capacity curve."""

    n_s: float
    n_n: float
    scheme: str
    bits_per_slot: float


def sweep_values(start: float, stop: float, points: int, log: bool) -> np.ndarray:
    """Sweep grid; a single point degenerates to [start]."""
    if points < 1:
        raise ValueError("points must be at least 1")
    if points == 1:
        if start != stop:
            raise ValueError("a single-point sweep needs start == stop")
        return np.array([float(start)])
    if start >= stop:
        raise ValueError("start must be below stop")
    if log:
        if start <= 0:
            raise ValueError("log sweeps need start > 0")
        return np.geomspace(start, stop, points)
    return np.linspace(start, stop, points)


def capacity_curve_points(
    ns_values, n_n: float, schemes=SCHEMES
) -> list[CapacityPoint]:
    for scheme in schemes:
        if scheme not in _CAPACITY_FUNCTIONS:
            raise ValueError(f"unknown scheme {scheme!r}")
    return [
        CapacityPoint(float(n_s), float(n_n), scheme, float(_CAPACITY_FUNCTIONS[scheme](n_s, n_n)))
        for n_s in ns_values
        for scheme in schemes
    ]


def capacity_curve_table(ns_values, n_n: float, schemes=SCHEMES):
    columns = ["n_s", "n_n", "scheme", "bits_per_slot"]
    rows = [
        [p.n_s, p.n_n, p.scheme, p.bits_per_slot]
        for p in capacity_curve_points(ns_values, n_n, schemes)
    ]
    return columns, rows


def bpsk_homodyne_mi(n_s: float) -> float:
    """Bits per slot for antipodal signaling read out by matched homodyning."""
    mean = math.sqrt(2.0 * n_s)
    laws = (
        GaussianMixtureLaw(np.array([mean]), np.array([1.0]), 0.5),
        GaussianMixtureLaw(np.array([-mean]), np.array([1.0]), 0.5),
    )
    return mutual_information(MiProblem(np.array([0.5, 0.5]), laws))


def pie_curve_table(ns_values, n_n: float, ppm_orders, include_approx: bool):
    """Photon-efficiency sweep: Shannon and Holevo limits plus PPM columns.

    PPM columns assume ideal noiseless direct detection regardless of n_n.
    With include_approx, the exact integer-optimum efficiency and its
    continuous-order approximation are appended; the approximation column is
    empty outside its 0 < n_s < 1 validity range.
    """
    orders = [int(m) for m in ppm_orders]
    for m in orders:
        if m < 2 or m & (m - 1):
            raise ValueError(f"PPM orders shown here must be powers of two, got {m}")
    columns = ["n_s", "n_n", "pie_s1", "pie_s2", "pie_holevo"]
    columns += [f"pie_ppm_{m}" for m in orders]
    if include_approx:
        columns += ["pie_ppm_opt_exact", "pie_ppm_opt_approx"]
    rows = []
    for n_s in map(float, ns_values):
        row = [
            n_s,
            float(n_n),
            infotheory.pie(infotheory.capacity_shannon_1q(n_s, n_n), n_s),
            infotheory.pie(infotheory.capacity_shannon_2q(n_s, n_n), n_s),
            infotheory.pie(infotheory.capacity_holevo(n_s, n_n), n_s),
        ]
        row += [ppm_pie(PpmParams(m, n_s)) for m in orders]
        if include_approx:
            _, pie_exact = optimal_ppm_order_exact(n_s)
            row.append(pie_exact)
            row.append(ppm_pie_opt_approx(n_s) if 0.0 < n_s < 1.0 else None)
        rows.append(row)
    return columns, rows


def pie_heatmap_table(ns_values, nn_values):
    """Holevo photon efficiency over an (n_s, n_n) grid."""
    columns = ["n_s", "n_n", "pie_holevo"]
    rows = [
        [float(n_s), float(n_n), infotheory.pie(infotheory.capacity_holevo(n_s, n_n), n_s)]
        for n_s in ns_values
        for n_n in nn_values
    ]
    return columns, rows


def bpsk_chi_table(ns_values):
    """Antipodal-constellation efficiencies against the capacity limits."""
    columns = ["n_s", "pie_homodyne_bpsk", "pie_chi_bpsk", "pie_s1", "pie_holevo"]
    rows = []
    for n_s in map(float, ns_values):
        rows.append(
            [
                n_s,
                infotheory.pie(bpsk_homodyne_mi(n_s), n_s),
                infotheory.pie(chi_bpsk_closed_form(n_s), n_s),
                infotheory.pie(infotheory.capacity_shannon_1q(n_s), n_s),
                infotheory.pie(infotheory.capacity_holevo(n_s), n_s),
            ]
        )
    return columns, rows


def superadditivity_table(orders, n_s: float):
    """Optimized (M+1)-word scheme against per-symbol and PPM benchmarks."""
    columns = [
        "order",
        "p1_star",
        "pie_star",
        "ppm_equivalent_pie",
        "single_symbol_ceiling",
    ]
    ceiling = 2.0 * infotheory.LOG2_E
    rows = []
    for order in orders:
        p1_star, pie_star = optimize_p1(int(order), float(n_s))
        rows.append(
            [
                int(order),
                float(p1_star),
                float(pie_star),
                ppm_pie(PpmParams(int(order), float(n_s))),
                ceiling,
            ]
        )
    return columns, rows
