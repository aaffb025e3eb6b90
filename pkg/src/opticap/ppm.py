"""Pulse-position modulation over an ideal photon-counting link.

An M-ary frame concentrates the energy of M slots, M * n_s photons, into a
single pulse; with ideal direct detection the frame either reveals the pulse
position or is erased when no photocount occurs.  The per-slot mutual
information is exactly

    I = (1/M) * (1 - e^{-M n_s}) * log2 M,

and the photon information efficiency I / n_s tends to log2 M as n_s -> 0.
The module also provides the continuous-order optimum built on the Lambert W
function and an exact integer search.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .infotheory import LOG2_E


@dataclass(frozen=True)
class PpmParams:
    """Frame length (order) and mean received photons per slot."""

    order: int
    n_s: float

    def __post_init__(self) -> None:
        if not isinstance(self.order, (int, np.integer)) or self.order < 2:
            raise ValueError("order must be an integer >= 2")
        if self.n_s < 0:
            raise ValueError("n_s must be nonnegative")


def ppm_click_prob(params: PpmParams) -> float:
    """Probability 1 - e^{-M n_s} that the frame produces any photocount."""
    return -math.expm1(-params.order * params.n_s)


def ppm_mutual_information(params: PpmParams) -> float:
    """Erasure-channel mutual information in bits per slot."""
    return ppm_click_prob(params) * math.log2(params.order) / params.order


def ppm_pie(params: PpmParams) -> float:
    """Photon information efficiency of the frame, bits per photon."""
    if params.n_s <= 0:
        raise ValueError("ppm_pie requires n_s > 0")
    return ppm_mutual_information(params) / params.n_s


def lambert_w(x: float) -> float:
    """Principal-branch Lambert W for nonnegative arguments.

    Solves w e^w = x by Halley iteration from a logarithmic initial guess;
    the residual |w e^w - x| is driven below 1e-12 * max(1, x).
    """
    if x < 0:
        raise ValueError("only nonnegative arguments are supported")
    if x == 0.0:
        return 0.0
    if x < math.e:
        w = math.log1p(x)
    else:
        log_x = math.log(x)
        w = log_x - math.log(log_x)
    tolerance = 1e-12 * max(1.0, x)
    for _ in range(64):
        ew = math.exp(w)
        residual = w * ew - x
        if abs(residual) <= tolerance:
            return w
        # Halley step for f(w) = w e^w - x.
        denominator = ew * (w + 1.0) - (w + 2.0) * residual / (2.0 * w + 2.0)
        w -= residual / denominator
    raise RuntimeError(f"Lambert W iteration did not converge for x={x}")


def optimal_ppm_order_approx(n_s: float) -> float:
    """Continuous-order optimum M* ~ (2/n_s) / W(2e/n_s).

    Valid in the photon-starved regime n_s << 1; a warning is issued for
    n_s >= 1 where the quadratic click-probability expansion behind the
    formula no longer holds.
    """
    if n_s <= 0:
        raise ValueError("n_s must be positive")
    if n_s >= 1:
        warnings.warn(
            "optimal_ppm_order_approx is derived for n_s << 1; "
            f"result at n_s={n_s} is unreliable",
            stacklevel=2,
        )
    return (2.0 / n_s) / lambert_w(2.0 * math.e / n_s)


def ppm_pie_opt_approx(n_s: float) -> float:
    """Photon efficiency at the continuous-order optimum.

    (W(2e/n_s) - 2 + 1/W(2e/n_s)) * log2 e; slightly below the exact
    integer-search optimum.
    """
    if not 0.0 < n_s < 1.0:
        raise ValueError("ppm_pie_opt_approx is defined for 0 < n_s < 1")
    w = lambert_w(2.0 * math.e / n_s)
    return (w - 2.0 + 1.0 / w) * LOG2_E


def _pie_of_orders(orders: np.ndarray, n_s: float) -> np.ndarray:
    m = orders.astype(float)
    return -np.expm1(-m * n_s) * np.log2(m) / (m * n_s)


def optimal_ppm_order_exact(
    n_s: float, m_max: int = 2**24, powers_of_two_only: bool = False
) -> tuple[int, float]:
    """Best integer PPM order in [2, m_max] and its photon efficiency.

    Ties break toward the smaller order.  The full integer range is searched
    with a log-spaced pre-scan followed by local refinement, relying on the
    numerically verified unimodality of the efficiency in the order.
    """
    if n_s <= 0:
        raise ValueError("n_s must be positive")
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    if powers_of_two_only:
        exponents = np.arange(1, int(math.log2(m_max)) + 1)
        orders = (2**exponents).astype(np.int64)
        values = _pie_of_orders(orders, n_s)
        best = int(np.argmax(values))
        return int(orders[best]), float(values[best])
    grid = np.unique(
        np.concatenate(
            [[2, m_max], np.geomspace(2, m_max, 512).astype(np.int64)]
        )
    )
    values = _pie_of_orders(grid, n_s)
    best = int(np.argmax(values))
    lo = int(grid[max(best - 1, 0)])
    hi = int(grid[min(best + 1, grid.size - 1)])
    while hi - lo > 4096:
        third = (hi - lo) // 3
        m1, m2 = lo + third, hi - third
        if _pie_of_orders(np.array([m1]), n_s)[0] < _pie_of_orders(np.array([m2]), n_s)[0]:
            lo = m1 + 1
        else:
            hi = m2 - 1
    candidates = np.arange(lo, hi + 1, dtype=np.int64)
    values = _pie_of_orders(candidates, n_s)
    best = int(np.argmax(values))  # argmax takes the first, so ties go to smaller M
    return int(candidates[best]), float(values[best])
