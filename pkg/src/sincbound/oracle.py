"""Brute-force verification of the spectral bound, no Nystrom machinery.

The operator is rediscretized on a uniform grid with trapezoid weights
-- deliberately nothing like the Gauss-node matrix in ``spectrum`` --
and its norm is recovered by plain power iteration.  Agreement between
the two routes is the discretization-independence check.  A randomized
Rayleigh-quotient scan over rough states gives the complementary
"no state beats the bound" evidence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, NumericError
from .spectrum import _kernel_array

__all__ = ["OracleReport", "oracle_report", "power_iteration_lambda0", "random_state_scan"]

_MAX_ITERATIONS = 10_000
_START_SEED = 20260815  # fixed: the start vector is part of the algorithm


def _check_xi(xi: float) -> float:
    xi = float(xi)
    if not math.isfinite(xi) or xi < 0.0:
        raise ArgumentError(f"xi must be finite and >= 0, got {xi!r}")
    return xi


def _trapezoid_operator(xi: float, grid_size: int) -> np.ndarray:
    x = np.linspace(-1.0, 1.0, grid_size)
    w = np.full(grid_size, 2.0 / (grid_size - 1))
    w[0] *= 0.5
    w[-1] *= 0.5
    sw = np.sqrt(w)
    return _kernel_array(xi, x[:, None] - x[None, :]) * sw[:, None] * sw[None, :]


def _power_iteration(op: np.ndarray, tol: float) -> tuple[float, int]:
    rng = np.random.default_rng(_START_SEED)
    v = np.ones(op.shape[0]) + 1e-3 * rng.standard_normal(op.shape[0])
    v /= np.linalg.norm(v)
    quotient = -np.inf
    for iteration in range(1, _MAX_ITERATIONS + 1):
        u = op @ v
        new = float(v @ u)
        if abs(new - quotient) < tol:
            return new, iteration
        quotient = new
        norm = np.linalg.norm(u)
        if norm == 0.0:  # zero operator (xi = 0)
            return 0.0, iteration
        v = u / norm
    raise NumericError(
        f"power iteration did not converge to {tol:.1e} within "
        f"{_MAX_ITERATIONS} iterations")


def power_iteration_lambda0(xi: float, grid_size: int = 2048,
                            tol: float = 1e-12) -> float:
    """Dominant Rayleigh quotient of the trapezoid-discretized operator.

    Converges from a constant-plus-noise start (guaranteed overlap with
    the even ground mode); the quotient sequence is nondecreasing, and
    the run errors out rather than return an unconverged value.
    """
    xi = _check_xi(xi)
    grid_size = int(grid_size)
    if grid_size < 128:
        raise ArgumentError(f"grid_size must be >= 128, got {grid_size}")
    tol = float(tol)
    if not tol >= 1e-12:
        raise ArgumentError(f"tol must be >= 1e-12, got {tol!r}")
    if xi == 0.0:
        return 0.0
    value, _ = _power_iteration(_trapezoid_operator(xi, grid_size), tol)
    return value


def _scan(op: np.ndarray, trials: int, seed: int) -> float:
    n = op.shape[0]
    kernel = np.full(5, 0.2)
    best = -np.inf
    for trial in range(trials):
        rng = np.random.default_rng([int(seed), trial])
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z = np.convolve(z, kernel, mode="same")
        quotient = float(np.real(np.conj(z) @ (op @ z)) / np.real(np.conj(z) @ z))
        best = max(best, quotient)
    return best


def random_state_scan(xi: float, trials: int, seed: int,
                      grid_size: int = 128) -> float:
    """Best Rayleigh quotient among ``trials`` rough random states.

    The default grid is deliberately coarse: smoothing five-point noise
    on a coarse grid leaves states with less high-frequency content, and
    those climb closer to the bound (at xi = 1, ten thousand trials top
    out near 0.20 on a 128-point grid versus 0.06 on a 512-point one).

    States follow the measurement-module ensemble (complex white noise
    through a 5-point moving average); trial t draws from a generator
    seeded by (seed, t), so the maximum is reproducible and independent
    of evaluation order.  Stays below the bound -- typically far below,
    since rough states spread their mass over many tiny eigenvalues.
    """
    xi = _check_xi(xi)
    trials = int(trials)
    if trials < 100:
        raise ArgumentError(f"trials must be >= 100, got {trials}")
    return _scan(_trapezoid_operator(xi, int(grid_size)), trials, seed)


@dataclass(frozen=True)
class OracleReport:
    """Both oracle routes at one xi, evaluated on the same grid."""

    xi: float
    power_iteration_lambda: float
    iterations: int
    random_scan_max: float
    trials: int
    seed: int


def oracle_report(xi: float, grid_size: int = 2048, tol: float = 1e-12,
                  trials: int = 200, seed: int = 0) -> OracleReport:
    """Run power iteration and the random scan on one shared operator."""
    xi = _check_xi(xi)
    grid_size = int(grid_size)
    if grid_size < 128:
        raise ArgumentError(f"grid_size must be >= 128, got {grid_size}")
    if xi == 0.0:
        raise ArgumentError("oracle_report needs xi > 0")
    trials = int(trials)
    if trials < 100:
        raise ArgumentError(f"trials must be >= 100, got {trials}")
    op = _trapezoid_operator(xi, grid_size)
    lam, iterations = _power_iteration(op, float(tol))
    best = _scan(op, trials, seed)
    return OracleReport(xi=xi, power_iteration_lambda=lam, iterations=iterations,
                        random_scan_max=best, trials=trials, seed=int(seed))
