"""Self-contained special functions and Gauss-Legendre quadrature.

Everything downstream (kernel spectra, closed-form bounds, slit
probabilities) reduces to the sine integral Si, its cosine companion
Cin, the error function, and Legendre rules, so these are kept in one
dependency-free corner with tight accuracy targets:

* ``sine_integral`` / ``cin``: absolute error <= 1e-12 for |x| <= 100,
* ``erf``: <= 1e-14,
* ``gauss_legendre``: exact (1e-13) for polynomials of degree 2n-1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, NumericError

__all__ = [
    "QuadratureRule",
    "cin",
    "erf",
    "gauss_legendre",
    "sine_integral",
]

EULER_GAMMA = 0.57721566490153286060651209
_SERIES_SWITCH = 10.0  # |x| below: Maclaurin series; above: continued fraction
_MAX_ORDER = 4096


def _require_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ArgumentError(f"{name} must be finite, got {x!r}")
    return x


# ---------------------------------------------------------------------------
# Si and Cin
# ---------------------------------------------------------------------------

def _si_maclaurin(x: float) -> float:
    # Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    term = x
    total = x
    for k in range(1, 80):
        term *= -x * x / ((2 * k) * (2 * k + 1))
        contrib = term / (2 * k + 1)
        total += contrib
        if abs(contrib) < 1e-18:
            return total
    raise NumericError(f"Si series did not converge at x={x}")


def _cin_maclaurin(x: float) -> float:
    # Cin(x) = sum_{k>=1} (-1)^(k+1) x^(2k) / ((2k) (2k)!)
    term = x * x / 2.0
    total = term / 2.0
    for k in range(2, 80):
        term *= -x * x / ((2 * k - 1) * (2 * k))
        contrib = term / (2 * k)
        total += contrib
        if abs(contrib) < 1e-18:
            return total
    raise NumericError(f"Cin series did not converge at x={x}")


def _e1_imag_axis(x: float) -> complex:
    """E1(i*x) for x >= _SERIES_SWITCH via the modified Lentz continued
    fraction.  Satisfies E1(ix) = -Ci(x) + i*(Si(x) - pi/2)."""
    z = complex(0.0, x)
    b = z + 1.0
    tiny = 1e-290
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 400):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * complex(math.cos(x), -math.sin(x))
    raise NumericError(f"continued fraction for E1(ix) stalled at x={x}")


def sine_integral(x: float) -> float:
    """Si(x) = integral of sin(t)/t from 0 to x.  Odd in x."""
    x = _require_finite(x, "x")
    ax = abs(x)
    if ax <= _SERIES_SWITCH:
        val = _si_maclaurin(ax)
    else:
        val = 0.5 * math.pi + _e1_imag_axis(ax).imag
    return val if x >= 0 else -val


def cin(x: float) -> float:
    """Cin(x) = integral of (1 - cos t)/t from 0 to x.  Even in x."""
    x = _require_finite(x, "x")
    ax = abs(x)
    if ax == 0.0:
        return 0.0
    if ax <= _SERIES_SWITCH:
        return _cin_maclaurin(ax)
    # Cin(x) = gamma + ln(x) - Ci(x), and Ci(x) = -Re E1(ix)
    ci = -_e1_imag_axis(ax).real
    return EULER_GAMMA + math.log(ax) - ci


def erf(x: float) -> float:
    """Error function; thin wrapper that pins down odd symmetry exactly."""
    x = _require_finite(x, "x")
    val = math.erf(abs(x))
    return val if x >= 0 else -val


# ---------------------------------------------------------------------------
# Gauss-Legendre rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of an ``order``-point Gauss-Legendre rule on (-1, 1).

    Nodes are strictly increasing and symmetric about 0; weights are
    positive and sum to 2.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=256)
def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule computed by Newton iteration on P_n.

    Initial guesses are the Chebyshev-like angles
    cos(pi*(i + 3/4)/(n + 1/2)); each root is polished until the Newton
    step falls below 1e-15, which keeps the rule reliable up to order
    4096.  Results are cached, and the node/weight arrays are returned
    read-only so the cache cannot be corrupted in place.
    """
    if not isinstance(order, (int, np.integer)):
        raise ArgumentError(f"order must be an integer, got {order!r}")
    if not 1 <= order <= _MAX_ORDER:
        raise ArgumentError(f"order must be in [1, {_MAX_ORDER}], got {order}")
    n = int(order)
    i = np.arange(n)
    x = np.cos(math.pi * (i + 0.75) / (n + 0.5))  # descending initial guesses
    dpn = np.ones_like(x)
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dpn = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dpn
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise NumericError(f"Legendre root search failed to settle at order {n}")
    w = 2.0 / ((1.0 - x * x) * dpn * dpn)
    # Enforce the +/- pairing exactly, then flip to ascending order.
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    nodes = x[::-1].copy()
    weights = w[::-1].copy()
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return QuadratureRule(order=n, nodes=nodes, weights=weights)
