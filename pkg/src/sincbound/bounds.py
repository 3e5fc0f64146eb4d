"""Closed-form companions to lambda0: bounds, asymptotics, envelopes.

None of these solve the eigenproblem; they are cheap analytic curves
that bracket or approximate ``lambda0(xi)`` and are useful both as
sanity rails and as the auxiliary columns of the survey table emitted
by the CLI.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArgumentError
from .specfun import cin, erf, sine_integral
from .spectrum import lambda0

__all__ = [
    "BoundReport",
    "TailResult",
    "bound_report",
    "erf_envelope",
    "hs_bound",
    "hs_unit_crossing",
    "large_xi_asymptotic",
    "small_xi_expansion",
    "tail_integral",
    "time_delay_xi",
    "trace_bound",
]

# Coefficient of the first correction in the large-xi expansion.  The
# correction enters as (3*pi/64)/xi: checked against the eigensolver at
# xi in {2, 3, 4}, this reading shrinks the relative error (15% -> 7%
# -> 4%) while the alternative xi-proportional reading makes it grow.
_LARGE_XI_C1 = 3.0 * math.pi / 64.0


def _check_xi(xi: float) -> float:
    xi = float(xi)
    if not math.isfinite(xi) or xi < 0.0:
        raise ArgumentError(f"xi must be finite and >= 0, got {xi!r}")
    return xi


def trace_bound(xi: float) -> float:
    """Total spectral mass of the kernel operator: exactly xi."""
    return _check_xi(xi)


def hs_bound(xi: float) -> float:
    """Hilbert-Schmidt norm of the kernel operator on (-1, 1).

    hs(xi) = (1/pi) * sqrt(2*pi*xi*Si(2*pi*xi) - Cin(2*pi*xi) + cos(2*pi*xi) - 1)

    Dominates lambda0 (indeed the l2 norm of the whole spectrum) but is
    only informative while it stays below 1, i.e. for xi <= ~1.38.
    """
    xi = _check_xi(xi)
    if xi == 0.0:
        return 0.0
    s = 2.0 * math.pi * xi
    val = (s * sine_integral(s) - cin(s) + math.cos(s) - 1.0) / (math.pi * math.pi)
    return math.sqrt(max(val, 0.0))


def small_xi_expansion(xi: float) -> float:
    """lambda0 to fourth order at small xi: xi * (1 - (pi*xi/6)^2).

    Remainder is O(xi^5); accepted for xi <= 0.5 only.
    """
    xi = _check_xi(xi)
    if xi > 0.5:
        raise ArgumentError(
            f"small-xi expansion is only honest for xi <= 0.5, got {xi}")
    t = math.pi * xi / 6.0
    return xi * (1.0 - t * t)


def large_xi_asymptotic(xi: float) -> float:
    """lambda0 approached from above 1: 1 - pi*sqrt(8*xi)*e^(-pi*xi)*(1 - c1/xi).

    Accepted for xi >= 2; the leading term is good to ~25% there and a
    few percent by xi = 4, and the c1/xi correction improves it further.
    """
    xi = _check_xi(xi)
    if xi < 2.0:
        raise ArgumentError(
            f"large-xi asymptotic is only honest for xi >= 2, got {xi}")
    gap = math.pi * math.sqrt(8.0 * xi) * math.exp(-math.pi * xi)
    return 1.0 - gap * (1.0 - _LARGE_XI_C1 / xi)


def erf_envelope(xi: float) -> float:
    """Conjectured upper envelope erf(sqrt(pi)/2 * xi) for lambda0.

    Numerically it dominates lambda0 everywhere, with worst-case slack
    just under 0.01 around xi ~ 1.48.
    """
    xi = _check_xi(xi)
    return erf(math.sqrt(math.pi) / 2.0 * xi)


def time_delay_xi(mass: float, delay: float, dq: float, dq_prime: float,
                  h: float) -> float:
    """Effective xi for two position windows separated by a free flight.

    A particle of ``mass`` selected in a window of width ``dq`` and,
    after time ``delay``, in one of width ``dq_prime`` obeys the same
    bound as a position-momentum pair at xi = (mass/delay)*dq*dq_prime/h.
    """
    vals = {"mass": mass, "delay": delay, "dq": dq, "dq_prime": dq_prime, "h": h}
    for name, v in vals.items():
        v = float(v)
        if not math.isfinite(v) or v <= 0.0:
            raise ArgumentError(f"{name} must be finite and > 0, got {v!r}")
    return (float(mass) / float(delay)) * float(dq) * float(dq_prime) / float(h)


def hs_unit_crossing() -> float:
    """The xi at which the Hilbert-Schmidt bound stops being informative
    (hs_bound = 1), located by root bracketing to 1e-12."""
    from scipy.optimize import brentq

    return float(brentq(lambda x: hs_bound(x) - 1.0, 1.0, 2.0, xtol=1e-12))


@dataclass(frozen=True)
class TailResult:
    """Value of integral_0^inf (1 - lambda0) dxi with an error estimate."""

    value: float
    error_estimate: float
    cutoff: float
    grid_step: float


def _asymptotic_tail_area(cutoff: float) -> float:
    # integral_cutoff^inf pi*sqrt(8*xi)*exp(-pi*xi)*(1 - c1/xi) dxi,
    # via incomplete-gamma identities reduced to erfc.
    z = math.pi * cutoff
    rz = math.sqrt(z)
    i_half = (0.5 * math.sqrt(math.pi) * math.erfc(rz) + rz * math.exp(-z)) / math.pi ** 1.5
    i_minus_half = math.erfc(rz)
    return math.pi * math.sqrt(8.0) * (i_half - _LARGE_XI_C1 * i_minus_half)


def tail_integral(upper_cutoff: float = 8.0, grid_step: float = 0.02) -> TailResult:
    """integral_0^inf (1 - lambda0(xi)) dxi by Simpson + analytic closure.

    The eigensolver supplies 1 - lambda0 on [0, upper_cutoff] (composite
    Simpson, step <= grid_step); beyond the cutoff the integrand is
    replaced by its large-xi form, contributing < 1e-9 for the default
    cutoff 8.  The error estimate combines Richardson comparison with a
    conservative 5% allowance on the analytic closure.
    """
    upper_cutoff = float(upper_cutoff)
    grid_step = float(grid_step)
    if not math.isfinite(upper_cutoff) or upper_cutoff < 6.0:
        raise ArgumentError(f"upper_cutoff must be >= 6, got {upper_cutoff!r}")
    if not math.isfinite(grid_step) or not 0.0 < grid_step <= 0.05:
        raise ArgumentError(f"grid_step must be in (0, 0.05], got {grid_step!r}")
    n = int(math.ceil(upper_cutoff / grid_step))
    n += n % 2
    if n % 4:  # keep the half-resolution comparison grid Simpson-able
        n += 2
    h = upper_cutoff / n
    ys = [1.0 - lambda0(i * h) for i in range(n + 1)]
    def simpson(vals, step):
        return step / 3.0 * (vals[0] + vals[-1]
                             + 4.0 * sum(vals[1:-1:2]) + 2.0 * sum(vals[2:-1:2]))
    fine = simpson(ys, h)
    coarse = simpson(ys[::2], 2.0 * h)
    tail = _asymptotic_tail_area(upper_cutoff)
    err = abs(fine - coarse) / 15.0 + 0.05 * tail + 1e-10
    return TailResult(value=fine + tail, error_estimate=err,
                      cutoff=upper_cutoff, grid_step=h)


@dataclass(frozen=True)
class BoundReport:
    """All analytic companions of lambda0 at one xi.

    Raw (unclamped) values are stored; expansion fields are None outside
    their windows of validity.  Anything meant for human eyes should go
    through ``clamped`` first, which caps the bounds at the trivial 1.
    """

    xi: float
    lambda0: float
    trace_bound: float
    hs_bound: float
    erf_envelope: float
    small_xi: float | None
    large_xi: float | None

    def clamped(self, value: float) -> float:
        return min(1.0, value)


def bound_report(xi: float) -> BoundReport:
    """Evaluate lambda0 and every applicable bound/approximation at xi."""
    xi = _check_xi(xi)
    return BoundReport(
        xi=xi,
        lambda0=lambda0(xi),
        trace_bound=trace_bound(xi),
        hs_bound=hs_bound(xi),
        erf_envelope=erf_envelope(xi),
        small_xi=small_xi_expansion(xi) if xi <= 0.5 else None,
        large_xi=large_xi_asymptotic(xi) if xi >= 2.0 else None,
    )
