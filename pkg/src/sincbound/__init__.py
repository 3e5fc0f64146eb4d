"""Least upper bounds for successive position-momentum measurements.

The probability that a particle found in a position window of width dq
is subsequently found in a momentum window of width dk never exceeds
lambda0(xi), where xi = dq * dk / h.  This package computes lambda0 as
the top eigenvalue of a sinc-kernel integral operator, together with
analytic companions (trace and Hilbert-Schmidt bounds, small- and
large-xi expansions, an erf-shaped envelope), direct conditional
probabilities of concrete states, the single-slit special case, and an
independent brute-force oracle.

>>> import sincbound
>>> round(sincbound.lambda0(1.0), 6)
0.783369
"""
from .bounds import (
    BoundReport,
    TailResult,
    bound_report,
    erf_envelope,
    hs_bound,
    hs_unit_crossing,
    large_xi_asymptotic,
    small_xi_expansion,
    tail_integral,
    time_delay_xi,
    trace_bound,
)
from .errors import ArgumentError, NumericError, PreconditionError
from .measurement import (
    PrecisionPair,
    StateGrid,
    Window,
    conditional_probability,
    gaussian_state,
    invariance_check,
    optimal_state,
    plane_wave_state,
    random_state,
    rayleigh_quotient,
    reversed_order_probability,
    slit_momentum_density,
    slit_probability,
)
from .oracle import OracleReport, oracle_report, power_iteration_lambda0, random_state_scan
from .specfun import QuadratureRule, cin, erf, gauss_legendre, sine_integral
from .spectrum import (
    SpectralResult,
    build_operator,
    eigenfunction_interpolate,
    kernel_eval,
    lambda0,
    suggested_order,
    top_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BoundReport",
    "NumericError",
    "OracleReport",
    "PrecisionPair",
    "PreconditionError",
    "QuadratureRule",
    "SpectralResult",
    "StateGrid",
    "TailResult",
    "Window",
    "bound_report",
    "build_operator",
    "cin",
    "conditional_probability",
    "eigenfunction_interpolate",
    "erf",
    "erf_envelope",
    "gauss_legendre",
    "gaussian_state",
    "hs_bound",
    "hs_unit_crossing",
    "invariance_check",
    "kernel_eval",
    "lambda0",
    "large_xi_asymptotic",
    "optimal_state",
    "oracle_report",
    "plane_wave_state",
    "power_iteration_lambda0",
    "random_state",
    "random_state_scan",
    "rayleigh_quotient",
    "reversed_order_probability",
    "sine_integral",
    "slit_momentum_density",
    "slit_probability",
    "small_xi_expansion",
    "suggested_order",
    "tail_integral",
    "time_delay_xi",
    "top_eigenvalues",
    "trace_bound",
]
