"""Conditional probabilities of successive position-momentum selections.

A normalized (or not: only ratios enter) wave function is given on a
uniform grid as a ``StateGrid``.  A position window A_q and a momentum
window B_k are ``Window`` objects, and the central quantity is

    P = || E_p(B_k) E_x(A_q) psi ||^2 / || E_x(A_q) psi ||^2,

the probability that a momentum selection in B_k succeeds immediately
after a position selection in A_q succeeded.  Two independent routes
compute it:

* ``conditional_probability`` -- explicit momentum quadrature of the
  Fourier amplitude of the window-restricted state;
* ``rayleigh_quotient`` -- the quadratic form of the convolution kernel

      g_k(u) = exp(i*k*u/hbar) * sin(dk*u/(2*hbar)) / (pi*u)

  on the same position nodes, no momentum grid at all.

Both are bounded by lambda0(dk*dq/h), and the bound is attained by the
top eigenfunction of the sinc kernel (``optimal_state``).

Between grid points a state means its quintic-spline interpolant; all
position quadratures are composite Gauss-Legendre rules whose cells
follow the spline knots, so they are exact (to roundoff) for the
interpolant even when the samples are rough noise.  Momentum
quadratures are panelled Gauss-Legendre rules sized by the total phase
swept across the window.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid
from scipy.interpolate import InterpolatedUnivariateSpline

from .errors import ArgumentError, PreconditionError
from .specfun import gauss_legendre, sine_integral
from .spectrum import eigenfunction_interpolate, suggested_order, top_eigenvalues

__all__ = [
    "PrecisionPair",
    "StateGrid",
    "Window",
    "conditional_probability",
    "gaussian_state",
    "invariance_check",
    "optimal_state",
    "plane_wave_state",
    "random_state",
    "rayleigh_quotient",
    "reversed_order_probability",
    "slit_momentum_density",
    "slit_probability",
]

TWO_PI = 2.0 * math.pi
_ZERO_SELECTION = 1e-12


def _finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ArgumentError(f"{name} must be finite, got {value!r}")
    return value


def _positive(value: float, name: str) -> float:
    value = _finite(value, name)
    if value <= 0.0:
        raise ArgumentError(f"{name} must be > 0, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrecisionPair:
    """Widths of the two selection windows plus the Planck constant in use.

    The package works in whatever units the caller picks; ``h`` defaults
    to 2*pi, i.e. hbar = 1.  The only dimensionless combination,
    xi = dk*dq/h, is what every bound depends on.
    """

    dq: float
    dk: float
    h: float = TWO_PI

    def __post_init__(self):
        _positive(self.dq, "dq")
        _positive(self.dk, "dk")
        _positive(self.h, "h")

    def xi(self) -> float:
        return self.dk * self.dq / self.h

    @property
    def hbar(self) -> float:
        return self.h / TWO_PI


@dataclass(frozen=True)
class Window:
    """A detection interval given by center and (positive) width.

    Endpoint membership is irrelevant to every integral computed here,
    so the window is treated as the closed interval [lo, hi].
    """

    center: float
    width: float

    def __post_init__(self):
        _finite(self.center, "center")
        _positive(self.width, "width")

    @property
    def lo(self) -> float:
        return self.center - 0.5 * self.width

    @property
    def hi(self) -> float:
        return self.center + 0.5 * self.width

    def shifted(self, delta: float) -> "Window":
        return Window(self.center + float(delta), self.width)


@dataclass(eq=False)
class StateGrid:
    """Complex samples of a wave function on a uniform closed grid.

    ``samples[i]`` is the value at x_min + i*dx with
    dx = (x_max - x_min)/(len - 1).  At least 16 samples are required;
    the continuum state used by all probability routines is the
    quintic-spline interpolant of the samples (real and imaginary parts
    separately).
    """

    x_min: float
    x_max: float
    samples: np.ndarray
    _spline: "_SplineState | None" = field(default=None, init=False, repr=False)

    def __post_init__(self):
        _finite(self.x_min, "x_min")
        _finite(self.x_max, "x_max")
        if not self.x_min < self.x_max:
            raise ArgumentError(
                f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")
        self.samples = np.ascontiguousarray(self.samples, dtype=complex)
        if self.samples.ndim != 1 or self.samples.size < 16:
            raise ArgumentError("need a 1-d array of at least 16 samples")
        if not np.all(np.isfinite(self.samples.view(float))):
            raise ArgumentError("samples must be finite")
        if self.trapezoid_norm() <= 0.0:
            raise ArgumentError("state has zero norm")

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.samples.size)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.samples.size - 1)

    def trapezoid_norm(self) -> float:
        return math.sqrt(float(trapezoid(np.abs(self.samples) ** 2, dx=self.dx)))

    def evaluator(self) -> "_SplineState":
        if self._spline is None:
            self._spline = _SplineState(self.grid, self.samples)
        return self._spline


# ---------------------------------------------------------------------------
# Continuum view of a state
# ---------------------------------------------------------------------------

class _SplineState:
    """Quintic-spline interpolant of grid samples; zero outside the grid."""

    def __init__(self, x: np.ndarray, samples: np.ndarray):
        self.support = (float(x[0]), float(x[-1]))
        self.breakpoints = x
        self._re = InterpolatedUnivariateSpline(x, samples.real, k=5, ext="zeros")
        self._im = InterpolatedUnivariateSpline(x, samples.imag, k=5, ext="zeros")

    def __call__(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        return self._re(pts) + 1j * self._im(pts)


class _TransformedState:
    """exp(i*mod*x) * base(x - shift): exact translation plus modulation."""

    def __init__(self, base, shift: float, mod: float):
        self._base = base
        self._shift = shift
        self._mod = mod
        a, b = base.support
        self.support = (a + shift, b + shift)
        self.breakpoints = base.breakpoints + shift

    def __call__(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        return self._base(pts - self._shift) * np.exp(1j * self._mod * pts)


# ---------------------------------------------------------------------------
# Quadrature machinery
# ---------------------------------------------------------------------------

def _cell_rule(lo: float, hi: float, breakpoints: np.ndarray, freq: float):
    """Composite Gauss-Legendre nodes/weights on [lo, hi] with cells that
    follow ``breakpoints``; ``freq`` (radians per unit length) is the
    fastest oscillation the integrand carries, and sets points per cell."""
    inner = breakpoints[(breakpoints > lo) & (breakpoints < hi)]
    edges = np.concatenate(([lo], inner, [hi]))
    widths = np.diff(edges)
    phases = freq * widths
    # Subdivide any cell swept by more than ~20 radians.
    nsub = np.maximum(1, np.ceil(phases / 20.0).astype(int))
    pts = 10 + np.minimum(22, np.ceil(0.8 * phases / nsub).astype(int))
    nodes_out = []
    weights_out = []
    # Group identical (nsub, pts) cells so the common uniform-grid case
    # is a single broadcast instead of a python loop per cell.
    key = nsub * 1000 + pts
    for k in np.unique(key):
        sel = key == k
        ns, p = int(nsub[sel][0]), int(pts[sel][0])
        sub_edges = (edges[:-1][sel][:, None]
                     + widths[sel][:, None] * np.linspace(0.0, 1.0, ns + 1)[None, :])
        a = sub_edges[:, :-1].ravel()
        b = sub_edges[:, 1:].ravel()
        rule = gauss_legendre(p)
        half = 0.5 * (b - a)
        mid = 0.5 * (a + b)
        nodes_out.append((mid[:, None] + half[:, None] * rule.nodes[None, :]).ravel())
        weights_out.append((half[:, None] * rule.weights[None, :]).ravel())
    nodes = np.concatenate(nodes_out)
    order = np.argsort(nodes, kind="stable")
    return nodes[order], np.concatenate(weights_out)[order]


def _panel_rule(lo: float, hi: float, phase: float):
    """Gauss-Legendre panels on [lo, hi] sized to resolve ``phase`` radians
    of total oscillation with a comfortable margin."""
    panels = max(1, int(math.ceil(phase / 600.0)))
    per = min(2048, 64 + int(math.ceil(0.75 * phase / panels)))
    edges = np.linspace(lo, hi, panels + 1)
    rule = gauss_legendre(per)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * rule.nodes[None, :]).ravel()
    weights = (half[:, None] * rule.weights[None, :]).ravel()
    return nodes, weights


def _fourier(x: np.ndarray, coeff: np.ndarray, p: np.ndarray, hbar: float,
             sign: float) -> np.ndarray:
    """(1/sqrt(2*pi*hbar)) * sum_i coeff_i * exp(sign*i*p*x_i/hbar), chunked
    so the phase matrix never exceeds ~8M entries."""
    out = np.empty(p.size, dtype=complex)
    step = max(1, 8_000_000 // max(1, x.size))
    for start in range(0, p.size, step):
        pc = p[start:start + step]
        out[start:start + step] = np.exp((sign * 1j / hbar) * pc[:, None] * x[None, :]) @ coeff
    return out / math.sqrt(TWO_PI * hbar)


def _contained(window: Window, support: tuple[float, float], name: str):
    a, b = support
    tol = 1e-9 * max(1.0, abs(a), abs(b))
    if window.lo < a - tol or window.hi > b + tol:
        raise ArgumentError(
            f"{name} [{window.lo}, {window.hi}] is not inside the state grid "
            f"[{a}, {b}]")


def _hbar(h: float) -> float:
    return _positive(h, "h") / TWO_PI


# ---------------------------------------------------------------------------
# The two probability routes
# ---------------------------------------------------------------------------

def _position_nodes(ev, window_q: Window, window_k: Window, hbar: float):
    _contained(window_q, ev.support, "window_q")
    lo = max(window_q.lo, ev.support[0])
    hi = min(window_q.hi, ev.support[1])
    pmax = max(abs(window_k.lo), abs(window_k.hi))
    x, xw = _cell_rule(lo, hi, ev.breakpoints, pmax / hbar)
    psi = ev(x)
    den = float(np.sum(xw * np.abs(psi) ** 2))
    if den <= _ZERO_SELECTION:
        raise PreconditionError(
            "position selection has ~zero probability on this state; "
            "the conditional probability is undefined")
    return x, xw, psi, den


def _conditional_impl(ev, window_q: Window, window_k: Window, hbar: float) -> float:
    x, xw, psi, den = _position_nodes(ev, window_q, window_k, hbar)
    span = min(window_q.hi, ev.support[1]) - max(window_q.lo, ev.support[0])
    p, pw = _panel_rule(window_k.lo, window_k.hi, window_k.width * span / hbar)
    amp = _fourier(x, xw * psi, p, hbar, sign=-1.0)
    num = float(np.sum(pw * np.abs(amp) ** 2))
    return min(max(num / den, 0.0), 1.0)


def conditional_probability(state: StateGrid, window_q: Window,
                            window_k: Window, h: float = TWO_PI) -> float:
    """P(momentum in window_k | position found in window_q) for ``state``.

    Route one: restrict the state to the position window, Fourier
    transform it at momentum quadrature nodes spanning window_k, and
    integrate the squared amplitude.  The result can never exceed
    lambda0(xi) at xi = window_k.width * window_q.width / h (plus
    quadrature slack well under 1e-6).

    Raises ArgumentError when window_q sticks out of the grid, and
    PreconditionError when the state has ~zero mass inside window_q.
    """
    hbar = _hbar(h)
    return _conditional_impl(state.evaluator(), window_q, window_k, hbar)


def rayleigh_quotient(state: StateGrid, window_q: Window,
                      window_k: Window, h: float = TWO_PI) -> float:
    """Route two: <psi, G psi>_q / <psi, psi>_q with the convolution kernel
    g_k on the *same* position nodes route one uses; no momentum grid.

    Agrees with ``conditional_probability`` to the momentum quadrature's
    accuracy (~1e-10), which is the cross-check that both formulations
    of the successive-measurement probability are implemented honestly.
    """
    hbar = _hbar(h)
    ev = state.evaluator()
    x, xw, psi, den = _position_nodes(ev, window_q, window_k, hbar)
    weighted = xw * psi
    acc = 0.0
    step = max(1, 4_000_000 // max(1, x.size))
    for start in range(0, x.size, step):
        u = x[start:start + step, None] - x[None, :]
        safe = np.where(u == 0.0, 1.0, u)
        g = np.sin(0.5 * window_k.width / hbar * safe) / (math.pi * safe)
        g = np.where(u == 0.0, window_k.width / (TWO_PI * hbar), g)
        block = g * np.exp((1j * window_k.center / hbar) * u)
        acc += float(np.real(np.conj(weighted[start:start + step]) @ (block @ weighted)))
    return acc / den


def reversed_order_probability(state: StateGrid, window_k: Window,
                               window_q: Window, h: float = TWO_PI) -> float:
    """P(position in window_q | momentum found in window_k): the two
    selections applied in the opposite order.

    The state's momentum amplitude is computed on quadrature nodes
    covering window_k, restricted there, transformed back at position
    nodes covering window_q.  Subject to the same lambda0 bound with the
    roles of the windows exchanged (same xi).
    """
    hbar = _hbar(h)
    ev = state.evaluator()
    _contained(window_q, ev.support, "window_q")
    a, b = ev.support
    reach = max(abs(a), abs(b), abs(window_q.lo), abs(window_q.hi))
    p, pw = _panel_rule(window_k.lo, window_k.hi,
                        window_k.width * 2.0 * reach / hbar)
    pmax = max(abs(window_k.lo), abs(window_k.hi))
    x_full, w_full = _cell_rule(a, b, ev.breakpoints, pmax / hbar)
    amp = _fourier(x_full, w_full * ev(x_full), p, hbar, sign=-1.0)
    den = float(np.sum(pw * np.abs(amp) ** 2))
    if den <= _ZERO_SELECTION:
        raise PreconditionError(
            "momentum selection has ~zero probability on this state; "
            "the conditional probability is undefined")
    xq, wq_ = _cell_rule(max(window_q.lo, a), min(window_q.hi, b),
                         ev.breakpoints, pmax / hbar)
    back = _fourier(p, pw * amp, xq, hbar, sign=1.0)
    num = float(np.sum(wq_ * np.abs(back) ** 2))
    return min(max(num / den, 0.0), 1.0)


def invariance_check(state: StateGrid, window_q: Window, window_k: Window,
                     shift_q: float, shift_k: float,
                     h: float = TWO_PI) -> tuple[float, float]:
    """Probability before and after rigidly moving state and windows.

    The second entry is computed for the translated-and-modulated state
    exp(i*shift_k*x/hbar) * psi(x - shift_q) with both windows shifted
    along.  The two numbers are equal in exact arithmetic (phase-space
    translations commute with the selection pair), so their difference
    measures quadrature honesty; expect agreement to ~1e-9.
    """
    shift_q = _finite(shift_q, "shift_q")
    shift_k = _finite(shift_k, "shift_k")
    hbar = _hbar(h)
    first = _conditional_impl(state.evaluator(), window_q, window_k, hbar)
    moved = _TransformedState(state.evaluator(), shift_q, shift_k / hbar)
    second = _conditional_impl(moved, window_q.shifted(shift_q),
                               window_k.shifted(shift_k), hbar)
    return first, second


# ---------------------------------------------------------------------------
# Single-slit closed forms
# ---------------------------------------------------------------------------

def slit_momentum_density(p: float, dq: float, h: float = TWO_PI) -> float:
    """Momentum density right after a sharp position selection of width dq
    acting on a locally flat (plane-wave-like) state:

        |phi(p)|^2 = (2*hbar/(pi*dq)) * sin(dq*p/(2*hbar))^2 / p^2,

    normalized to unit total integral, with value dq/h at p = 0.
    """
    p = _finite(p, "p")
    dq = _positive(dq, "dq")
    hbar = _hbar(h)
    if p == 0.0:
        return dq / (TWO_PI * hbar)
    s = math.sin(0.5 * dq * p / hbar)
    return 2.0 * hbar / (math.pi * dq) * s * s / (p * p)


def slit_probability(xi: float) -> float:
    """Probability that the momentum selection succeeds on the slit state:

        P(xi) = (2/pi) * (Si(pi*xi) - (2/pi) * sin(pi*xi/2)^2 / xi),

    i.e. the integral of ``slit_momentum_density`` over a centered
    momentum window with dk*dq/h = xi.  Strictly below lambda0(xi).
    """
    xi = float(xi)
    if not math.isfinite(xi) or xi < 0.0:
        raise ArgumentError(f"xi must be finite and >= 0, got {xi!r}")
    if xi == 0.0:
        return 0.0
    s = math.sin(0.5 * math.pi * xi)
    return 2.0 / math.pi * (sine_integral(math.pi * xi) - 2.0 / math.pi * s * s / xi)


# ---------------------------------------------------------------------------
# State factories
# ---------------------------------------------------------------------------

def gaussian_state(sigma_x: float, extent: float | None = None,
                   samples: int = 1025) -> StateGrid:
    """Centered Gaussian wave packet with position spread sigma_x.

    ``extent`` is the full grid length (default 16*sigma_x) and must be
    at least 10*sigma_x so the clipped tails are negligible; the result
    is trapezoid-normalized to 1 on its grid.
    """
    sigma_x = _positive(sigma_x, "sigma_x")
    if extent is None:
        extent = 16.0 * sigma_x
    extent = _positive(extent, "extent")
    if extent < 10.0 * sigma_x:
        raise ArgumentError(
            f"extent {extent} clips the state: need at least 10*sigma_x "
            f"= {10 * sigma_x}")
    samples = int(samples)
    if samples < 16:
        raise ArgumentError("need at least 16 samples")
    x = np.linspace(-0.5 * extent, 0.5 * extent, samples)
    psi = (TWO_PI * sigma_x * sigma_x) ** -0.25 * np.exp(-x * x / (4.0 * sigma_x * sigma_x))
    state = StateGrid(-0.5 * extent, 0.5 * extent, psi.astype(complex))
    state.samples /= state.trapezoid_norm()
    return state


def plane_wave_state(extent: float, samples: int = 4097) -> StateGrid:
    """Constant-amplitude segment of full width ``extent`` (zero momentum).

    Models the state entering a slit much narrower than ``extent``: once
    the position window is selected, the conditional probabilities no
    longer depend on ``extent`` at all.
    """
    extent = _positive(extent, "extent")
    vals = np.full(int(samples), 1.0 / math.sqrt(extent), dtype=complex)
    return StateGrid(-0.5 * extent, 0.5 * extent, vals)


def random_state(x_min: float, x_max: float, samples: int, seed) -> StateGrid:
    """Rough random state: iid standard-normal real/imaginary amplitudes
    per grid point, passed through a 5-point moving average so the
    interpolant is not pure sample noise.  Deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    n = int(samples)
    if n < 16:
        raise ArgumentError("need at least 16 samples")
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    kernel = np.full(5, 0.2)
    z = np.convolve(z, kernel, mode="same")
    return StateGrid(float(x_min), float(x_max), z)


def optimal_state(xi: float, dq: float | None = None, h: float = TWO_PI,
                  samples: int = 1001) -> tuple[StateGrid, PrecisionPair]:
    """The bound-attaining state for a given xi, plus its window widths.

    Samples the top eigenfunction of the sinc kernel on a uniform grid
    exactly filling the position window (width ``dq``, centered at 0;
    default dq = sqrt(xi*h) makes the two windows equally wide).  Feeding
    the state to ``conditional_probability`` with centered windows of
    the returned widths yields lambda0(xi) up to interpolation slack.
    """
    xi = float(xi)
    if not math.isfinite(xi) or xi <= 0.0:
        raise ArgumentError(f"xi must be finite and > 0, got {xi!r}")
    h = _positive(h, "h")
    if dq is None:
        dq = math.sqrt(xi * h)
    dq = _positive(dq, "dq")
    samples = int(samples)
    if samples < 64:
        raise ArgumentError("need at least 64 samples for a faithful profile")
    spectral = top_eigenvalues(xi, suggested_order(xi), 1)
    u = np.linspace(-1.0, 1.0, samples)
    profile = np.asarray(eigenfunction_interpolate(spectral, 0, u), dtype=complex)
    state = StateGrid(-0.5 * dq, 0.5 * dq, profile)
    state.samples /= state.trapezoid_norm()
    return state, PrecisionPair(dq=dq, dk=xi * h / dq, h=h)
