"""Command-line front end.

Subcommands expose the library's headline quantities without writing a
line of Python: the bound itself (``lambda0``), the survey table behind
the possible/impossible-probability figure (``fig1``), conditional
probabilities of a state file (``prob``), the bound-attaining state
(``emit-optimal``), the time-delay calculator (``timedelay``), and the
independent brute-force check (``oracle``).

Exit codes: 0 success, 2 usage error (bad flags/domains), 3 numeric
error (an iteration failed to converge), 4 I/O error (unreadable or
unparsable files, unwritable output).

State files are JSON documents ``{"x_min": ..., "x_max": ...,
"samples": [[re, im], ...]}``; floats are serialized with full
round-trip precision, so save/load is lossless.
"""
from __future__ import annotations

import functools
import json
import math
import os
import sys
from dataclasses import dataclass, field

import click
import numpy as np

from . import bounds, measurement, oracle, spectrum
from .errors import ArgumentError, NumericError
from .measurement import StateGrid, Window

__all__ = ["OutputTable", "load_state", "main", "save_state"]

EXIT_NUMERIC = 3
EXIT_IO = 4


class StateFileError(ValueError):
    """A state file that parsed as JSON but has the wrong shape."""


# ---------------------------------------------------------------------------
# State files
# ---------------------------------------------------------------------------

def save_state(state: StateGrid, path: str) -> None:
    """Write a state grid as a JSON state file (lossless float round-trip)."""
    doc = {
        "x_min": state.x_min,
        "x_max": state.x_max,
        "samples": [[float(v.real), float(v.imag)] for v in state.samples],
    }
    with open(path, "w", newline="\n") as handle:
        json.dump(doc, handle)
        handle.write("\n")


def load_state(path: str) -> StateGrid:
    """Parse a JSON state file back into a StateGrid.

    Raises json.JSONDecodeError (with line/column info) on malformed
    documents and StateFileError on well-formed documents with missing
    or ill-typed fields; the CLI maps both onto exit code 4.
    """
    with open(path) as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise StateFileError(f"{path}: state file must be a JSON object")
    for key in ("x_min", "x_max", "samples"):
        if key not in doc:
            raise StateFileError(f"{path}: state file is missing key {key!r}")
    pairs = doc["samples"]
    if (not isinstance(pairs, list)
            or any(not isinstance(p, list) or len(p) != 2 for p in pairs)):
        raise StateFileError(f"{path}: 'samples' must be a list of [re, im] pairs")
    try:
        samples = np.array([complex(float(re), float(im)) for re, im in pairs])
        return StateGrid(float(doc["x_min"]), float(doc["x_max"]), samples)
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass
class OutputTable:
    """Ordered named columns of floats, rendered as CSV or JSON.

    CSV rendering uses ``repr`` per float (shortest lossless form), a
    header row, comma separators, and LF line endings, so
    ``OutputTable.from_csv(table.to_csv())`` reproduces the table
    exactly, bit for bit.
    """

    columns: dict[str, list[float]] = field(default_factory=dict)

    def __post_init__(self):
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) > 1:
            raise ArgumentError(f"columns differ in length: {lengths}")

    def to_csv(self) -> str:
        header = ",".join(self.columns)
        rows = zip(*self.columns.values())
        lines = [header] + [",".join(repr(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.columns) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "OutputTable":
        lines = [line for line in text.split("\n") if line]
        names = lines[0].split(",")
        cols: dict[str, list[float]] = {name: [] for name in names}
        for line in lines[1:]:
            for name, cell in zip(names, line.split(",")):
                cols[name].append(float(cell))
        return cls(columns=cols)

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


# ---------------------------------------------------------------------------
# Command plumbing
# ---------------------------------------------------------------------------

def _cli_errors(func):
    """Map library exceptions onto the documented exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ArgumentError as exc:
            raise click.UsageError(str(exc))  # exit code 2
        except NumericError as exc:
            click.echo(f"numeric error: {exc}", err=True)
            sys.exit(EXIT_NUMERIC)
        except json.JSONDecodeError as exc:
            click.echo(f"i/o error: {exc}", err=True)  # includes line/column
            sys.exit(EXIT_IO)
        except StateFileError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO)
        except BrokenPipeError:
            # The consumer hung up (e.g. piping into head); park stdout
            # on devnull so the interpreter's exit flush stays quiet.
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
            sys.exit(EXIT_IO)
        except OSError as exc:
            click.echo(f"i/o error: {exc}", err=True)
            sys.exit(EXIT_IO)

    return wrapper


@click.group()
def main():
    """Least upper bounds for successive position-momentum selections."""


@main.command("lambda0")
@click.option("--xi", type=float, required=True, help="Window product dk*dq/h.")
@click.option("--order", type=int, default=None,
              help="Quadrature order (default: automatic).")
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="Eigenvalue stability target under order doubling.")
@_cli_errors
def cmd_lambda0(xi: float, order: int | None, tol: float):
    """Print lambda0(xi) with the leading eigenvalues and diagnostics."""
    if xi == 0.0:
        click.echo("lambda0(0) = 0")
        return
    if order is None:
        order = spectrum.suggested_order(xi)
    result = spectrum.top_eigenvalues(xi, order, min(5, order), tol=tol)
    click.echo(f"lambda0({xi:g}) = {result.eigenvalues[0]:.12f}")
    listing = ", ".join(f"{v:.9f}" for v in result.eigenvalues)
    click.echo(f"leading eigenvalues: [{listing}]")
    click.echo(f"quadrature order {result.order}; doubling moved eigenvalues "
               f"by {result.convergence_delta:.2e}")


@main.command("fig1")
@click.option("--xi-max", type=float, default=4.0, show_default=True)
@click.option("--step", type=float, default=0.02, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default="-",
              help="Output file (default: stdout).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@_cli_errors
def cmd_fig1(xi_max: float, step: float, output: str, fmt: str):
    """Write the survey table: bound, slit curve, and analytic companions.

    Columns: xi, lambda0, slit_probability, trace_bound, hs_bound,
    erf_envelope, on the grid xi = step, 2*step, ..., xi_max.
    """
    if not (math.isfinite(step) and step > 0.0):
        raise ArgumentError(f"step must be > 0, got {step!r}")
    if not (math.isfinite(xi_max) and 0.0 <= xi_max <= 10.0):
        raise ArgumentError(f"xi-max must be in [0, 10], got {xi_max!r}")
    xis = [k * step for k in range(1, int(xi_max / step + 1e-9) + 1)]
    table = OutputTable(columns={
        "xi": xis,
        "lambda0": [spectrum.lambda0(x) for x in xis],
        "slit_probability": [measurement.slit_probability(x) for x in xis],
        "trace_bound": [bounds.trace_bound(x) for x in xis],
        "hs_bound": [bounds.hs_bound(x) for x in xis],
        "erf_envelope": [bounds.erf_envelope(x) for x in xis],
    })
    text = table.render(fmt)
    if output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w", newline="\n") as handle:
            handle.write(text)


@main.command("prob")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--dq", type=float, required=True, help="Position window width.")
@click.option("--dk", type=float, required=True, help="Momentum window width.")
@click.option("--q", type=float, default=0.0, show_default=True,
              help="Position window center.")
@click.option("--k", type=float, default=0.0, show_default=True,
              help="Momentum window center.")
@click.option("--h", type=float, default=measurement.TWO_PI,
              help="Planck constant (default 2*pi, i.e. hbar = 1).")
@click.option("--reversed", "reversed_order", is_flag=True,
              help="Select momentum first, then position.")
@_cli_errors
def cmd_prob(state_file: str, dq: float, dk: float, q: float, k: float,
             h: float, reversed_order: bool):
    """Conditional probability of the state in STATE_FILE, plus the bound."""
    state = load_state(state_file)
    pair = measurement.PrecisionPair(dq=dq, dk=dk, h=h)
    window_q = Window(q, dq)
    window_k = Window(k, dk)
    if reversed_order:
        value = measurement.reversed_order_probability(state, window_k, window_q, h)
        kind = "P(position | momentum first)"
    else:
        value = measurement.conditional_probability(state, window_q, window_k, h)
        kind = "P(momentum | position first)"
    xi = pair.xi()
    bound = spectrum.lambda0(xi)
    click.echo(f"{kind} = {value:.12f}")
    click.echo(f"xi = {xi:.12g}")
    click.echo(f"lambda0(xi) = {bound:.12f}")
    click.echo(f"margin below bound = {bound - value:.6e}")


@main.command("emit-optimal")
@click.option("--xi", type=float, required=True)
@click.option("--samples", type=int, default=1001, show_default=True)
@click.option("--dq", type=float, default=None,
              help="Position window width (default sqrt(xi*h)).")
@click.option("--h", type=float, default=measurement.TWO_PI,
              help="Planck constant (default 2*pi).")
@click.option("--output", type=click.Path(dir_okay=False), required=True)
@_cli_errors
def cmd_emit_optimal(xi: float, samples: int, dq: float | None, h: float,
                     output: str):
    """Write the bound-attaining state for XI as a state file.

    Prints the window flags that reproduce lambda0(xi) when the file is
    fed back through ``prob``.
    """
    state, pair = measurement.optimal_state(xi, dq=dq, h=h, samples=samples)
    save_state(state, output)
    click.echo(f"wrote {output} ({samples} samples on "
               f"[{state.x_min:.12g}, {state.x_max:.12g}])")
    click.echo(f"evaluate with: prob {output} --dq {pair.dq!r} --dk {pair.dk!r}"
               + (f" --h {pair.h!r}" if pair.h != measurement.TWO_PI else ""))


@main.command("timedelay")
@click.option("--mass", type=float, required=True, help="Particle mass.")
@click.option("--t", "delay", type=float, required=True,
              help="Time between the two position selections.")
@click.option("--dq", type=float, required=True, help="First window width.")
@click.option("--dq2", type=float, required=True, help="Second window width.")
@click.option("--h", type=float, default=measurement.TWO_PI,
              help="Planck constant (default 2*pi).")
@_cli_errors
def cmd_timedelay(mass: float, delay: float, dq: float, dq2: float, h: float):
    """Bound for two position selections separated by a free flight."""
    xi = bounds.time_delay_xi(mass, delay, dq, dq2, h)
    click.echo(f"xi_tilde = {xi:.12g}")
    click.echo(f"lambda0(xi_tilde) = {spectrum.lambda0(xi):.12f}")
    if xi < 0.1:
        click.echo("warning: xi_tilde << 1 -- the first selection's "
                   "back-action dominates; successive detections in both "
                   "windows are nearly excluded", err=True)


@main.command("oracle")
@click.option("--xi", type=float, required=True)
@click.option("--grid-size", type=int, default=2048, show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_cli_errors
def cmd_oracle(xi: float, grid_size: int, tol: float, trials: int, seed: int):
    """Brute-force check of the bound on a trapezoid grid (no Nystrom)."""
    report = oracle.oracle_report(xi, grid_size=grid_size, tol=tol,
                                  trials=trials, seed=seed)
    click.echo(f"power iteration: {report.power_iteration_lambda:.12f} "
               f"({report.iterations} iterations, grid {grid_size})")
    click.echo(f"random-state scan max: {report.random_scan_max:.12f} "
               f"({report.trials} trials, seed {report.seed})")
    click.echo(f"nystrom lambda0: {spectrum.lambda0(xi):.12f}")


if __name__ == "__main__":
    main()
