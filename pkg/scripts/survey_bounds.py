#!/usr/bin/env python3
"""One-shot survey of the scalar landmarks of the bound family.

Prints the area between 1 and the bound curve, the point where the
Hilbert-Schmidt bound stops saying anything, and the worst slack of the
erf envelope -- the three numbers that characterize lambda0 globally.
"""
import time

import numpy as np

from sincbound.bounds import erf_envelope, hs_unit_crossing, tail_integral
from sincbound.spectrum import lambda0


def main() -> None:
    start = time.perf_counter()
    tail = tail_integral()
    print(f"integral_0^inf (1 - lambda0) dxi = {tail.value:.10f}"
          f"  (error estimate {tail.error_estimate:.1e},"
          f" cutoff {tail.cutoff}, step {tail.grid_step})")

    crossing = hs_unit_crossing()
    print(f"hs_bound reaches 1 at xi = {crossing:.10f}")

    xis = np.arange(1, 501) * 0.01
    slack = np.array([erf_envelope(x) - lambda0(x) for x in xis])
    worst = int(np.argmax(slack))
    print(f"erf envelope worst slack = {slack[worst]:.6f} at xi = {xis[worst]:.2f}"
          f"  (envelope stays above lambda0: min slack {slack.min():.2e})")
    print(f"total {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
