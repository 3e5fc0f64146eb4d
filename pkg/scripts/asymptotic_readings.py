#!/usr/bin/env python3
"""Compare the two candidate readings of the large-xi correction term.

The gap 1 - lambda0(xi) behaves like pi*sqrt(8*xi)*exp(-pi*xi) times a
correction factor.  Two readings of that factor are on the table:

    A:  1 - (3*pi/64) / xi      (correction decays)
    B:  1 - (3*pi/64) * xi      (correction grows)

Printing both against the eigensolver settles it: reading A's relative
error shrinks as xi grows, reading B's explodes (and its factor goes
negative past xi = 64/(3*pi) ~ 6.8).  The package adopts reading A.
"""
import math

from sincbound.spectrum import lambda0

C1 = 3.0 * math.pi / 64.0


def main() -> None:
    print(f"{'xi':>4} {'true gap':>12} {'leading':>12} "
          f"{'read A':>12} {'read B':>12} {'errA':>8} {'errB':>8}")
    for xi in (2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0):
        true_gap = 1.0 - lambda0(xi)
        leading = math.pi * math.sqrt(8.0 * xi) * math.exp(-math.pi * xi)
        read_a = leading * (1.0 - C1 / xi)
        read_b = leading * (1.0 - C1 * xi)
        err_a = abs(read_a - true_gap) / true_gap
        err_b = abs(read_b - true_gap) / true_gap
        print(f"{xi:>4.1f} {true_gap:>12.4e} {leading:>12.4e} "
              f"{read_a:>12.4e} {read_b:>12.4e} {err_a:>8.2%} {err_b:>8.2%}")


if __name__ == "__main__":
    main()
