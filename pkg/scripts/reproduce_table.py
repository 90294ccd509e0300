#!/usr/bin/env python3
"""Print the coprime factorization table for a rational, its minimal measure
tuples, and the piecewise envelope profile.

Usage: python scripts/reproduce_table.py [alpha] [T]
Defaults reproduce the 7/30 worked example (15 factorizations, 5 minimal
tuples, breakpoints at t = 1 and t ~ 1.3353).
"""

import math
import sys

sys.path.insert(0, "src")

from tmahler import (
    enumerate_representations,
    measure_tuple,
    minimal_tuples,
    norm_t,
    parse_rational,
    profile,
)


def fmt_tuple(x):
    return "(" + ",".join(str(e) for e in x) + ")"


def main():
    alpha = parse_rational(sys.argv[1] if len(sys.argv) > 1 else "7/30")
    T = float(sys.argv[2]) if len(sys.argv) > 2 else 3.0

    reps = sorted(
        enumerate_representations(alpha),
        key=lambda rep: (sorted(measure_tuple(rep)), rep),
    )
    print(f"Coprime factorizations of {alpha}: {len(reps)}")
    for rep in reps:
        parts = " * ".join(f"{p.a}/{p.b}" for p in rep) or "1"
        tup = measure_tuple(rep)
        print(f"  {parts:<28} tuple {fmt_tuple(tup):<14} "
              f"||.||_1 = {norm_t(tup, 1.0):.4f}  ||.||_2 = {norm_t(tup, 2.0):.4f}")

    minimal = minimal_tuples(alpha)
    print(f"\nMinimal tuples ({len(minimal)}):")
    for tup in minimal:
        print(f"  {fmt_tuple(tup)}")

    prof = profile(alpha, T)
    print(f"\nEnvelope profile on (0, {T:g}] (assumes the rational-infimum "
          f"conjecture for 1 < t < inf):")
    for piece in prof.pieces:
        print(f"  ({piece.t_lo:.12g}, {piece.t_hi:.12g}]  active {fmt_tuple(piece.active)}")
    for e in prof.exceptional_points:
        print(f"  exceptional point t = {e.t:.12f}  (residual {e.residual:.2e})")
    if not prof.exceptional_points:
        print("  no exceptional points")
    print(f"\nmu({alpha}) at t = 1, 2, inf: "
          f"{min(norm_t(x, 1.0) for x in minimal):.12f}, "
          f"{min(norm_t(x, 2.0) for x in minimal):.12f}, "
          f"{min(norm_t(x, math.inf) for x in minimal):.12f}")


if __name__ == "__main__":
    main()
