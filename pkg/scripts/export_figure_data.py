#!/usr/bin/env python3
"""Export envelope plot data as CSV for one or more rationals.

Writes one file per rational: columns t, one norm column per minimal tuple,
and the envelope (their pointwise minimum).  Suitable for plotting the
envelope together with the individual tuple norm curves.

Usage: python scripts/export_figure_data.py out_dir [alpha ...]
Defaults export 7/30 and 12 on (0, 3], the two worked figures.
"""

import pathlib
import sys

sys.path.insert(0, "src")

from tmahler.cli import main as mt_main


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
    alphas = sys.argv[2:] or ["7/30", "12"]
    out_dir.mkdir(parents=True, exist_ok=True)
    for alpha in alphas:
        target = out_dir / f"envelope_{alpha.replace('/', '_over_')}.csv"
        code = mt_main(
            ["plot", alpha, "-T", "3", "--step", "0.001", "-o", str(target)]
        )
        if code != 0:
            raise SystemExit(f"plot failed for {alpha} (exit {code})")
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
