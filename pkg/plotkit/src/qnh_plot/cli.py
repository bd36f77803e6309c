"""``qnh-plot``: render one of the six standard figures from sweep CSVs.

Reads ``fig<N>.<mode>.csv`` from the CSV directory and writes
``fig<N>.<mode>.svg`` and ``.png`` to the output directory.
Exit codes: 0 success, 1 on missing/invalid input.
"""

from __future__ import annotations

import argparse
import os
import sys

from .render import PlotInputError, figure_spec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qnh-plot", description=__doc__.splitlines()[0])
    parser.add_argument("--figure", type=int, required=True, help="figure number, 1..6")
    parser.add_argument("--csv-dir", required=True, help="directory holding fig<N>.<mode>.csv")
    parser.add_argument("--out", required=True, help="output directory for the images")
    parser.add_argument("--mode", choices=("paper", "faithful"), default="paper")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    csv_path = os.path.join(args.csv_dir, f"fig{args.figure}.{args.mode}.csv")
    base = os.path.join(args.out, f"fig{args.figure}.{args.mode}")
    try:
        os.makedirs(args.out, exist_ok=True)
        spec = figure_spec(args.figure, csv_path, base)
        paths = render(spec)
    except (PlotInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(paths["svg"])
    print(paths["png"])
    return 0


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
