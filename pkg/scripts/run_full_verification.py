#!/usr/bin/env python3
"""Run the full identity + certified-bound verification and write a report.

Equivalent to `mills verify` with a denser grid and higher order cap than
the CLI defaults.  Writes JSON to reports/verification.json (creating the
directory) and prints the text summary to stdout.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from millsratio.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=40)
    parser.add_argument("--grid", default="0.1:10:0.1")
    parser.add_argument("--precision", type=int, default=128)
    parser.add_argument("--out", default="reports/verification.json")
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)

    rc = cli_main(
        [
            "verify",
            "--n-max",
            str(args.n_max),
            "--grid",
            args.grid,
            "--precision",
            str(args.precision),
            "--format",
            "json",
            "--out",
            str(out),
        ]
    )
    print(f"wrote {out} (exit {rc})")
    cli_main(
        [
            "verify",
            "--n-max",
            str(args.n_max),
            "--grid",
            args.grid,
            "--precision",
            str(args.precision),
            "--format",
            "text",
        ]
    )
    return rc


if __name__ == "__main__":
    sys.exit(main())
