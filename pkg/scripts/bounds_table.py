#!/usr/bin/env python3
"""Print a comparison table of the bound families against the oracle.

For each grid point x the table shows phi(x), the first-order enclosure at a
chosen order, the second-order lower/upper values, and the classical
lower/upper specializations, so the sharpness ordering is visible at a glance.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from millsratio.bounds import (
    first_order_enclosure,
    komatsu_lower,
    second_order_bound,
    szarek_werner_upper,
)
from millsratio.cli import grid_points, parse_grid
from millsratio.errors import DomainError, SingularityError
from millsratio.numutil import nstr_fixed
from millsratio.oracle import phi_series


def fmt(value, digits: int) -> str:
    return nstr_fixed(value, digits) if value is not None else "-"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", default="0.5:5:0.5")
    parser.add_argument("--order", type=int, default=2, help="first-order enclosure order n")
    parser.add_argument("--even", type=int, default=2, help="even second-order index 2m")
    parser.add_argument("--odd", type=int, default=3, help="odd second-order index 2m+1")
    parser.add_argument("--precision", type=int, default=128)
    parser.add_argument("--digits", type=int, default=12)
    args = parser.parse_args()

    xs = grid_points(parse_grid(args.grid))
    p, d = args.precision, args.digits

    header = ["x", "phi", "cf_lower", "cf_upper", f"I_{args.even}", f"I_{args.odd}", "lower_cl", "upper_cl"]
    print("  ".join(h.rjust(d + 4) for h in header))
    for x in xs:
        phi = phi_series(x, p).value
        try:
            enc = first_order_enclosure(args.order, x, p)
            lo, hi = enc.lower, enc.upper
        except DomainError:
            lo = hi = None
        even = second_order_bound(args.even, x, p).value
        try:
            odd = second_order_bound(args.odd, x, p).value
        except (DomainError, SingularityError):
            odd = None
        kom = komatsu_lower(x, p)
        try:
            sz = szarek_werner_upper(x, p)
        except DomainError:
            sz = None
        row = [str(Fraction(x)), phi, lo, hi, even, odd, kom, sz]
        print("  ".join(fmt(v, d).rjust(d + 4) if not isinstance(v, str) else v.rjust(d + 4) for v in row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
