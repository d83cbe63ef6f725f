#!/usr/bin/env python3
"""Write the four asymptotic rate-bound curves to CSV and summarize
where each binary construction bound crosses zero."""

from __future__ import annotations

import argparse

from qsteane.bounds import bound_cs, bound_gf4, bound_steane, bound_thm4, emit_curve, write_curve_csv


def zero_crossing(f, lo: float = 0.0, hi: float = 0.5) -> float:
    for _ in range(60):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="bounds_curve.csv")
    parser.add_argument("--step", type=float, default=0.001)
    args = parser.parse_args()

    points = emit_curve(0.0, 0.5, args.step)
    with open(args.out, "w") as fh:
        write_curve_csv(points, fh)
    print(f"wrote {len(points)} grid points to {args.out}")
    for name, f in (
        ("gf4", bound_gf4),
        ("cs", bound_cs),
        ("steane", bound_steane),
        ("thm4", bound_thm4),
    ):
        print(f"  {name:>6} positive until delta ~ {zero_crossing(f):.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
