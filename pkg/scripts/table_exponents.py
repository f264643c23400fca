#!/usr/bin/env python3
"""Finite-size exponents of <m>_n and <a>_n at one point per phase."""
import argparse

from vesicle import scaling
from vesicle.enumeration import default_n_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=1000)
    args = ap.parse_args()
    grid = default_n_grid(args.n_max)
    print(f"{'phase':<10} {'point':<18} {'<m> free':>9} {'<m> extr':>9} {'<a> free':>9} {'<a> extr':>9}  expected")
    for name, row in scaling.TABLE.items():
        fits = scaling.table_exponents(name, grid)
        m, a = fits["contacts"], fits["area"]
        p = row.point
        print(f"{name:<10} {f'({p.c:.4g},{p.s:g},{p.q:g})':<18} {m.exponent:9.4f} {m.extrapolated:9.4f} "
              f"{a.exponent:9.4f} {a.extrapolated:9.4f}  n^{row.contacts_exponent:g}, n^{row.area_exponent:g}")


if __name__ == "__main__":
    main()
