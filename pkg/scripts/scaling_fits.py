#!/usr/bin/env python3
"""All near-multicritical fits, free and extrapolated, against the reference laws."""
import argparse

from vesicle import scaling


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps-min", type=float, default=1e-6)
    ap.add_argument("--eps-max", type=float, default=1e-3)
    ap.add_argument("--points", type=int, default=10)
    args = ap.parse_args()
    window = scaling.default_window(args.points, args.eps_min, args.eps_max)
    laws = scaling.laws()
    print(f"{'law':<6} {'exp free':>9} {'exp extr':>9} {'ref exp':>8} {'amp free':>10} {'amp extr':>10} {'ref amp':>10}")
    for name, law in laws.items():
        if name == "tp_cs":
            fit = scaling.scaling_tp_at_cs(window)
        else:
            fit = scaling.scaling_crossover(window, name)
        print(f"{name:<6} {fit.exponent:9.5f} {fit.extrapolated:9.5f} {law.exponent:8.4f} "
              f"{fit.raw_amplitude:10.6f} {fit.amplitude:10.6f} {law.amplitude:10.6f}")


if __name__ == "__main__":
    main()
