#!/usr/bin/env python3
"""Plot the CSVs from phase_diagram.py (needs the optional matplotlib extra)."""
import argparse
import csv
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read(path):
    with open(path, encoding="utf-8") as fh:
        return [r for r in csv.DictReader(fh) if r["error"] == "NA"]


def curves(rows, x, group):
    out = defaultdict(list)
    for r in rows:
        out[float(r[group])].append((float(r[x]), float(r["t_c"])))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--indir", default="results")
    args = ap.parse_args()
    d = Path(args.indir)
    fig, axes = plt.subplots(1, 3, figsize=(15, 4.5))
    for s, pts in sorted(curves(read(d / "tc_q1_c_s.csv"), "c", "s").items())[::8]:
        axes[0].plot(*zip(*pts), label=f"s={s:.3g}")
    axes[0].set(xlabel="c", ylabel="t_c", title="q = 1")
    for q, pts in sorted(curves(read(d / "tc_s1_c_q.csv"), "c", "q").items())[::8]:
        axes[1].plot(*zip(*pts), label=f"q={q:.3g}")
    axes[1].set(xlabel="c", ylabel="t_c", title="s = 1")
    line = read(d / "tc_s1_q_c.csv")
    axes[2].plot([float(r["q"]) for r in line], [float(r["t_c"]) for r in line])
    axes[2].set(xlabel="q", ylabel="t_c", title="c = 4/3, s = 1")
    for ax in axes[:2]:
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(d / "phase_diagram.png", dpi=120)
    print(f"wrote {d / 'phase_diagram.png'}")


if __name__ == "__main__":
    main()
