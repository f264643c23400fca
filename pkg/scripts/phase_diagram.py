#!/usr/bin/env python3
"""Sweep data behind the singularity surfaces and the binding line.

Writes CSVs into --outdir (default: results/):
  tc_q1_c_s.csv    t_c over (c, s) at q = 1
  tc_s1_c_q.csv    t_c over (c, q) at s = 1
  tc_s1_q_c.csv    t_c over q for c = 4/3 (the Airy cusp)
  binding_line.csv c_s(s) from the phase labels
"""
import argparse
import math
from pathlib import Path

from vesicle import cli, phase


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--count", type=int, default=41)
    ap.add_argument("--jobs", type=int)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    k = str(args.count)
    jobs = [] if args.jobs is None else ["--jobs", str(args.jobs)]
    runs = {
        "tc_q1_c_s.csv": ["--axis", f"c:1:3:{k}", "--axis", f"s:0.05:1:{k}", "--q", "1"],
        "tc_s1_c_q.csv": ["--axis", f"c:0.5:3:{k}", "--axis", f"q:0.5:1:{k}", "--s", "1"],
        "tc_s1_q_c.csv": ["--axis", f"q:0.5:1:{k}", "--c", repr(4 / 3), "--s", "1"],
    }
    for name, extra in runs.items():
        code = cli.main(["sweep", *extra, *jobs, "--out", str(out / name)])
        if code:
            raise SystemExit(code)

    with open(out / "binding_line.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("s,c_boundary\n")
        for u in range(-40, 41):
            s = math.exp(u / 10)
            fh.write(f"{s!r},{phase.binding_boundary(s)!r}\n")
    print(f"wrote {len(runs) + 1} files to {out}")


if __name__ == "__main__":
    main()
