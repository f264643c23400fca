"""Command-line interface: ``vesicle <command> [options]``.

Commands: zn, series-check, singularity, sweep, scaling.  Results go to
stdout (or ``--out``); one JSON run report goes to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import subprocess
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import __version__, phase, scaling
from .enumeration import brute_force_Zn, transfer_Zn
from .errors import VesicleError
from .model import ModelPoint
from .poly import LaurentPoly3
from .qseries import CFRAC_TOL, F_cfrac, G_eval, series_in_t

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ("c", "s", "q", "t_c", "kind", "phase", "contacts", "area", "error")
BRUTE_AUTO_MAX = 12

# acceptance tolerances shared with the test-suite
TOL_TP_EXPONENT = 0.01
TOL_AMPLITUDE = {"tp_cs": 0.02, "M_q": 0.02, "A_q": 0.02, "M_c": 0.01, "A_c": 0.01}
TOL_TABLE = 0.1


class UsageError(Exception):
    pass


def fmt(v) -> str:
    """Deterministic text for a CSV/JSON scalar: shortest round-trip floats, NA for None."""
    if v is None:
        return "NA"
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, float) and not math.isfinite(v):
        return fmt(v)
    return v


def tool_version() -> str:
    try:
        rev = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=Path(__file__).resolve().parent,
            capture_output=True, text=True, timeout=5,
        ).stdout.strip()
    except (OSError, subprocess.SubprocessError):
        rev = ""
    return f"vesicle {__version__}" + (f" ({rev})" if rev else "")


@dataclass
class RunReport:
    command: str
    parameters: dict
    version: str
    wall_time: float
    outcome: str

    def emit(self, stream=None):
        stream = stream or sys.stderr
        print(json.dumps({
            "command": self.command,
            "parameters": self.parameters,
            "version": self.version,
            "wall_time_s": round(self.wall_time, 6),
            "outcome": self.outcome,
        }, sort_keys=True, default=str), file=stream)


def _point_args(args, require=False) -> Optional[ModelPoint]:
    given = [v is not None for v in (args.c, args.s, args.q)]
    if not any(given) and not require:
        return None
    return ModelPoint(
        c=1.0 if args.c is None else args.c,
        s=1.0 if args.s is None else args.s,
        q=1.0 if args.q is None else args.q,
    )


# --- zn ----------------------------------------------------------------------


def cmd_zn(args, out) -> str:
    n = args.n
    point = _point_args(args)
    if point is None:
        method = args.method
        if method == "auto":
            method = "brute" if n <= BRUTE_AUTO_MAX else "series"
        poly = brute_force_Zn(n) if method == "brute" else series_in_t(n)[n]
        out.write(poly.to_json() + "\n")
        return f"exact Z_{n} with {len(poly)} terms"
    value = transfer_Zn(n, point)
    result = {"n": n, "c": point.c, "s": point.s, "q": point.q, "Z": value, "oracle_match": None}
    if n <= BRUTE_AUTO_MAX:
        exact = float(brute_force_Zn(n)(point.c, point.s, point.q))
        result["oracle_match"] = abs(value - exact) <= 1e-12 * abs(exact)
    out.write(json.dumps(result) + "\n")
    if result["oracle_match"] is False:
        raise VerificationFailure(f"transfer matrix disagrees with enumeration at n={n}")
    return f"Z_{n} = {fmt(value)}"


class VerificationFailure(Exception):
    pass


# --- series-check --------------------------------------------------------------


def first_difference(a: LaurentPoly3, b: LaurentPoly3):
    for key in sorted(set(a.terms) | set(b.terms)):
        if a[key] != b[key]:
            return key, a[key], b[key]
    return None


def cmd_series_check(args, out) -> str:
    order = args.order
    if not 0 <= order <= 16:
        raise UsageError(f"--order must lie in [0, 16], got {order}")
    series = list(series_in_t(order).coefficients)
    if args.corrupt is not None:
        k = args.corrupt
        if not 0 <= k <= order:
            raise UsageError(f"--corrupt must lie in [0, {order}]")
        series[k] = series[k] + LaurentPoly3.one()
    failed = None
    out.write("n\tverdict\tterms\n")
    for n in range(order + 1):
        diff = first_difference(series[n], brute_force_Zn(n))
        verdict = "PASS" if diff is None else "FAIL"
        out.write(f"{n}\t{verdict}\t{len(series[n])}\n")
        if diff is not None and failed is None:
            failed = (n, diff)
    if failed is not None:
        n, ((ec, es, eq), got, want) = failed
        raise VerificationFailure(
            f"series and enumeration differ at n={n}, monomial c^{ec} s^{es} q^{eq}: {got} vs {want}"
        )
    return f"all {order + 1} coefficients identical"


# --- singularity / sweep -----------------------------------------------------


def evaluate_point(c: float, s: float, q: float, densities: bool = True) -> dict:
    """One row of singularity data; failures are captured in ``error``."""
    row = {"c": c, "s": s, "q": q, "t_c": None, "kind": None, "phase": None,
           "contacts": None, "area": None, "error": None}
    try:
        res = phase.classify(c, s, q)
        row.update(t_c=res.t_c, kind=res.kind, phase=res.phase)
        if densities and res.phase != phase.INFLATED:
            dens = phase.densities_general(c, s, q)
            row.update(contacts=dens.contacts, area=dens.area)
    except (VesicleError, ArithmeticError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}".replace(",", ";").replace("\n", " ")
    return row


def cmd_singularity(args, out) -> str:
    point = _point_args(args, require=True)
    row = evaluate_point(point.c, point.s, point.q)
    if row["error"]:
        raise VesicleError(row["error"])
    row.pop("error")
    if args.t is not None:
        row["t"] = args.t
        row["G"] = generating_function(point, args.t, args.depth, args.tol)
    out.write(json.dumps({k: _jsonable(v) for k, v in row.items()}) + "\n")
    return f"{row['phase']} t_c={fmt(row['t_c'])}"


def generating_function(point: ModelPoint, t: float, depth: int = 64, tol: float = CFRAC_TOL) -> float:
    """G at length fugacity t; the continued fraction (with ``depth``/``tol``) serves q < 1."""
    if not 0 < t:
        raise UsageError("--t must be positive")
    if point.q < 1:
        return F_cfrac(point.c, t / point.s, t * point.s, point.q, depth=depth, tol=tol)
    return G_eval(ModelPoint(point.c, point.s, point.q, t))


def parse_axis(text: str):
    """``name:min:max:count[:lin|log]`` -> (name, values)."""
    parts = text.split(":")
    if len(parts) not in (4, 5) or parts[0] not in ("c", "s", "q"):
        raise UsageError(f"bad --axis {text!r}; expected name:min:max:count[:lin|log] with name in c, s, q")
    name = parts[0]
    try:
        lo, hi, count = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise UsageError(f"bad numbers in --axis {text!r}") from None
    spacing = parts[4] if len(parts) == 5 else "lin"
    if count < 2 or spacing not in ("lin", "log") or not (lo > 0 and hi > 0):
        raise UsageError(f"bad --axis {text!r}: count >= 2, positive bounds, spacing lin|log")
    values = np.geomspace(lo, hi, count) if spacing == "log" else np.linspace(lo, hi, count)
    return name, [float(v) for v in values]


def sweep_grid(axes: Sequence[str], fixed: dict):
    parsed = [parse_axis(a) for a in axes]
    names = [p[0] for p in parsed]
    if len(parsed) > 2 or len(set(names)) != len(names):
        raise UsageError("at most two distinct sweep axes")
    points = []
    for combo in product(*(p[1] for p in parsed)):
        vals = dict(fixed)
        vals.update(zip(names, combo))
        points.append((vals["c"], vals["s"], vals["q"]))
    return points


def _eval_tuple(args):
    return evaluate_point(*args)


def run_sweep(points, jobs: int, densities: bool = True) -> List[dict]:
    tasks = [(c, s, q, densities) for c, s, q in points]
    if jobs <= 1 or len(tasks) < 2:
        return [_eval_tuple(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves grid order whatever the completion order
        return list(pool.map(_eval_tuple, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def write_rows(rows: List[dict], fmt_name: str, stream) -> None:
    if fmt_name == "csv":
        stream.write(",".join(CSV_COLUMNS) + "\n")
        for row in rows:
            stream.write(",".join(fmt(row[k]) for k in CSV_COLUMNS) + "\n")
    else:
        payload = [{k: _jsonable(row[k]) for k in CSV_COLUMNS} for row in rows]
        stream.write(json.dumps(payload, indent=1) + "\n")


def cmd_sweep(args, out) -> str:
    if not args.axis:
        raise UsageError("sweep needs at least one --axis")
    fixed = {"c": 1.0 if args.c is None else args.c,
             "s": 1.0 if args.s is None else args.s,
             "q": 1.0 if args.q is None else args.q}
    points = sweep_grid(args.axis, fixed)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    rows = run_sweep(points, jobs, densities=not args.no_densities)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_rows(rows, args.format, fh)
    else:
        write_rows(rows, args.format, out)
    failures = sum(r["error"] is not None for r in rows)
    if rows and failures == len(rows):
        raise VerificationFailure("every grid point failed")
    return f"{len(rows)} points, {failures} failed"


# --- scaling -----------------------------------------------------------------


def check_law(which: str, fit, s: float = 1.0) -> dict:
    law = scaling.laws(s)[which]
    rel = abs(fit.amplitude / law.amplitude - 1)
    ok = rel <= TOL_AMPLITUDE[which]
    verdict = {"expected_exponent": law.exponent, "expected_amplitude": law.amplitude,
               "amplitude_rel_error": rel, "amplitude_tol": TOL_AMPLITUDE[which]}
    if which == "tp_cs":
        verdict["exponent_tol"] = TOL_TP_EXPONENT
        ok = ok and abs(fit.exponent - law.exponent) <= TOL_TP_EXPONENT
    verdict["verdict"] = "PASS" if ok else "FAIL"
    return verdict


def check_table(phase_name: str, fits: dict) -> dict:
    row = scaling.TABLE[phase_name]
    expected = {"contacts": row.contacts_exponent, "area": row.area_exponent}
    ok = all(abs(fits[k].extrapolated - expected[k]) <= TOL_TABLE for k in fits)
    return {"expected": expected, "tolerance": TOL_TABLE, "verdict": "PASS" if ok else "FAIL"}


def cmd_scaling(args, out) -> str:
    which = args.which
    if which == "table_exponents":
        if args.phase not in scaling.TABLE:
            raise UsageError(f"--phase must be one of {', '.join(scaling.TABLE)}")
        grid = None if args.n_max is None else scaling.default_n_grid(args.n_max)
        fits = scaling.table_exponents(args.phase, grid)
        verdict = check_table(args.phase, fits)
        payload = {"which": which, "phase": args.phase,
                   "fits": {k: f.as_dict() for k, f in fits.items()}, **verdict}
    else:
        window = scaling.default_window(args.points, args.eps_min, args.eps_max)
        s = 1.0 if args.s is None else args.s
        if which == "tp_cs":
            fit = scaling.scaling_tp_at_cs(window, s=s)
        else:
            fit = scaling.scaling_crossover(window, which, s=s)
        verdict = check_law(which, fit, s)
        payload = {"which": which, "fit": fit.as_dict(), **verdict}
    out.write(json.dumps(payload, indent=1) + "\n")
    if payload["verdict"] != "PASS":
        raise VerificationFailure(f"{which}: FAIL")
    return f"{which}: PASS"


# --- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vesicle", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=tool_version())
    sub = p.add_subparsers(dest="command", required=True)

    def point_flags(sp):
        sp.add_argument("--c", type=float, help="contact fugacity")
        sp.add_argument("--s", type=float, help="pull fugacity")
        sp.add_argument("--q", type=float, help="area fugacity")

    sp = sub.add_parser("zn", help="partition function Z_n (exact polynomial or numeric)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("auto", "brute", "series"), default="auto")
    point_flags(sp)

    sp = sub.add_parser("series-check", help="compare the exact t-series with enumeration")
    sp.add_argument("--order", type=int, default=12)
    sp.add_argument("--corrupt", type=int, help=argparse.SUPPRESS)

    sp = sub.add_parser("singularity", help="dominant singularity, phase and densities")
    point_flags(sp)
    sp.add_argument("--t", type=float, help="also evaluate G at this length fugacity")
    sp.add_argument("--depth", type=int, default=64, help="initial continued-fraction depth (q < 1)")
    sp.add_argument("--tol", type=float, default=CFRAC_TOL, help="continued-fraction convergence tolerance")

    sp = sub.add_parser("sweep", help="phase-diagram data over a grid")
    point_flags(sp)
    sp.add_argument("--axis", action="append", default=[], help="name:min:max:count[:lin|log]")
    sp.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--no-densities", action="store_true", help="skip contact/area densities")

    sp = sub.add_parser("scaling", help="scaling-law fits with PASS/FAIL verdicts")
    sp.add_argument("which", choices=("tp_cs", "M_q", "A_q", "M_c", "A_c", "table_exponents"))
    sp.add_argument("--s", type=float)
    sp.add_argument("--eps-min", type=float, default=1e-6)
    sp.add_argument("--eps-max", type=float, default=1e-3)
    sp.add_argument("--points", type=int, default=10)
    sp.add_argument("--phase", default="critical")
    sp.add_argument("--n-max", type=int)
    return p


COMMANDS = {
    "zn": cmd_zn,
    "series-check": cmd_series_check,
    "singularity": cmd_singularity,
    "sweep": cmd_sweep,
    "scaling": cmd_scaling,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    params = {k: v for k, v in vars(args).items() if k != "command" and v is not None}
    start = time.perf_counter()
    try:
        outcome = COMMANDS[args.command](args, out)
        code = EXIT_OK
    except VerificationFailure as exc:
        outcome, code = f"FAIL: {exc}", EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, VesicleError, OverflowError) as exc:
        outcome, code = f"ERROR: {exc}", EXIT_USAGE
        print(f"error: {exc}", file=sys.stderr)
    RunReport(args.command, params, tool_version(), time.perf_counter() - start, outcome).emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
