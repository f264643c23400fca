"""Scaling laws around the multicritical point (c, q) = (c_s, 1).

Every law has the form ``y ~ amplitude * x**exponent`` as x -> 0, with x
either eps = 1 - q (at c = c_s) or delta = c - c_s (at q = 1).  Leading
corrections are of relative order eps**(1/3) on the q side and delta on
the c side; fits extrapolate them away.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .airy import airy_prime_zero_1
from .enumeration import default_n_grid, finite_size_exponent
from .errors import FitDomainError
from .fitting import ScalingFit, power_law_fit
from .model import ModelPoint
from . import phase


@dataclass(frozen=True)
class Law:
    exponent: float
    amplitude: float
    correction: float
    description: str


def laws(s: float = 1.0) -> Dict[str, Law]:
    """Reference exponents and amplitudes; the eps-side amplitudes are for s = 1."""
    a1p = airy_prime_zero_1()
    cs = phase.c_s(s)
    return {
        "tp_cs": Law(2 / 3, -a1p * 4 ** (-4 / 3), 1 / 3, "t_p(c_s,1,1-eps) - 1/4"),
        "M_q": Law(1 / 3, -3 / (a1p * 4 ** (2 / 3)), 1 / 3, "contact density at c_s vs eps"),
        "A_q": Law(-1 / 3, -a1p * 2 ** (1 / 3) / 3, 1 / 3, "area density at c_s vs eps"),
        "M_c": Law(1.0, 2 / cs ** 3 * (1 + s) ** 2 / s, 1.0, "contact density at q=1 vs c - c_s"),
        "A_c": Law(-1.0, 4 / 9, 1.0, "area density at q=1 vs c - c_s"),
    }


def default_window(points: int = 10, lo: float = 1e-6, hi: float = 1e-3) -> List[float]:
    return [float(v) for v in np.geomspace(lo, hi, points)]


def _check_window(xs: Sequence[float], hi: float = 1e-2) -> List[float]:
    xs = [float(v) for v in xs]
    if len(xs) < 5 or any(not 0 < v <= hi for v in xs):
        raise FitDomainError(f"need at least 5 window values in (0, {hi}]")
    return sorted(xs)


def scaling_tp_at_cs(epsilons: Sequence[float], c: Optional[float] = None, s: float = 1.0) -> ScalingFit:
    """Fit t_p(c, s, 1 - eps) - t_r(s) against eps (c defaults to c_s(s))."""
    eps = _check_window(epsilons)
    c = phase.c_s(s) if c is None else c
    law = laws(s)["tp_cs"]
    y = [phase.t_p_general(c, s, 1 - e).t_c - phase.t_r(s) for e in eps]
    return power_law_fit(eps, y, reference_exponent=law.exponent, correction=law.correction)


def _density(side: str, x: float, s: float) -> float:
    cs = phase.c_s(s)
    if side == "M_q":
        return phase.fd_density_contacts(cs, s, 1 - x)
    if side == "A_q":
        return phase.fd_density_area(cs, s, 1 - x)
    if side == "M_c":
        return phase.density_contacts_q1(cs + x, s)
    if side == "A_c":
        # the model's own area density (implicit differentiation, checked
        # against finite differences and the transfer matrix)
        return phase.density_area_q1(cs + x, s)
    raise ValueError(f"unknown side {side!r}")


def scaling_crossover(window: Sequence[float], side: str, s: float = 1.0) -> ScalingFit:
    """Fit one of the four density laws near (c_s, 1).

    ``side``: ``M_q`` / ``A_q`` take eps = 1 - q at c = c_s(s); ``M_c`` /
    ``A_c`` take delta = c - c_s(s) at q = 1.
    """
    if side not in ("M_q", "A_q", "M_c", "A_c"):
        raise ValueError(f"side must be one of M_q, A_q, M_c, A_c; got {side!r}")
    xs = _check_window(window)
    law = laws(s)[side]
    ys = [_density(side, x, s) for x in xs]
    return power_law_fit(xs, ys, reference_exponent=law.exponent, correction=law.correction)


# --- finite-size table ------------------------------------------------------


@dataclass(frozen=True)
class PhaseRow:
    point: ModelPoint
    contacts_exponent: float
    area_exponent: float
    correction: float


TABLE: Dict[str, PhaseRow] = {
    "deflated": PhaseRow(ModelPoint(1.0, 1.0, 0.9), 1.0, 1.0, 1.0),
    "inflated": PhaseRow(ModelPoint(1.0, 1.0, 1.05), 0.0, 2.0, 1.0),
    "unbound": PhaseRow(ModelPoint(1.0, 1.0, 1.0), 0.0, 1.5, 0.5),
    "critical": PhaseRow(ModelPoint(4 / 3, 1.0, 1.0), 0.5, 1.5, 0.5),
    "bound": PhaseRow(ModelPoint(2.0, 1.0, 1.0), 1.0, 1.0, 1.0),
}


def table_exponents(phase_name: str, n_grid: Optional[Sequence[int]] = None) -> Dict[str, ScalingFit]:
    """Finite-size exponents of <m>_n and <a>_n at the representative point of a phase."""
    row = TABLE[phase_name]
    grid = default_n_grid() if n_grid is None else list(n_grid)
    return {
        obs: finite_size_exponent(obs, row.point, grid, correction=row.correction)
        for obs in ("contacts", "area")
    }
