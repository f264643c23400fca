"""Finite-size ground truth for pairs of friendly directed walks.

Two routes to Z_n(c, s, q):

* explicit enumeration of every walk pair (``enumerate_pairs``,
  ``brute_force_Zn``) with statistics measured geometrically, exact
  integer coefficients;
* a transfer-matrix recursion over the gap between the walks along
  anti-diagonals (``transfer_Zn``, ``mean_observables``), O(n^2) work.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import BoundsError, InvariantError
from .fitting import ScalingFit, power_law_fit
from .model import ModelPoint
from .poly import LaurentPoly3

MAX_BRUTE_N = 16

# (top step, bottom step) in the order used by enumerate_pairs
_STEP_PAIRS = (("E", "E"), ("E", "N"), ("N", "E"), ("N", "N"))


@dataclass(frozen=True)
class WalkPairConfig:
    """Two NE lattice paths from the origin to a common end point.

    ``top_steps`` must stay weakly above ``bottom_steps``; the paths may
    share sites and edges.
    """

    top_steps: str
    bottom_steps: str

    def __post_init__(self):
        top, bot = self.top_steps, self.bottom_steps
        if len(top) != len(bot):
            raise InvariantError(f"paths have different lengths {len(top)} and {len(bot)}")
        if set(top) - {"E", "N"} or set(bot) - {"E", "N"}:
            raise InvariantError("steps must be 'E' or 'N'")
        gap = 0
        for k, (a, b) in enumerate(zip(top, bot), start=1):
            gap += (a == "N") - (b == "N")
            if gap < 0:
                raise InvariantError(f"paths cross after step {k}")
        if gap != 0:
            raise InvariantError("paths do not end at the same point")

    @property
    def n(self) -> int:
        return len(self.top_steps)

    @property
    def end(self) -> Tuple[int, int]:
        ny = self.top_steps.count("N")
        return self.n - ny, ny


@dataclass(frozen=True)
class ConfigStats:
    length: int
    contacts: int
    displacement: int
    area: int


def _column_heights(steps: str) -> List[int]:
    """Height at which the path traverses each unit column."""
    y, out = 0, []
    for st in steps:
        if st == "E":
            out.append(y)
        else:
            y += 1
    return out


def _shared_sites(top: str, bottom: str) -> int:
    """Sites visited by both walks, origin excluded.

    After k steps both walks sit on the anti-diagonal x + y = k, so a
    shared site is a step index at which the heights agree.
    """
    yt = yb = shared = 0
    for a, b in zip(top, bottom):
        yt += a == "N"
        yb += b == "N"
        shared += yt == yb
    return shared


def config_stats(cfg: WalkPairConfig) -> ConfigStats:
    """Length, contacts, end-point displacement and enclosed area.

    The area is a column scan: in every unit column the plaquettes strictly
    between the walks number (top height - bottom height).
    """
    if not isinstance(cfg, WalkPairConfig):
        cfg = WalkPairConfig(*cfg)
    top_cols = _column_heights(cfg.top_steps)
    bot_cols = _column_heights(cfg.bottom_steps)
    area = 0
    for i, (yt, yb) in enumerate(zip(top_cols, bot_cols)):
        if yt < yb:
            raise InvariantError(f"top path below bottom path in column {i}")
        area += yt - yb
    contacts = _shared_sites(cfg.top_steps, cfg.bottom_steps)
    nx, ny = cfg.end
    return ConfigStats(length=cfg.n, contacts=contacts, displacement=ny - nx, area=area)


def _check_n(n: int, limit: int = MAX_BRUTE_N) -> None:
    if not isinstance(n, (int, np.integer)) or n < 0 or n > limit:
        raise BoundsError(f"n must be an integer in [0, {limit}], got {n!r}")


def enumerate_pairs(n: int) -> Iterator[WalkPairConfig]:
    """Yield every walk pair of length n once, in lexicographic order of (top, bottom)."""
    _check_n(n)
    # explicit DFS stack; children pushed in reverse so they pop in order
    stack = [(0, 0, "", "")]
    while stack:
        k, gap, top, bot = stack.pop()
        if k == n:
            yield WalkPairConfig(top, bot)
            continue
        for a, b in reversed(_STEP_PAIRS):
            g = gap + (a == "N") - (b == "N")
            # the gap can close by at most one per remaining step
            if 0 <= g <= n - k - 1:
                stack.append((k + 1, g, top + a, bot + b))


@lru_cache(maxsize=None)
def brute_force_Zn(n: int) -> LaurentPoly3:
    """Exact Z_n(c, s, q) as a sum of c^m s^h q^a over all configurations."""
    counts: Counter = Counter()
    for cfg in enumerate_pairs(n):
        st = config_stats(cfg)
        counts[(st.contacts, st.displacement, st.area)] += 1
    return LaurentPoly3(counts)


# --- transfer matrix -------------------------------------------------------


@dataclass(frozen=True)
class TransferResult:
    """Per-length output of the gap recursion for n = 0..n_max."""

    log_Z: np.ndarray
    mean_contacts: np.ndarray
    mean_area: np.ndarray


def _as_point(point) -> ModelPoint:
    if isinstance(point, ModelPoint):
        return point
    if isinstance(point, dict):
        return ModelPoint(**point)
    return ModelPoint(*point)


def transfer(n_max: int, point: ModelPoint, dtype=np.float64, horizon: int | None = None) -> TransferResult:
    """Run the gap recursion up to length ``n_max``.

    State: the gap d >= 0 between the walks on the current anti-diagonal.
    Per step pair the gap moves by -1, 0 (two ways) or +1; the new site
    picks up q**d (the strip between consecutive anti-diagonals holds
    (d_k + d_{k+1})/2 plaquettes, which telescopes to sum of d_k) and a
    factor c when d returns to 0.  Arrays are renormalised every step and
    the scale is tracked in log space.

    With ``horizon`` set, gaps that can no longer close by step ``horizon``
    are dropped.  Only lengths up to ``horizon`` are then meaningful, but
    for q > 1 this keeps Z_horizon from underflowing next to wide open
    configurations that dominate the unrestricted arrays.
    """
    point = _as_point(point)
    if n_max < 0:
        raise BoundsError(f"n must be non-negative, got {n_max}")
    c, s, q = (dtype(v) for v in (point.c, point.s, point.q))
    size = n_max + 2
    d = np.arange(size, dtype=dtype)
    log_q = math.log(point.q)

    Z = np.zeros(size, dtype=dtype)
    M = np.zeros(size, dtype=dtype)
    A = np.zeros(size, dtype=dtype)
    Z[0] = 1
    log_scale = 0.0

    log_Z = np.empty(n_max + 1)
    mean_m = np.empty(n_max + 1)
    mean_a = np.empty(n_max + 1)
    log_Z[0], mean_m[0], mean_a[0] = 0.0, 0.0, 0.0

    stay = s + 1 / s
    for k in range(1, n_max + 1):
        # only gaps <= k are reachable; the reference gap keeps q**d in range
        d_ref = k if log_q > 0 else 0
        w = np.exp((d - d_ref) * dtype(log_q))
        w[0] *= c
        new = []
        for arr in (Z, M, A):
            nxt = stay * arr
            nxt[1:] += arr[:-1] / s
            nxt[:-1] += arr[1:] * s
            new.append(nxt * w)
        Z, M, A = new
        if horizon is not None and horizon - k + 1 < size:
            for arr in (Z, M, A):
                arr[horizon - k + 1:] = 0
        M[0] += Z[0]
        A += d * Z
        log_scale += d_ref * log_q
        norm = Z.max()
        Z /= norm
        M /= norm
        A /= norm
        log_scale += math.log(float(norm))
        if Z[0] > 0:
            log_Z[k] = math.log(float(Z[0])) + log_scale
            mean_m[k] = float(M[0] / Z[0])
            mean_a[k] = float(A[0] / Z[0])
        else:
            log_Z[k], mean_m[k], mean_a[k] = -math.inf, math.nan, math.nan
    return TransferResult(log_Z=log_Z, mean_contacts=mean_m, mean_area=mean_a)


def transfer_log_Zn(n: int, point, dtype=np.float64) -> float:
    return float(transfer(n, point, dtype=dtype, horizon=n).log_Z[n])


def transfer_Zn(n: int, point, dtype=np.float64) -> float:
    """Numeric Z_n at a point via the gap recursion."""
    log_z = transfer_log_Zn(n, point, dtype=dtype)
    try:
        return math.exp(log_z)
    except OverflowError:
        raise OverflowError(
            f"Z_{n} = exp({log_z:.6g}) overflows a double; use transfer_log_Zn for log-space values"
        ) from None


def mean_observables(n: int, point, dtype=np.float64) -> Tuple[float, float]:
    """Return (<m_c>_n, <a>_n) at the given fugacities."""
    res = transfer(n, point, dtype=dtype, horizon=n)
    return float(res.mean_contacts[n]), float(res.mean_area[n])


def default_n_grid(n_max: int = 1000, n_min: int = 50, points: int = 11) -> List[int]:
    grid = np.unique(np.round(np.geomspace(n_min, n_max, points)).astype(int))
    return [int(v) for v in grid]


def finite_size_exponent(
    observable: str,
    point,
    n_grid: Sequence[int],
    correction: float = 0.5,
    tail: int = 4,
) -> ScalingFit:
    """Fit <observable>_n ~ n**exponent over ``n_grid``.

    ``exponent`` is the global log-log slope; ``extrapolated`` comes from
    the successive slopes, extrapolated linearly in n**-correction.
    """
    if observable not in ("contacts", "area"):
        raise ValueError(f"observable must be 'contacts' or 'area', got {observable!r}")
    ns = [int(v) for v in n_grid]
    if len(ns) < 4 or any(b <= a for a, b in zip(ns, ns[1:])) or ns[0] < 1:
        raise BoundsError("n_grid must be increasing, positive, with at least 4 values")
    point = _as_point(point)
    key = "mean_contacts" if observable == "contacts" else "mean_area"
    if point.q > 1:
        # one horizon-limited run per length, see transfer()
        values = [float(getattr(transfer(n, point, horizon=n), key)[n]) for n in ns]
    else:
        series = getattr(transfer(ns[-1], point), key)
        values = [float(series[n]) for n in ns]
    return power_law_fit(ns, values, correction=-correction, tail=tail)
