"""Power-law fits on log-log axes, with correction-to-scaling extrapolation."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import FitDomainError


@dataclass(frozen=True)
class ScalingFit:
    """Result of fitting ``y ~ amplitude * x**exponent``.

    ``exponent`` and ``raw_amplitude`` are the plain least-squares line
    through (log x, log y); ``max_residual`` is its worst absolute log
    residual.  ``extrapolated`` is the local-slope estimate of the limiting
    exponent.  ``amplitude`` is the limiting prefactor when a reference
    exponent was supplied, and equals ``raw_amplitude`` otherwise.
    """

    exponent: float
    amplitude: float
    window: Tuple[float, float]
    max_residual: float
    extrapolated: Optional[float] = None
    raw_amplitude: Optional[float] = None
    local_slopes: Tuple[float, ...] = field(default=(), repr=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["window"] = list(self.window)
        d["local_slopes"] = list(self.local_slopes)
        return d


def _logs(xs, ys):
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 2:
        raise FitDomainError("need two equally long 1-d sequences with at least 2 points")
    if np.any(x <= 0) or np.any(y <= 0) or not np.all(np.isfinite(y)):
        raise FitDomainError("log-log fit needs strictly positive, finite data")
    return np.log(x), np.log(y)


def loglog_fit(xs: Sequence[float], ys: Sequence[float]) -> ScalingFit:
    lx, ly = _logs(xs, ys)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    amp = float(np.exp(intercept))
    return ScalingFit(
        exponent=float(slope),
        amplitude=amp,
        window=(float(np.min(xs)), float(np.max(xs))),
        max_residual=float(np.max(np.abs(resid))),
        raw_amplitude=amp,
    )


def successive_slopes(xs: Sequence[float], ys: Sequence[float]):
    """Local exponents between neighbouring points, at geometric midpoints."""
    lx, ly = _logs(xs, ys)
    slopes = np.diff(ly) / np.diff(lx)
    mids = np.exp(0.5 * (lx[1:] + lx[:-1]))
    return mids, slopes


def _linear_intercept(u, v) -> float:
    if len(u) < 2:
        return float(v[-1])
    _, a = np.polyfit(u, v, 1)
    return float(a)


def extrapolate_slopes(xs, ys, correction: float, tail: int = 4):
    """Limit of the local slopes assuming slope(x) = alpha + b x**correction.

    Use a negative ``correction`` for limits x -> infinity (finite size)
    and a positive one for x -> 0.  Only the ``tail`` local slopes closest
    to the limit enter the linear fit.
    """
    mids, slopes = successive_slopes(xs, ys)
    order = np.argsort(mids ** correction)
    k = min(tail, len(slopes))
    sel = order[:k]
    return _linear_intercept(mids[sel] ** correction, slopes[sel]), slopes


def asymptotic_amplitude(xs, ys, exponent: float, correction: float, tail: Optional[int] = None) -> float:
    """Limit of y / x**exponent assuming a leading correction b x**correction."""
    x = np.asarray(xs, dtype=float)
    ratio = np.asarray(ys, dtype=float) / x ** exponent
    u = x ** correction
    if tail is not None:
        sel = np.argsort(u)[:tail]
        u, ratio = u[sel], ratio[sel]
    return _linear_intercept(u, ratio)


def power_law_fit(xs, ys, reference_exponent: Optional[float] = None, correction: Optional[float] = None,
                  tail: int = 4) -> ScalingFit:
    """Log-log fit plus correction-to-scaling estimates.

    With ``correction`` the local slopes are extrapolated; with a
    ``reference_exponent`` as well, the prefactor of x**reference_exponent
    is extrapolated the same way and reported as ``amplitude``.
    """
    fit = loglog_fit(xs, ys)
    extrap, slopes = (None, successive_slopes(xs, ys)[1])
    amp = fit.amplitude
    if correction is not None:
        extrap, slopes = extrapolate_slopes(xs, ys, correction, tail)
        if reference_exponent is not None:
            amp = asymptotic_amplitude(xs, ys, reference_exponent, correction)
    return ScalingFit(
        exponent=fit.exponent,
        amplitude=amp,
        window=fit.window,
        max_residual=fit.max_residual,
        extrapolated=extrap,
        raw_amplitude=fit.raw_amplitude,
        local_slopes=tuple(float(v) for v in slopes),
    )
