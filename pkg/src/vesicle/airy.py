"""Airy function Ai and its derivative from the Maclaurin series.

Ai(z) = Ai(0) f(z) + Ai'(0) g(z) with the two power-series solutions

    f(z) = sum_k 3^k (1/3)_k z^(3k)   / (3k)!
    g(z) = sum_k 3^k (2/3)_k z^(3k+1) / (3k+1)!

summed in mpmath with enough guard digits to absorb the cancellation
between f and g for positive z.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import ConvergenceError, DomainError

Z_MAX = 12.0


@dataclass(frozen=True)
class AiryValue:
    z: float
    ai: float
    ai_prime: float


def _reference_constants():
    """Ai(0) = 3^(-2/3) / Gamma(2/3) and Ai'(0) = -3^(-1/3) / Gamma(1/3)."""
    ai0 = mpmath.mpf(3) ** (mpmath.mpf(-2) / 3) / mpmath.gamma(mpmath.mpf(2) / 3)
    aip0 = -mpmath.mpf(3) ** (mpmath.mpf(-1) / 3) / mpmath.gamma(mpmath.mpf(1) / 3)
    return ai0, aip0


def _airy_mp(z: float):
    az = abs(z)
    # f and g grow like exp(2/3 |z|^(3/2)) while Ai decays at the same rate
    guard = int(2 * (2.0 / 3.0) * az ** 1.5 / math.log(10)) + 30
    with mpmath.workdps(guard):
        zm = mpmath.mpf(z)
        z3 = zm ** 3
        ai0, aip0 = _reference_constants()
        eps = mpmath.mpf(10) ** (-guard + 5)

        # f, f', g, g' term by term; ratios follow from (a)_k recurrences
        f_t, g_t = mpmath.mpf(1), zm          # k = 0 terms of f and g
        fp_t, gp_t = zm * zm / 2, mpmath.mpf(1)  # k = 1 term of f', k = 0 term of g'
        f, g, fp, gp = f_t, g_t, fp_t, gp_t
        for k in range(10000):
            f_t *= z3 / ((3 * k + 2) * (3 * k + 3))
            g_t *= z3 / ((3 * k + 3) * (3 * k + 4))
            fp_t *= z3 / ((3 * k + 3) * (3 * k + 5))
            gp_t *= z3 / ((3 * k + 1) * (3 * k + 3))
            f += f_t
            g += g_t
            fp += fp_t
            gp += gp_t
            if max(abs(f_t), abs(g_t), abs(fp_t), abs(gp_t)) < eps:
                break
        else:
            raise ConvergenceError(f"Airy series did not converge at z={z}")
        return ai0 * f + aip0 * g, ai0 * fp + aip0 * gp


def airy(z: float) -> AiryValue:
    """Ai(z) and Ai'(z) for |z| <= 12."""
    if not abs(z) <= Z_MAX:
        raise DomainError(f"airy() is limited to |z| <= {Z_MAX}, got {z!r}")
    ai, aip = _airy_mp(z)
    return AiryValue(float(z), float(ai), float(aip))


def airy_ratio(z: float) -> float:
    """Ai'(z) / Ai(z)."""
    if not abs(z) <= Z_MAX:
        raise DomainError(f"airy_ratio() is limited to |z| <= {Z_MAX}, got {z!r}")
    ai, aip = _airy_mp(z)
    if ai == 0:
        raise ZeroDivisionError(f"Ai vanishes at z={z}")
    return float(aip / ai)


def _newton_zero(z0: float, derivative: bool) -> float:
    # Ai'' = z Ai, so Newton on Ai' uses Ai'/(z Ai); on Ai it uses Ai/Ai'
    z = z0
    for _ in range(60):
        ai, aip = _airy_mp(z)
        step = float(aip / (z * ai)) if derivative else float(ai / aip)
        z -= step
        if abs(step) < 1e-16 * max(1.0, abs(z)):
            return z
    raise ConvergenceError("Newton iteration for an Airy zero did not converge")


@lru_cache(maxsize=None)
def airy_prime_zero_1() -> float:
    """First (largest) zero of Ai', approximately -1.0188."""
    return _newton_zero(-1.0, derivative=True)


@lru_cache(maxsize=None)
def airy_zero_1() -> float:
    """First (largest) zero of Ai, approximately -2.3381."""
    return _newton_zero(-2.3, derivative=False)
