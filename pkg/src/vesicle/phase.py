"""Dominant singularity, phase classification and densities.

At q = 1 everything is closed form: a square-root branch point at
t_r(s) competes with a simple pole t_p(c, s) that exists for c >= c_s(s).
For q < 1 the dominant singularity is always a simple pole, located by
inverting the continued fraction for c(t_p) with bisection.  For q > 1
the radius of convergence is zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .airy import airy_ratio, airy_zero_1
from .errors import ConvergenceError, DomainError, SingularError
from .qseries import CFRAC_TOL, Q_ONE_WINDOW, necklace_sum

CRITICAL_TOL = 1e-12
ROOT_TOL = 1e-13
FD_STEP = 1e-4

UNBOUND, BOUND, CRITICAL, DEFLATED, INFLATED = "unbound", "bound", "critical", "deflated", "inflated"
SQRT_BRANCH, SIMPLE_POLE = "square_root_branch", "simple_pole"


@dataclass(frozen=True)
class SingularityResult:
    """Location and nature of the singularity of G closest to the origin.

    ``kind`` is None in the inflated phase, where there is no singularity
    at positive t (the radius of convergence is zero).
    """

    t_c: float
    kind: Optional[str]
    phase: str


@dataclass(frozen=True)
class Densities:
    """Limiting contacts and area per unit length; ``area`` is None when undefined."""

    contacts: float
    area: Optional[float]


def t_r(s: float) -> float:
    """Square-root branch point s / (1 + s)^2."""
    return s / (1 + s) ** 2


def c_s(s: float) -> float:
    """Binding transition (s + 1)^2 / (s^2 + s + 1)."""
    return (s + 1) ** 2 / (s * s + s + 1)


def t_p_q1(c: float, s: float) -> float:
    """Simple pole of G at q = 1; only exists for c >= c_s(s)."""
    cs = c_s(s)
    if c < cs - CRITICAL_TOL:
        raise DomainError(f"pole formula invalid below c_s(s) = {cs:.15g} (c = {c!r})")
    s2 = s * s
    rad = ((1 + s2) ** 2 * c - (1 - s2) ** 2) * (c - 1)
    return ((1 - c) * (1 + s2) + math.sqrt(max(rad, 0.0))) / (2 * c * s)


def pole_identity_sides(t: float, c: float, s: float):
    """Both sides of sqrt(((s-1)^2 t - s)((s+1)^2 t - s)) = t s^2 + s + t - 2s/c."""
    lhs = math.sqrt(((s - 1) ** 2 * t - s) * ((s + 1) ** 2 * t - s))
    rhs = t * s * s + s + t - 2 * s / c
    return lhs, rhs


def t_c_q1(c: float, s: float) -> SingularityResult:
    cs = c_s(s)
    if abs(c - cs) <= CRITICAL_TOL:
        return SingularityResult(t_r(s), SQRT_BRANCH, CRITICAL)
    if c < cs:
        return SingularityResult(t_r(s), SQRT_BRANCH, UNBOUND)
    return SingularityResult(t_p_q1(c, s), SIMPLE_POLE, BOUND)


# --- q < 1: continued-fraction inversion ------------------------------------


def _c_and_depth(t: float, s: float, q: float, depth: int, tol: float):
    total, used = necklace_sum(t / s, t * s, q, depth, tol)
    if total <= 0:
        raise SingularError(f"t = {t!r} is beyond the first pole of the continued fraction", value=total)
    return 1.0 / total, used


def c_of_tp(t_p: float, s: float, q: float, depth: int = 64, tol: float = CFRAC_TOL) -> float:
    """c such that t_p is the pole of G(c, s, q, t), i.e. 1 / (x + y + S).

    S comes from the continued fraction (q-Bessel ratio once both x and y
    are large, see ``necklace_sum``).  The depth is doubled from ``depth`` until two successive values agree
    to ``tol``.
    """
    return _c_of_tp_depth(t_p, s, q, depth, tol)[0]


def _c_of_tp_depth(t_p, s, q, depth, tol=CFRAC_TOL):
    if not 0 < q <= 1:
        raise DomainError(f"continued fraction needs 0 < q <= 1, got {q!r}")
    if not t_p > 0:
        raise DomainError(f"t_p must be positive, got {t_p!r}")
    return _c_and_depth(t_p, s, q, depth, tol)


def _pole_bisect(c: float, s: float, q: float, tol: float = ROOT_TOL) -> float:
    depth = 32

    def above(t):
        """True while t is left of the pole location (c_of_tp(t) > c)."""
        nonlocal depth
        try:
            val, used = _c_of_tp_depth(t, s, q, max(8, depth // 4))
        except SingularError:
            return False
        depth = used
        return val > c

    lo = t_r(s)
    while not above(lo):
        lo *= 0.5
        if lo < 1e-300:
            raise ConvergenceError(f"no pole bracket found below t for (c, s, q) = ({c}, {s}, {q})")
    hi = lo
    while above(hi):
        lo = hi
        hi *= 1.125
        if hi > 1e6:
            raise ConvergenceError(f"no pole bracket found above t for (c, s, q) = ({c}, {s}, {q})")
    # guard: c(t) must decrease through the bracket
    c_lo = _c_of_tp_depth(lo, s, q, depth)[0]
    if c_lo >= _c_of_tp_depth(0.5 * lo, s, q, depth)[0]:
        raise ConvergenceError(f"c(t_p) is not decreasing near t = {lo!r} at (s, q) = ({s}, {q})")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if above(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def t_p_general(c: float, s: float, q: float) -> SingularityResult:
    """Dominant singularity for any q > 0.

    q > 1 short-circuits to the inflated phase, q within 1e-8 of 1 uses
    the q = 1 closed forms, smaller q inverts the continued fraction.
    """
    if not (c > 0 and s > 0 and q > 0):
        raise DomainError(f"fugacities must be positive, got (c, s, q) = ({c}, {s}, {q})")
    if q > 1:
        return SingularityResult(0.0, None, INFLATED)
    if q == 1:
        return t_c_q1(c, s)
    if q >= 1 - Q_ONE_WINDOW:
        return SingularityResult(t_c_q1(c, s).t_c, SIMPLE_POLE, DEFLATED)
    return SingularityResult(_pole_bisect(c, s, q), SIMPLE_POLE, DEFLATED)


def classify(c: float, s: float, q: float) -> SingularityResult:
    return t_p_general(c, s, q)


def t_c(c: float, s: float, q: float) -> float:
    return t_p_general(c, s, q).t_c


def binding_boundary(s: float, q: float = 1.0, tol: float = 1e-14) -> float:
    """Bound/unbound boundary in c at fixed s, by bisection on the phase labels."""
    lo, hi = 1.0, 2.0
    if classify(lo, s, q).phase != UNBOUND or classify(hi, s, q).phase == UNBOUND:
        raise DomainError(f"no binding transition in c in [1, 2] at (s, q) = ({s}, {q})")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if classify(mid, s, q).phase == UNBOUND:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def derivative_jump(s: float, h: float, q: float = 1.0) -> float:
    """|right - left| one-sided slopes of t_c in c across the binding boundary."""
    c0 = binding_boundary(s, q)
    f0 = t_c(c0, s, q)
    left = (f0 - t_c(c0 - h, s, q)) / h
    right = (t_c(c0 + h, s, q) - f0) / h
    return abs(right - left)


# --- densities --------------------------------------------------------------


def density_contacts_q1(c: float, s: float) -> float:
    """Contact density at q = 1; zero up to c_s(s)."""
    if c <= c_s(s):
        return 0.0
    s2 = s * s
    rad = ((1 + s2) ** 2 * c - (1 - s2) ** 2) * (c - 1)
    return (c - 2) / (2 * (c - 1)) + c * (1 + s2) / (2 * math.sqrt(rad))


def density_area_q1_s1(c: float) -> float:
    """Area density at q = 1, s = 1 in the bound phase."""
    if not c > 4.0 / 3.0:
        raise DomainError(f"area density is undefined for c <= 4/3 at q = 1 (c = {c!r})")
    return (2 * (c - 1) + math.sqrt(c * (c - 1))) / (3 * c - 4)


def density_area_q1(c: float, s: float) -> float:
    """Area density at q = 1 for any s in the bound phase.

    Implicit differentiation of the pole condition c (x + T) = 1 with
    T = y + S the continued-fraction function: dT/dq at q = 1 equals
    T x (1 + dT/dx) / sqrt(disc), which gives -dlog t/dlog q in closed form.
    """
    if not c > c_s(s):
        raise DomainError(f"area density is undefined for c <= c_s(s) at q = 1 (c = {c!r}, s = {s!r})")
    t = t_p_q1(c, s)
    x, y = t / s, t * s
    root = math.sqrt(x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1)
    T = (1 + y - x - root) / 2
    T_x = (-1 - (x - y - 1) / root) / 2
    T_y = (1 - (y - x - 1) / root) / 2
    T_q = T * x * (1 + T_x) / root
    dphi_dt = (1 + T_x) / s + s * T_y
    return T_q / (t * dphi_dt)


def _richardson_central(f: Callable[[float], float], u0: float, h: float) -> float:
    def D(step):
        return (f(u0 + step) - f(u0 - step)) / (2 * step)

    return (4 * D(h / 2) - D(h)) / 3


def _richardson_left(f: Callable[[float], float], u0: float, h: float) -> float:
    """Second-order backward difference, then one Richardson step."""

    def D(step):
        return (3 * f(u0) - 4 * f(u0 - step) + f(u0 - 2 * step)) / (2 * step)

    return (4 * D(h / 2) - D(h)) / 3


def fd_density_contacts(c: float, s: float, q: float, step: float = FD_STEP) -> float:
    """-dlog t_c / dlog c by central differences."""
    if q == 1:
        f = lambda u: math.log(t_c_q1(math.exp(u), s).t_c)
    else:
        f = lambda u: math.log(t_p_general(math.exp(u), s, q).t_c)
    return -_richardson_central(f, math.log(c), step)


def fd_density_area(c: float, s: float, q: float, step: float = FD_STEP) -> float:
    """-dlog t_c / dlog q by finite differences.

    For q < 1 the step is capped at 5% of |log q| so the stencil stays
    below q = 1.  At q = 1 a one-sided stencil from below is used.
    """
    if q > 1:
        raise DomainError("area density is not defined for q > 1")

    def f(u):
        qq = math.exp(u)
        if u == 0:
            return math.log(t_c_q1(c, s).t_c)
        return math.log(_pole_bisect(c, s, qq))

    if q == 1:
        return -_richardson_left(f, 0.0, step)
    u0 = math.log(q)
    h = min(step, 0.05 * abs(u0))
    return -_richardson_central(f, u0, h)


def densities_general(c: float, s: float, q: float, method: str = "auto") -> Densities:
    """Contact and area densities at (c, s, q).

    ``method="auto"`` uses closed forms at q = 1 (and within 1e-8 below it)
    and finite differences elsewhere; ``method="fd"`` forces finite
    differences wherever the densities are defined.
    """
    if method not in ("auto", "fd"):
        raise ValueError(f"method must be 'auto' or 'fd', got {method!r}")
    if q > 1:
        raise DomainError(f"densities are not defined in the inflated phase (q = {q!r} > 1)")
    near_one = q == 1 or (method == "auto" and q >= 1 - Q_ONE_WINDOW)
    if near_one:
        cs = c_s(s)
        if c < cs - CRITICAL_TOL:
            return Densities(0.0, None)
        if abs(c - cs) <= CRITICAL_TOL:
            return Densities(0.0, math.inf)
        if method == "fd":
            return Densities(fd_density_contacts(c, s, 1.0), fd_density_area(c, s, 1.0))
        return Densities(density_contacts_q1(c, s), density_area_q1(c, s))
    return Densities(fd_density_contacts(c, s, q), fd_density_area(c, s, q))


# --- Airy asymptotics (s = 1) -----------------------------------------------


def _scaling_variable(t: float, epsilon: float) -> float:
    return 4 ** (1 / 3) * (1 - 4 * t) * epsilon ** (-2 / 3)


def s_airy_asymptotic(t: float, epsilon: float) -> float:
    """S(t, t, 1 - eps) ~ 1/4 + 4^(-2/3) eps^(1/3) Ai'(z)/Ai(z), z = 4^(1/3)(1 - 4t) eps^(-2/3)."""
    if not 0 < epsilon <= 0.05:
        raise DomainError(f"epsilon must lie in (0, 0.05], got {epsilon!r}")
    z = _scaling_variable(t, epsilon)
    if z <= airy_zero_1():
        raise SingularError(f"scaling variable z = {z:.6g} is at or past the first zero of Ai", value=z)
    return 0.25 + 4 ** (-2 / 3) * epsilon ** (1 / 3) * airy_ratio(z)


def c_airy_asymptotic(t: float, epsilon: float) -> float:
    """Asymptotic c for which t is the pole at s = 1, q = 1 - eps."""
    return 1 / (0.75 + (s_airy_asymptotic(t, epsilon) - 0.25))
