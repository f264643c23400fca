"""Generating functions of the vesicle model.

Variables: x and y weight east and north steps, c weights contacts and q
weights enclosed plaquettes.  The length generating function follows
from ``G(c, s, q, t) = F(c, t/s, t*s, q)``.

Three independent representations of F are provided and cross-checked in
the tests:

* the necklace form ``1 / (1 - c (x + y + S))`` with the staircase
  function S written as a ratio of q-Bessel series (``F_necklace``);
* the closed form at q = 1 (``F_closed_q1``);
* the continued fraction obtained by unrolling the functional equation
  for S (``F_cfrac``).

``series_in_t`` expands G exactly in t with integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import mpmath
import numpy as np

from .errors import BoundsError, ConvergenceError, DomainError, SingularError
from .model import DEFAULT_POLICY, ModelPoint, TruncationPolicy, XYPoint
from .poly import LaurentPoly3

# q in (1 - Q_ONE_WINDOW, 1) is too close to 1 for the q-Bessel series
Q_ONE_WINDOW = 1e-8
CFRAC_TOL = 1e-14
CFRAC_MAX_DEPTH = 1 << 24
MAX_SERIES_ORDER = 24
# beyond this value of the fixed variable the continued fraction converges too slowly
CFRAC_FIXED_MAX = 0.9


def q_pochhammer(t: float, q: float, n: int) -> float:
    """(t; q)_n = prod_{k<n} (1 - t q^k)."""
    if n < 0:
        raise BoundsError(f"n must be non-negative, got {n}")
    out = 1.0
    tk = t
    for _ in range(n):
        out *= 1.0 - tk
        tk *= q
    return out


# --- q-Bessel series ---------------------------------------------------------


def _H_terms_profile(x: float, y: float, q: float, policy: TruncationPolicy) -> Tuple[float, int]:
    """log10 of the largest term of the H series and the number of terms needed.

    Done in log space so that it cannot overflow for q close to 1.
    """
    if x == 0:
        return 0.0, 1
    log_term = 0.0
    peak = 0.0
    qn = 1.0  # q**n
    small = 0
    log_tol = math.log(policy.abs_tol)
    for n in range(policy.max_terms):
        qn1 = qn * q
        den = (1.0 - qn1) * (1.0 - y * qn1)
        if den == 0.0:
            raise SingularError(f"(qy; q)_n vanishes at n={n + 1}", value=0.0)
        log_term += math.log(q * x * qn) - math.log(abs(den))
        peak = max(peak, log_term)
        qn = qn1
        if log_term < log_tol + min(0.0, -peak):
            small += 1
            if small == 2:
                return peak / math.log(10), n + 2
        else:
            small = 0
    raise ConvergenceError(f"H series did not converge within {policy.max_terms} terms")


def _H_mp(x: float, y: float, q: float, policy: TruncationPolicy):
    """H as an mpmath number, with working precision raised to absorb cancellation.

    Terms alternate in sign and, for q near 1, grow enormously before the
    q^(n choose 2) factor wins.  The working precision is set from the
    largest term, then raised further if the sum itself turns out small.
    """
    if not 0 < q < 1:
        raise DomainError(f"H series needs 0 < q < 1, got q={q!r}")
    if x < 0 or y < 0:
        raise DomainError("H series needs x, y >= 0")
    peak_digits, n_terms = _H_terms_profile(x, y, q, policy)
    extra = 0
    while True:
        dps = 25 + int(peak_digits) + extra
        with mpmath.workdps(dps):
            xm, ym, qm = mpmath.mpf(x), mpmath.mpf(y), mpmath.mpf(q)
            term = mpmath.mpf(1)
            total = mpmath.mpf(1)
            qn = mpmath.mpf(1)
            small = 0
            tol = mpmath.mpf(policy.abs_tol)
            for n in range(policy.max_terms):
                qn1 = qn * qm
                den = (1 - qn1) * (1 - ym * qn1)
                if den == 0:
                    raise SingularError(f"(qy; q)_n vanishes at n={n + 1}", value=0.0)
                term = -term * qm * xm * qn / den
                total += term
                qn = qn1
                if abs(term) < tol * min(1, abs(total)):
                    small += 1
                    if small == 2:
                        break
                else:
                    small = 0
            else:
                raise ConvergenceError(f"H series did not converge within {policy.max_terms} terms")
            lost = peak_digits - float(mpmath.log10(abs(total))) if total != 0 else dps
            if lost < dps - 20 or extra > 4 * dps:
                return +total, dps
        extra += int(lost) + 10


def H(xy: XYPoint, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """q-Bessel series sum_n (-q x)^n q^(n choose 2) / ((q;q)_n (q y;q)_n)."""
    value, _ = _H_mp(xy.x, xy.y, xy.q, policy)
    return float(value)


def S_explicit(xy: XYPoint, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Staircase-polygon generating function y [H(qx, y, q) / H(x, y, q) - 1]."""
    x, y, q = xy.x, xy.y, xy.q
    h_x, dps_a = _H_mp(x, y, q, policy)
    h_qx, dps_b = _H_mp(q * x, y, q, policy)
    if h_x <= 0:
        raise SingularError(
            f"H(x={x}, y={y}, q={q}) = {float(h_x):.3g} <= 0: past the first pole of S", value=float(h_x)
        )
    with mpmath.workdps(max(dps_a, dps_b)):
        return float(mpmath.mpf(y) * (h_qx / h_x - 1))


def S_q1(x: float, y: float) -> float:
    """S at q = 1: the smaller root of S = (x + S)(y + S)."""
    rad = x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1
    if rad < 0 or x + y > 1:
        raise SingularError(f"(x, y) = ({x}, {y}) is past the square-root branch point", value=rad)
    # the root (1 - x - y - sqrt(rad)) / 2 rewritten without cancellation
    b = 1 - x - y
    return 2 * x * y / (b + math.sqrt(rad)) if b + math.sqrt(rad) > 0 else b / 2


def functional_equation_residual(xy: XYPoint, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """|S(x) - [q x + S(q x)] [y + S(x)]| using the q-Bessel form of S."""
    x, y, q = xy.x, xy.y, xy.q
    s_x = S_explicit(xy, policy)
    s_qx = S_explicit(XYPoint(q * x, y, q), policy)
    return abs(s_x - (q * x + s_qx) * (y + s_x))


# --- continued fraction ------------------------------------------------------


def _cfrac_T(x: float, y: float, q: float, depth: int) -> float:
    """y + S(x) from the continued fraction truncated at ``depth`` levels (tail 0).

    T(x) = y / (1 + y - q x - T(q x)), evaluated from the bottom level up.
    On the principal branch every partial denominator is positive (the
    truncated values bound the true ones from below), so a non-positive
    one means x lies past the first pole of S.
    """
    if depth < 1:
        raise BoundsError(f"depth must be >= 1, got {depth}")
    xs = (x * np.power(q, np.arange(depth, 0, -1, dtype=float))).tolist()
    one_y = 1.0 + y
    T = 0.0
    for xk in xs:
        den = one_y - xk - T
        if den <= 0.0:
            raise SingularError("non-positive denominator in continued fraction: past the pole", value=den)
        T = y / den
    return T


def _converged(fn, depth: int, tol: float = CFRAC_TOL, max_depth: int = CFRAC_MAX_DEPTH):
    """Double ``depth`` until fn(depth) changes by less than tol (relative to max(1, |value|))."""
    prev = fn(depth)
    while True:
        depth *= 2
        if depth > max_depth:
            raise ConvergenceError(f"continued fraction not converged at depth {depth // 2}")
        cur = fn(depth)
        if abs(cur - prev) < tol * max(1.0, abs(cur)):
            return cur, depth
        prev = cur


def _ordered(x: float, y: float) -> Tuple[float, float]:
    """(larger, smaller): S is symmetric in x and y, and the continued fraction
    only converges to the physical branch when the fixed variable is below 1."""
    if min(x, y) >= 1:
        raise DomainError(f"continued fraction needs min(x, y) < 1, got ({x}, {y})")
    return (x, y) if y <= x else (y, x)


def S_cfrac(xy: XYPoint, depth: int = 64, tol: float = CFRAC_TOL) -> float:
    """S from the converged continued fraction (q <= 1, min(x, y) < 1)."""
    if not 0 < xy.q <= 1:
        raise DomainError(f"continued fraction needs 0 < q <= 1, got {xy.q}")
    big, small = _ordered(xy.x, xy.y)
    T, _ = _converged(lambda d: _cfrac_T(big, small, xy.q, d), depth, tol)
    return T - small


def F_cfrac(c: float, x: float, y: float, q: float, depth: int = 64, converge: bool = True,
            tol: float = CFRAC_TOL) -> float:
    """F = 1 / (1 - c x - c y / (1 + y - q x - y / (1 + y - q^2 x - ...))).

    x and y are swapped first if needed so that the fixed one is the
    smaller.  With ``converge`` the depth is doubled from ``depth`` until
    successive values agree to ``tol``; otherwise exactly ``depth`` levels
    are used.
    """
    if depth < 1:
        raise BoundsError(f"depth must be >= 1, got {depth}")
    if not 0 < q <= 1:
        raise DomainError(f"continued fraction needs 0 < q <= 1, got {q}")
    big, small = _ordered(x, y)

    def at(d):
        den = 1.0 - c * big - c * _cfrac_T(big, small, q, d)
        if den <= 0:
            raise SingularError(f"point is at or beyond the pole (1/F = {den:.3g})", value=den)
        return 1.0 / den

    if not converge:
        return at(depth)
    return _converged(at, depth, tol)[0]


def necklace_sum(x: float, y: float, q: float, depth: int = 64, tol: float = CFRAC_TOL,
                 policy: TruncationPolicy = DEFAULT_POLICY) -> Tuple[float, int]:
    """x + y + S(x, y, q) for 0 < q <= 1, plus the continued-fraction depth used.

    The continued fraction is used while min(x, y) < CFRAC_FIXED_MAX, the
    q-Bessel ratio beyond (returned depth unchanged).  SingularError
    signals a point past the first pole of S.
    """
    big, small = max(x, y), min(x, y)
    if small < CFRAC_FIXED_MAX:
        T, used = _converged(lambda d: _cfrac_T(big, small, q, d), depth, tol)
        return big + T, used
    if q * big >= 1:
        raise SingularError(f"q * max(x, y) = {q * big:.3g} >= 1: past the first pole of S", value=q * big)
    return x + y + S_explicit(XYPoint(x, y, q), policy), depth


# --- closed and necklace forms ---------------------------------------------


def F_closed_q1(c: float, x: float, y: float) -> float:
    """F(c, x, y, 1) = 1 / (1 - c/2 [x + y + 1 - sqrt(x^2 - 2xy + y^2 - 2x - 2y + 1)])."""
    rad = x * x - 2 * x * y + y * y - 2 * x - 2 * y + 1
    if rad < 0:
        raise SingularError(f"negative radicand {rad:.3g}: past the branch point", value=rad)
    den = 1 - 0.5 * c * (x + y + 1 - math.sqrt(rad))
    if den <= 0:
        raise SingularError(f"point is at or beyond the pole (1/F = {den:.3g})", value=den)
    return 1 / den


def _S_routed(x: float, y: float, q: float, policy: TruncationPolicy) -> float:
    if q == 1:
        return S_q1(x, y)
    if q > 1:
        raise DomainError(f"q > 1 has zero radius of convergence (q={q})")
    if q > 1 - Q_ONE_WINDOW:
        return S_cfrac(XYPoint(x, y, q), depth=1024)
    try:
        return S_explicit(XYPoint(x, y, q), policy)
    except ConvergenceError:
        # q close to 1: too many q-Bessel terms
        return S_cfrac(XYPoint(x, y, q), depth=1024)


def F_necklace(c: float, x: float, y: float, q: float, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """F = 1 / (1 - c [x + y + S(x, y, q)]).

    S comes from the q-Bessel ratio for q < 1 - 1e-8, from the continued
    fraction inside that window, and from the quadratic at q = 1.
    """
    if x == 0 and y == 0:
        return 1.0
    S = _S_routed(x, y, q, policy)
    den = 1 - c * (x + y + S)
    if den <= 0:
        raise SingularError(f"point is at or beyond the pole (1/F = {den:.3g})", value=den)
    return 1 / den


def G_eval(point: ModelPoint, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """G(c, s, q, t) = F(c, t/s, t s, q)."""
    xy = point.xy()
    return F_necklace(point.c, xy.x, xy.y, point.q, policy)


# --- exact expansion in t ----------------------------------------------------

QPoly = np.ndarray  # object array of Python ints, index = power of q
Graded = Dict[int, QPoly]  # power of x -> coefficient; power of y fixed by degree


def _qadd(a: QPoly, b: QPoly) -> QPoly:
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] += b
    return out


def _qshift(a: QPoly, k: int) -> QPoly:
    return np.concatenate([np.zeros(k, dtype=object), a]) if k else a


def _gmul(a: Graded, b: Graded, acc: Graded) -> None:
    for i1, p1 in a.items():
        for i2, p2 in b.items():
            prod = np.convolve(p1, p2)
            i = i1 + i2
            acc[i] = _qadd(acc[i], prod) if i in acc else prod


def _q(*coeffs) -> QPoly:
    return np.array(coeffs, dtype=object)


def staircase_series(order: int) -> List[Graded]:
    """S graded by total degree in (x, y), exact, up to ``order``.

    Built degree by degree from S = [q x + S(q x)] [y + S]: the degree-d
    part only needs lower degrees because both factors start at degree 1.
    """
    S: List[Graded] = [{} for _ in range(order + 1)]
    U: List[Graded] = [{} for _ in range(order + 1)]  # q x + S(q x)
    V: List[Graded] = [{} for _ in range(order + 1)]  # y + S
    if order >= 1:
        U[1] = {1: _q(0, 1)}
        V[1] = {0: _q(1)}
    for d in range(2, order + 1):
        acc: Graded = {}
        for d1 in range(1, d):
            _gmul(U[d1], V[d - d1], acc)
        S[d] = acc
        U[d] = {i: _qshift(p, i) for i, p in acc.items()}
        V[d] = acc
    return S


@dataclass(frozen=True)
class SeriesInT:
    """Exact coefficients of G in powers of t; entry n is Z_n(c, s, q)."""

    coefficients: Tuple[LaurentPoly3, ...]

    def __getitem__(self, n: int) -> LaurentPoly3:
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def to_json_obj(self) -> list:
        return [p.to_json_obj() for p in self.coefficients]


def series_in_t(order: int) -> SeriesInT:
    """Z_0..Z_order from the functional equation, necklace formula and x = t/s, y = t s."""
    if not isinstance(order, int) or not 0 <= order <= MAX_SERIES_ORDER:
        raise BoundsError(f"order must be an integer in [0, {MAX_SERIES_ORDER}], got {order!r}")
    S = staircase_series(order)
    X: List[Graded] = [{} for _ in range(order + 1)]
    if order >= 1:
        X[1] = {1: _q(1), 0: _q(1)}
    for d in range(2, order + 1):
        X[d] = S[d]

    # powers[k][d] = degree-d part of X^k; F = sum_k c^k X^k
    prev: List[Graded] = [{} for _ in range(order + 1)]
    prev[0] = {0: _q(1)}
    coeffs: List[Dict] = [dict() for _ in range(order + 1)]
    coeffs[0][(0, 0, 0)] = 1
    for k in range(1, order + 1):
        cur: List[Graded] = [{} for _ in range(order + 1)]
        for d in range(k, order + 1):
            acc: Graded = {}
            for e in range(1, d - k + 2):
                _gmul(X[e], prev[d - e], acc)
            cur[d] = acc
            for i, qp in acc.items():
                es = d - 2 * i  # x^i y^(d-i) -> t^d s^(d-2i)
                for a, v in enumerate(qp):
                    if v:
                        coeffs[d][(k, es, a)] = coeffs[d].get((k, es, a), 0) + int(v)
        prev = cur
    return SeriesInT(tuple(LaurentPoly3(cf) for cf in coeffs))
