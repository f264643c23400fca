import numpy as np
import pytest
from hypothesis import given, strategies as st

from vesicle import FitDomainError
from vesicle.fitting import asymptotic_amplitude, extrapolate_slopes, loglog_fit, power_law_fit


@given(st.floats(-2, 2), st.floats(0.1, 10))
def test_exact_power_law(alpha, amp):
    xs = np.geomspace(1e-4, 1e-1, 8)
    fit = loglog_fit(xs, amp * xs ** alpha)
    assert fit.exponent == pytest.approx(alpha, abs=1e-9)
    assert fit.amplitude == pytest.approx(amp, rel=1e-9)


def test_correction_is_removed():
    xs = np.geomspace(1e-6, 1e-3, 10)
    ys = 0.3 * xs ** (2 / 3) * (1 + 2 * xs ** (1 / 3))
    extrap, _ = extrapolate_slopes(xs, ys, 1 / 3)
    assert abs(extrap - 2 / 3) < 2e-3
    assert asymptotic_amplitude(xs, ys, 2 / 3, 1 / 3) == pytest.approx(0.3, rel=1e-9)
    assert power_law_fit(xs, ys, 2 / 3, 1 / 3).amplitude == pytest.approx(0.3, rel=1e-9)


def test_finite_size_direction():
    ns = np.array([50, 100, 200, 400, 800])
    extrap, _ = extrapolate_slopes(ns, ns ** 1.5 * (1 + 3 / ns), -1)
    assert extrap == pytest.approx(1.5, abs=1e-3)


@pytest.mark.parametrize("ys", [[1, -1, 2], [1, float("nan"), 2]])
def test_bad_data(ys):
    with pytest.raises(FitDomainError):
        loglog_fit([1, 2, 3], ys)
