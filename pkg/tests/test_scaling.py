import pytest

from vesicle import FitDomainError
from vesicle import scaling
from vesicle.enumeration import default_n_grid

WINDOW = scaling.default_window(6, 1e-6, 1e-4)


def test_law_constants():
    laws = scaling.laws(1.0)
    assert laws["tp_cs"].amplitude == pytest.approx(0.160449, rel=1e-5)
    assert laws["M_q"].amplitude == pytest.approx(1.1686, rel=1e-4)
    assert laws["A_q"].amplitude == pytest.approx(0.42789, rel=1e-4)
    assert laws["M_c"].amplitude == pytest.approx(3.375, rel=1e-14)


def test_pole_law():
    fit = scaling.scaling_tp_at_cs(WINDOW)
    assert abs(fit.exponent - 2 / 3) < 0.01
    assert fit.amplitude == pytest.approx(0.160449, rel=0.02)


def test_pole_law_negative_control():
    # away from c_s the amplitude (and the Airy zero) changes
    fit = scaling.scaling_tp_at_cs(WINDOW, c=1.0)
    assert abs(fit.amplitude / 0.160449 - 1) > 0.5


@pytest.mark.parametrize("side", ["M_q", "A_q", "M_c"])
def test_crossover_laws(side):
    law = scaling.laws()[side]
    fit = scaling.scaling_crossover(WINDOW, side)
    assert fit.amplitude == pytest.approx(law.amplitude, rel=0.02)
    assert fit.extrapolated == pytest.approx(law.exponent, abs=0.02)


def test_area_crossover_amplitude_of_model():
    fit = scaling.scaling_crossover(WINDOW, "A_c")
    assert fit.extrapolated == pytest.approx(-1, abs=1e-3)
    assert fit.amplitude == pytest.approx(2 / 9, rel=1e-4)


@pytest.mark.parametrize("window", [[1e-3] * 3, [1e-4, 1e-3, 1e-2, 0.1, 0.5]])
def test_bad_window(window):
    with pytest.raises(FitDomainError):
        scaling.scaling_tp_at_cs(window)


@pytest.mark.parametrize("name", ["bound", "deflated"])
def test_table_rows_small_grid(name):
    row = scaling.TABLE[name]
    fits = scaling.table_exponents(name, default_n_grid(400, 50, 7))
    assert fits["contacts"].extrapolated == pytest.approx(row.contacts_exponent, abs=0.05)
    assert fits["area"].extrapolated == pytest.approx(row.area_exponent, abs=0.05)
