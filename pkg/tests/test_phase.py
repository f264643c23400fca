import math

import pytest
from hypothesis import given, strategies as st

from vesicle import DomainError, ModelPoint
from vesicle import phase
from vesicle.enumeration import transfer
from vesicle.qseries import S_q1

S_SET = (1 / 16, 1 / 4, 1.0, 4.0, 16.0)
s_values = st.floats(0.1, 10.0)


def _dp_rate(c, s, q, n=3000):
    r = transfer(n, ModelPoint(c, s, q))
    return math.exp(-(r.log_Z[-1] - r.log_Z[-2]))


def test_closed_forms():
    assert phase.t_r(1) == 0.25
    assert phase.c_s(1) == pytest.approx(4 / 3, abs=1e-15)
    assert phase.c_s(1 / 16) == pytest.approx(289 / 273, rel=1e-15)
    assert phase.t_c(2, 1, 1) == pytest.approx((math.sqrt(2) - 1) / 2, rel=1e-14)
    with pytest.raises(DomainError):
        phase.t_p_q1(1.0, 1.0)


def test_labels():
    assert phase.classify(1, 1, 1).phase == "unbound"
    assert phase.classify(4 / 3, 1, 1).phase == "critical"
    r = phase.classify(2, 1, 1)
    assert (r.phase, r.kind) == ("bound", "simple_pole")
    r = phase.classify(1, 1, 1.5)
    assert (r.t_c, r.kind, r.phase) == (0.0, None, "inflated")
    assert phase.classify(1, 1, 0.5).phase == "deflated"


@pytest.mark.parametrize("s", S_SET)
def test_continuity_at_binding(s):
    cs = phase.c_s(s)
    assert phase.t_p_q1(cs, s) == pytest.approx(phase.t_r(s), abs=1e-12)
    assert phase.t_c(cs + 1e-9, s, 1) == pytest.approx(phase.t_r(s), abs=1e-8)
    assert phase.binding_boundary(s) == pytest.approx(cs, abs=1e-10)


@given(st.floats(1.0, 5.0), s_values)
def test_pole_identity(dc, s):
    c = phase.c_s(s) + dc
    t = phase.t_p_q1(c, s)
    lhs, rhs = phase.pole_identity_sides(t, c, s)
    assert lhs >= 0 and rhs >= -1e-12
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)
    x, y = t / s, t * s
    assert abs(1 - c * (x + y + S_q1(x, y))) < 1e-10


@given(st.floats(0.3, 4.0), s_values, st.floats(0.2, 1.0))
def test_s_symmetry(c, s, q):
    assert phase.t_c(c, s, q) == pytest.approx(phase.t_c(c, 1 / s, q), rel=1e-11)


@given(st.floats(0.3, 4.0), s_values, st.floats(0.2, 1.0))
def test_monotone_in_c_and_q(c, s, q):
    tc = phase.t_c(c, s, q)
    assert phase.t_c(c * 1.1, s, q) <= tc
    assert phase.t_c(c, s, min(1.0, q * 1.05)) <= tc


@given(st.floats(0.1, 4.0), st.floats(0.2, 5.0), st.floats(0.2, 0.95))
def test_pole_against_transfer_growth(c, s, q):
    assert phase.t_c(c, s, q) == pytest.approx(_dp_rate(c, s, q), rel=1e-8)


@pytest.mark.parametrize("c,s", [(1.0, 1.0), (2.0, 1.0), (1.5, 3.0), (0.6, 0.5)])
def test_limit_q_to_one(c, s):
    ref = phase.t_c(c, s, 1)
    assert phase.t_c(c, s, 1 - 1e-9) == ref
    if c > phase.c_s(s):
        assert abs(phase.t_c(c, s, 1 - 1e-7) - ref) < 1e-6
    assert abs(phase.t_c(c, s, 1 - 1e-6) - ref) < 1e-3


def test_c_of_tp_inverts():
    tp = phase.t_c(1.7, 0.8, 0.6)
    assert phase.c_of_tp(tp, 0.8, 0.6) == pytest.approx(1.7, rel=1e-10)


def test_contact_density_closed_form():
    assert phase.density_contacts_q1(2, 1) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert phase.density_contacts_q1(1.2, 1) == 0.0


def test_area_density_formula_value():
    # value of the closed form as implemented
    assert phase.density_area_q1_s1(2) == pytest.approx((2 + math.sqrt(2)) / 2, abs=1e-12)
    with pytest.raises(DomainError):
        phase.density_area_q1_s1(1.2)
    # its own limits: pole 4/9 at 4/3, constant 1 at large c
    assert (1e-9 * phase.density_area_q1_s1(4 / 3 + 1e-9)) == pytest.approx(4 / 9, rel=1e-6)
    assert phase.density_area_q1_s1(1e9) == pytest.approx(1, rel=1e-6)


def test_true_area_density_vanishes_when_tightly_bound():
    assert phase.density_area_q1(1e6, 1) < 1e-6


@pytest.mark.parametrize("c,s", [(2.0, 1.0), (1.6, 2.5), (3.0, 0.3)])
def test_area_density_agrees_with_fd_and_transfer(c, s):
    exact = phase.density_area_q1(c, s)
    assert phase.fd_density_area(c, s, 1.0) == pytest.approx(exact, rel=1e-7)
    n = 4000
    mean_a = transfer(n, ModelPoint(c, s, 1.0)).mean_area
    slope = mean_a[-1] - mean_a[-2]
    assert slope == pytest.approx(exact, rel=1e-5)


def test_true_area_density_at_s1():
    c = 2.0
    assert phase.density_area_q1(c, 1) == pytest.approx(math.sqrt(2) / 4, rel=1e-13)


@given(st.floats(0.3, 3.0), st.floats(0.3, 3.0), st.floats(0.3, 0.95))
def test_densities_positive(c, s, q):
    d = phase.densities_general(c, s, q)
    assert d.contacts > 0 and d.area > 0


def test_densities_special_cases():
    with pytest.raises(DomainError):
        phase.densities_general(1, 1, 1.2)
    assert phase.densities_general(1, 1, 1) == phase.Densities(0.0, None)
    d = phase.densities_general(4 / 3, 1, 1)
    assert d.contacts == 0 and math.isinf(d.area)


def test_fd_contacts_matches_closed_form():
    assert phase.fd_density_contacts(2, 1, 1) == pytest.approx(math.sqrt(2) / 2, abs=1e-8)


def test_airy_asymptotics_near_one():
    eps = 1e-4
    t = 0.2499
    from vesicle.qseries import S_cfrac
    from vesicle.model import XYPoint
    exact = S_cfrac(XYPoint(t, t, 1 - eps), depth=4096)
    assert phase.s_airy_asymptotic(t, eps) == pytest.approx(exact, rel=5e-3)
    with pytest.raises(DomainError):
        phase.s_airy_asymptotic(t, 0.5)
