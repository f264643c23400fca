import pytest
from hypothesis import given, strategies as st

scipy_special = pytest.importorskip("scipy.special")

from vesicle import DomainError  # noqa: E402
from vesicle.airy import airy, airy_prime_zero_1, airy_ratio, airy_zero_1  # noqa: E402


@given(st.floats(-12, 12))
def test_against_scipy(z):
    ai, aip, _, _ = scipy_special.airy(z)
    v = airy(z)
    assert v.ai == pytest.approx(ai, rel=1e-12, abs=1e-15)
    assert v.ai_prime == pytest.approx(aip, rel=1e-12, abs=1e-15)


def test_zeros():
    assert airy_prime_zero_1() == pytest.approx(-1.018792971647471, abs=1e-14)
    assert airy_zero_1() == pytest.approx(-2.338107410459767, abs=1e-14)
    assert abs(airy(airy_prime_zero_1()).ai_prime) < 1e-14


def test_ratio_and_domain():
    ai, aip, _, _ = scipy_special.airy(0.0)
    assert airy_ratio(0.0) == pytest.approx(aip / ai, rel=1e-14)
    with pytest.raises(DomainError):
        airy(13.0)
