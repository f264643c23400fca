from fractions import Fraction

from hypothesis import given, strategies as st

from vesicle import LaurentPoly3

exps = st.tuples(st.integers(0, 4), st.integers(-4, 4), st.integers(0, 6))
polys = st.dictionaries(exps, st.integers(-50, 50), max_size=6).map(LaurentPoly3)


@given(polys)
def test_json_round_trip(p):
    assert LaurentPoly3.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


@given(polys)
def test_mirror_is_involution(p):
    assert p.mirror_s().mirror_s() == p


def test_exact_call():
    p = LaurentPoly3({(1, -1, 0): 2, (0, 2, 1): 3})
    assert p(Fraction(1, 2), Fraction(2), Fraction(3)) == Fraction(1, 2) + 36
    assert LaurentPoly3({(0, 0, 0): 0}) == 0
