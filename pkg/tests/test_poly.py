from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordantype.errors import ParseError, RingMismatchError, UnsupportedCharacteristicError
from jordantype.linalg import GF, QQ
from jordantype.poly import (
    PolyRing,
    contract,
    differentiate,
    format_polynomial,
    monomial_index,
    monomials_below,
    monomials_of_degree,
)

R = PolyRing(QQ, ("x", "y"))
D = R.dual_ring()


def test_monomial_order():
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_of_degree(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomials_below(2, 3)[:3] == ((0, 0), (1, 0), (0, 1))
    assert len(monomials_below(3, 3)) == 10
    idx = monomial_index(2, 3)
    assert idx[(0, 0)] == 0 and idx[(0, 2)] == 5


def test_parse_and_format_round_trip():
    f = R.parse("y^3 - x^2*y^2")
    assert format_polynomial(f) == "-x^2*y^2 + y^3"
    g = R.parse("-1/2*x + 3/4")
    assert format_polynomial(g) == "-1/2*x + 3/4"
    assert R.parse(format_polynomial(f)) == f
    assert R.parse("(x+y)^2") == R.parse("x^2 + 2*x*y + y^2")
    assert R.parse("x/2") == R.parse("1/2*x")


def test_parameters_are_scalars():
    f = R.parse("t*x + y", {"t": Fraction(2, 3)})
    assert f.coefficient((1, 0)) == Fraction(2, 3)
    assert R.parse("t*x", {"t": 0}).is_zero()


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as exc:
        R.parse("x + q")
    assert exc.value.position == 4
    with pytest.raises(ParseError):
        R.parse("x / y")
    with pytest.raises(ParseError):
        R.parse("x +")
    with pytest.raises(ParseError):
        R.parse("x^-1")


def test_degrees_and_forms():
    f = R.parse("x + x^2*y + y^3")
    assert f.degree() == 3 and f.order() == 1
    assert f.leading_form() == R.parse("x^2*y + y^3")
    assert f.initial_form() == R.parse("x")
    assert f.truncate(2) == R.parse("x")
    assert not f.is_homogeneous()
    assert R.zero().degree() == -1
    assert f.evaluate((1, 2)) == 1 + 2 + 8


def test_contraction_and_differentiation():
    F = D.parse("X^2*Y^2")
    assert contract(R.parse("x"), F) == D.parse("X*Y^2")
    assert differentiate(R.parse("x"), F) == D.parse("2*X*Y^2")
    assert contract(R.parse("x^2*y^2"), F) == D.one()
    assert differentiate(R.parse("x^2*y^2"), F) == D.constant(4)
    assert contract(R.parse("x^3"), F).is_zero()


def test_differentiation_needs_large_characteristic():
    R7 = PolyRing(GF(7), ("x", "y"))
    F = R7.dual_ring().parse("X^7")
    with pytest.raises(UnsupportedCharacteristicError):
        differentiate(R7.parse("x"), F)
    assert contract(R7.parse("x"), F) == R7.dual_ring().parse("X^6")


def test_ring_mismatch():
    S = PolyRing(QQ, ("x", "y", "z"))
    with pytest.raises(RingMismatchError):
        contract(S.parse("x"), D.parse("X"))


coeffs = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=6)


@settings(max_examples=80, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    f = sum((R.monomial(e, v) for e, v in a.items()), R.zero())
    g = sum((R.monomial(e, v) for e, v in b.items()), R.zero())
    h = sum((R.monomial(e, v) for e, v in c.items()), R.zero())
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero()
    assert R.parse(format_polynomial(f)) == f


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_contraction_is_a_module_action(a, b, c):
    g = sum((R.monomial(e, v) for e, v in a.items()), R.zero())
    h = sum((R.monomial(e, v) for e, v in b.items()), R.zero())
    F = sum((D.monomial(e, v) for e, v in c.items()), D.zero())
    assert contract(g * h, F) == contract(g, contract(h, F))
    assert differentiate(g * h, F) == differentiate(g, differentiate(h, F))
