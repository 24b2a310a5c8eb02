from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hh3d.algebra import ParamRat
from hh3d.errors import InsufficientOrder, LogSquared
from hh3d.series import LogLaurentSeries, product_coeff, residue, series_integrate, series_mul

from strategies import fractions, series

S = LogLaurentSeries


def test_monomial_product_and_window():
    a = S.monomial(1, -3, order=2)
    b = S.monomial(Fraction(1, 7), 4, order=9)
    p = series_mul(a, b)
    assert p.coeff(1) == Fraction(1, 7)
    assert p.order == min(2 + 4, 9 - 3)
    with pytest.raises(InsufficientOrder):
        p.coeff(p.order)


def test_coefficients_below_window_are_exact_zero():
    a = S({2: 1}, order=5)
    assert a.coeff(-10).is_zero()
    assert a.min_exp == 2


def test_integrate_inverse_tau_gives_log():
    s = series_integrate(S({-1: 3, 2: 1}, order=4))
    assert s.log_coeff(0) == 3
    assert s.coeff(3) == Fraction(1, 3)
    assert s.order == 5


def test_residue_examples():
    assert residue(S({-1: 3, 1: 1}, order=3)) == 3
    with pytest.raises(InsufficientOrder):
        residue(S({-3: 1}, order=-1))


def test_log_squared_rejected():
    a = series_integrate(S({-1: 1}, order=3))
    with pytest.raises(LogSquared):
        series_mul(a, a)
    with pytest.raises(LogSquared):
        series_integrate(a)


def test_log_derivative():
    # d/dtau (tau^2 log tau) = 2 tau log tau + tau
    a = S(logpart={2: 1}, order=6)
    d = a.derivative()
    assert d.log_coeff(1) == 2
    assert d.coeff(1) == 1


def test_dump_format():
    a = S({-2: 1, 1: Fraction(-1, 2)}, logpart={0: 5}, order=4)
    assert a.dump().splitlines() == ["-2: 1", "1: -1/2", "log 0: 5", "window: [-2, 4)"]


def test_add_constant_needs_room():
    with pytest.raises(InsufficientOrder):
        S({-3: 1}, order=0).add_constant(1)


def test_symbolic_coefficients():
    A1 = ParamRat.var("A1")
    a = S({-1: A1, 0: 1}, order=3)
    assert residue(series_mul(a, a)) == A1 * 2


@settings(max_examples=60)
@given(series(), series())
def test_product_commutes(a, b):
    assert series_mul(a, b) == series_mul(b, a)


@settings(max_examples=60)
@given(series(), series(), st.data())
def test_window_rule_ignores_unknown_coefficients(a, b, data):
    """Adding junk at or above a.order never changes the product inside its window."""
    extra = data.draw(st.dictionaries(st.integers(a.order, a.order + 5), fractions, max_size=3))
    junk = S({**a.plain, **extra}, min_exp=a.min_exp, order=a.order + 6)
    p = series_mul(a, b)
    q = series_mul(junk, b)
    assert q.truncate(p.order) == p


@settings(max_examples=60)
@given(series(), series())
def test_product_coeff_matches_product(a, b):
    p = series_mul(a, b)
    for k in range(p.min_exp, p.order):
        assert product_coeff(a, b, k) == p.coeff(k)


@settings(max_examples=60)
@given(series())
def test_residue_of_derivative_vanishes(a):
    d = a.derivative()
    if d.order > -1:
        assert residue(d).is_zero()


@settings(max_examples=60)
@given(series())
def test_derivative_then_integrate(a):
    base = S({k: v for k, v in a.plain.items() if k != 0}, min_exp=a.min_exp, order=a.order)
    back = series_integrate(base.derivative())
    assert back.order == base.order
    assert back == base


@settings(max_examples=60)
@given(series(), series())
def test_leibniz(a, b):
    lhs = series_mul(a, b).derivative()
    rhs = series_mul(a.derivative(), b) + series_mul(a, b.derivative())
    assert lhs.agrees_with(rhs)
