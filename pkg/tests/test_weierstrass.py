from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from hh3d.algebra import ParamRat
from hh3d.series import series_mul
from hh3d.weierstrass import EllipticInvariants, gamma_h_solution, wp_coefficients, wp_series

from strategies import fractions


def const(x):
    return ParamRat.const(x)


def wp_ode_residual(inv, order):
    wp = wp_series(inv, order)
    d = wp.derivative()
    lhs = series_mul(d, d)
    rhs = series_mul(series_mul(wp, wp), wp).scale(4) - wp.scale(inv.g2)
    return lhs - rhs.add_constant(-inv.g3)


def test_low_coefficients_symbolic():
    inv = EllipticInvariants.from_family()
    c = wp_coefficients(inv, 6)
    assert c[-2] == 1
    assert c[2] == inv.g2 / 20
    assert c[4] == inv.g3 / 28
    assert c[2] == ParamRat.var("B1") ** 2 * Fraction(3, 20)


def test_against_undetermined_coefficients():
    """Solve the defining ODE with sympy unknowns and compare up to tau^12."""
    g2, g3, t = sp.symbols("g2 g3 t")
    cs = {k: sp.Symbol(f"c{k}") for k in range(0, 11)}
    wp = t ** -2 + sum(c * t ** k for k, c in cs.items())
    expr = sp.expand((sp.diff(wp, t) ** 2 - 4 * wp ** 3 + g2 * wp + g3) * t ** 6)
    eqs = [expr.coeff(t, j) for j in range(2, 13)]
    sol = sp.solve(eqs, list(cs.values()), dict=True)[0]
    inv = EllipticInvariants(const(Fraction(3, 2)), const(Fraction(-5, 7)))
    ours = wp_coefficients(inv, 11)
    for k in range(0, 11):
        expected = sp.sympify(sol[cs[k]]).subs({g2: sp.Rational(3, 2), g3: sp.Rational(-5, 7)})
        got = ours.get(k, const(0))
        assert got == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))


def test_symbolic_ode_residual():
    inv = EllipticInvariants.from_family()
    res = wp_ode_residual(inv, 16)
    assert res.is_zero()
    assert res.order >= 10


@settings(max_examples=60, deadline=None)
@given(fractions, fractions)
def test_ode_residual_random_invariants(g2, g3):
    inv = EllipticInvariants(const(g2), const(g3))
    assert wp_ode_residual(inv, 20).is_zero()


@settings(max_examples=50, deadline=None)
@given(fractions, fractions)
def test_even(g2, g3):
    wp = wp_series(EllipticInvariants(const(g2), const(g3)), 21)
    assert all(k % 2 == 0 for k in wp.plain)


@settings(max_examples=50, deadline=None)
@given(fractions, fractions)
def test_derivative_solves_tangential_equation(g2, g3):
    wp = wp_series(EllipticInvariants(const(g2), const(g3)), 18)
    d = wp.derivative()
    assert (d.derivative().derivative() - series_mul(wp, d).scale(12)).is_zero()


def test_gamma_h_solution():
    q3 = gamma_h_solution(order=14)
    B1 = ParamRat.var("B1")
    assert q3.coeff(0) == -B1 / 2
    assert q3.coeff(-2) == 1
    # q3'' = 6 B1 q3 + 6 q3^2 in the tau picture
    lhs = q3.derivative().derivative()
    rhs = q3.scale(B1 * 6) + series_mul(q3, q3).scale(6)
    assert (lhs - rhs).is_zero()


def test_gamma_h_concrete_B1():
    q3 = gamma_h_solution(B1=Fraction(2), order=6)
    assert q3.coeff(0) == -1
    assert q3.coeff(2) == Fraction(3 * 4, 20)


def test_order_precondition():
    with pytest.raises(ValueError):
        wp_series(EllipticInvariants.from_family(), 2)


def test_discriminant_flag():
    inv = EllipticInvariants(const(3), const(1))
    assert inv.is_degenerate()
    assert not EllipticInvariants.from_family().is_degenerate()
