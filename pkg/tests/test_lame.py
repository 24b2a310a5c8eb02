from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hh3d.algebra import ParamRat
from hh3d.errors import ZeroParameter
from hh3d.lame import classify_theoremB1, lame_coefficients, lame_index, lame_residual
from hh3d.variational import lame_index_of, ve1_operator

from strategies import fractions, nonzero_fractions

F = Fraction
A1, B1, C1 = (ParamRat.var(n) for n in ("A1", "B1", "C1"))


def point(a, b, c):
    return {"A1": F(a), "B1": F(b), "C1": F(c), "h": F(0)}


class TestCoefficients:
    def test_reference_values(self):
        assert lame_coefficients(F(1, 16)).a1 == F(16, 3)
        assert lame_coefficients(1).d2 == -1728

    @settings(max_examples=50, deadline=None)
    @given(nonzero_fractions)
    def test_structure(self, a):
        d = lame_coefficients(a)
        assert d.a1 == 1 / (3 * a)
        assert d.a2.is_zero() and d.b2.is_zero() and d.c2.is_zero()
        assert d.d2 == -1728 * a * a

    @settings(max_examples=20, deadline=None)
    @given(nonzero_fractions)
    def test_closed_forms(self, a):
        d = lame_coefficients(a)
        u = A1 - B1 * a
        assert d.b1 == u * (-6 / a)
        assert d.c1 == u * u * (36 / a) - B1 * B1 * (36 * a)
        assert d.d1 == u ** 3 * (-72 / a) + B1 * B1 * u * (216 * a) + B1 ** 3 * (144 * a * a)

    @settings(max_examples=10, deadline=None)
    @given(nonzero_fractions, st.sampled_from(["Xi1", "Xi2"]))
    def test_series_residual(self, a, branch):
        res = lame_residual(lame_coefficients(a, branch), order=14)
        assert res.is_zero() and res.order >= 8

    def test_b1_sign_against_sympy(self):
        """Independent oracle: expand f'^2 - P(f) with sympy and check the low coefficients vanish."""
        t, a, b, hh = sp.symbols("t A1 B1 h")
        al = sp.Rational(3, 7)
        g2, g3 = 3 * b ** 2, 12 * hh - b ** 3
        wp = t ** -2 + g2 / 20 * t ** 2 + g3 / 28 * t ** 4 + g2 ** 2 / 1200 * t ** 6
        f = 12 * al * wp + 6 * (a - b * al)
        d = lame_coefficients(al)
        to_sp = lambda r: sp.sympify(str(r).replace("^", "**"), locals={"A1": a, "B1": b, "h": hh})
        P = sum(to_sp(getattr(d, x + "1")) * f ** k for x, k in (("a", 3), ("b", 2), ("c", 1), ("d", 0)))
        P += hh * to_sp(d.d2)
        expr = sp.expand((sp.diff(f, t) ** 2 - P) * t ** 6)
        assert all(sp.simplify(expr.coeff(t, k)) == 0 for k in range(0, 6))
        assert to_sp(d.b1) == sp.expand(-6 / al * (a - b * al))

    def test_branch_symmetry(self):
        d1, d2 = lame_coefficients(F(2, 5), "Xi1"), lame_coefficients(F(2, 5), "Xi2")
        for k, v in d1.coefficients().items():
            assert v.subs({"A1": C1}) == d2.coefficients()[k]

    def test_zero_alpha(self):
        with pytest.raises(ZeroParameter):
            lame_coefficients(0)


class TestClassification:
    @pytest.mark.parametrize("a,n", [(F(1, 6), 1), (F(1, 2), 2), (F(1), 3)])
    def test_case_one(self, a, n):
        v = classify_theoremB1(lame_coefficients(a))
        assert (v.case, v.index) == ("I", n)
        assert lame_index(a) == n
        wp_coef, _ = ve1_operator(1, a)
        assert lame_index_of(wp_coef) == n

    def test_one_sixteenth(self):
        for branch, X in (("Xi1", "A1"), ("Xi2", "C1")):
            v = classify_theoremB1(lame_coefficients(F(1, 16), branch))
            assert (v.case, v.index) == ("II1", 1)
            (alt,) = v.alternatives
            b1 = dict(alt)["b1"]
            # b1 = 0 exactly when X1/B1 = 1/16
            assert b1 == (ParamRat.var(X) * 16 - B1) * -6
            vals = point(1, 16, 1)
            assert v.holds_at(vals)
            vals[X] = F(2)
            assert not v.holds_at(vals)

    def test_five_sixteenths(self):
        v = classify_theoremB1(lame_coefficients(F(5, 16)))
        assert (v.case, v.index) == ("II2", 2)

    def test_case_II3_impossible(self):
        v = classify_theoremB1(lame_coefficients(F(35, 48)))
        assert (v.case, v.index) == ("II3", 3)
        assert v.impossible
        assert v.notes

    @pytest.mark.parametrize("m", [4, 5, 6, 7, 9])
    def test_case_IIm(self, m):
        v = classify_theoremB1(lame_coefficients(F(4 * m * m - 1, 48)))
        assert (v.case, v.index) == ("IIm", m)
        # d2 != 0 kills the "d1 = d2 = 0" alternative, and the c alternative needs B1 = 0
        for alt in v.open_alternatives():
            labels = [lab for lab, _ in alt]
            assert "c1" in labels and "b1" in labels
        if m % 6 in (0, 3):
            assert v.impossible

    def test_case_three_needs_B1_zero(self):
        a = F(55, 432)  # n + 1/2 = 4/3
        v = classify_theoremB1(lame_coefficients(a))
        assert v.case == "III"
        assert len(v.open_alternatives()) == 1
        assert dict(v.open_alternatives()[0])["b1^2 - 3 a1 c1"] == B1 * B1 * 36
        assert v.holds_at(point(3, 0, 5))

    @settings(max_examples=50, deadline=None)
    @given(nonzero_fractions, nonzero_fractions, fractions)
    def test_case_three_never_fires(self, b, a, c):
        for alpha in (F(55, 432), F(5, 192)):  # n + 1/2 = 4/3 and 3/4
            v = classify_theoremB1(lame_coefficients(alpha))
            assert v.case == "III"
            assert not v.holds_at(point(a, b, c))

    def test_no_case(self):
        v = classify_theoremB1(lame_coefficients(F(3, 4)))
        assert v.case is None and v.impossible
