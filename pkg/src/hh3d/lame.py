"""Lamé-form normal variational equations and their algebraic classification.

Each normal branch reads xi'' = f xi with f = 12 alpha1 wp + 6 (X1 - B1 alpha1),
X1 = A1 on the first branch and C1 on the second.  Since wp satisfies
(wp')^2 = 4 wp^3 - g2 wp - g3, the function f obeys (f')^2 = P(f, h) with

    P(f, h) = (a1 + h a2) f^3 + (b1 + h b2) f^2 + (c1 + h c2) f + (d1 + h d2).

The coefficients are obtained here by rewriting (f')^2 as a polynomial in
wp and matching powers, never by transcription.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PARAMS, ParamRat, rational_sqrt
from .errors import ZeroParameter
from .series import series_mul
from .weierstrass import EllipticInvariants, wp_series

F = Fraction
BRANCH_PARAM = {"Xi1": "A1", "Xi2": "C1"}


class ZeroAlpha(ZeroParameter):
    pass


@dataclass(frozen=True)
class LameData:
    a1: ParamRat
    a2: ParamRat
    b1: ParamRat
    b2: ParamRat
    c1: ParamRat
    c2: ParamRat
    d1: ParamRat
    d2: ParamRat
    branch: str
    alpha1: Fraction

    def coefficients(self):
        return {k: getattr(self, k) for k in ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")}

    def f_shift(self):
        """The constant 6 (X1 - B1 alpha1) added to 12 alpha1 wp."""
        return lame_shift(self.alpha1, self.branch)


def lame_shift(alpha1, branch):
    x = ParamRat.var(BRANCH_PARAM[branch])
    return (x - ParamRat.var("B1") * F(alpha1)) * 6


def _poly_mul(p, q, zero):
    out = [zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


def _split_h(c):
    """Write c = c0 + h c1 with c0, c1 free of h."""
    if c.num.degree_in("h") > 1 or c.den.degree_in("h") > 0:
        raise ValueError(f"coefficient {c} is not affine in h")
    c0 = c.subs({"h": 0})
    c1 = c.derivative("h")
    return c0, c1


def lame_coefficients(alpha1, branch="Xi1"):
    """Coefficients of (f')^2 = P(f, h) for the given branch ("Xi1" or "Xi2")."""
    alpha1 = F(alpha1)
    if alpha1 == 0:
        raise ZeroAlpha("alpha1 must be nonzero")
    if branch not in BRANCH_PARAM:
        raise ValueError(f"unknown branch {branch!r}")
    zero = ParamRat.const(0, PARAMS)
    inv = EllipticInvariants.from_family()
    a = ParamRat.const(12 * alpha1, PARAMS)
    k = lame_shift(alpha1, branch)
    # f as a polynomial in wp (index = power of wp)
    f = [k, a]
    # (f')^2 = a^2 (wp')^2 = a^2 (4 wp^3 - g2 wp - g3)
    target = [-(a * a) * inv.g3, -(a * a) * inv.g2, zero, a * a * 4]
    # match sum_j P_j f^j against target from the top power down
    powers = [[ParamRat.const(1, PARAMS)]]
    for _ in range(3):
        powers.append(_poly_mul(powers[-1], f, zero))
    P = [zero] * 4
    residual = list(target)
    for j in (3, 2, 1, 0):
        coef = residual[j] / powers[j][j]
        P[j] = coef
        for i, v in enumerate(powers[j]):
            residual[i] = residual[i] - coef * v
    assert all(r.is_zero() for r in residual)
    (d1, d2), (c1, c2), (b1, b2), (a1, a2) = (_split_h(p) for p in P)
    return LameData(a1, a2, b1, b2, c1, c2, d1, d2, branch, alpha1)


def lame_residual(data, order=14):
    """(f')^2 - P(f, h) as a series in tau; zero within its window when the data is right."""
    inv = EllipticInvariants.from_family()
    f = wp_series(inv, order).scale(12 * data.alpha1).add_constant(data.f_shift())
    h = ParamRat.var("h")
    fp = f.derivative()
    lhs = series_mul(fp, fp)
    f2 = series_mul(f, f)
    f3 = series_mul(f2, f)
    rhs = (f3.scale(data.a1 + h * data.a2) + f2.scale(data.b1 + h * data.b2)
           + f.scale(data.c1 + h * data.c2))
    rhs = rhs.add_constant(data.d1 + h * data.d2)
    return lhs - rhs


@dataclass(frozen=True)
class LameVerdict:
    """Outcome of the Lamé classification.

    ``alternatives`` lists ways the case can hold; each is a list of
    (label, expression) pairs that must all vanish.  An empty list of
    alternatives means no way out; ``case`` None means a1 fits no case.
    """

    case: object  # "I", "II1", "II2", "II3", "IIm", "III" or None
    index: object = None  # n for I/III, m for II
    alternatives: tuple = ()
    reason: str = ""
    notes: tuple = field(default=(), compare=False)

    @property
    def impossible(self):
        """True when every alternative contains a nonzero constant condition."""
        if self.case is None:
            return True
        return all(any(e.is_constant() and not e.is_zero() for _, e in alt)
                   for alt in self.alternatives)

    def holds_at(self, values):
        """Does some alternative vanish at the given full parameter assignment?"""
        if self.case is None:
            return False
        return any(all(e.evaluate(values) == 0 for _, e in alt) for alt in self.alternatives)

    def open_alternatives(self):
        """Alternatives without an identically nonzero constant condition."""
        return [alt for alt in self.alternatives
                if not any(e.is_constant() and not e.is_zero() for _, e in alt)]


def _integer(x):
    return x is not None and x.denominator == 1


def classify_theoremB1(data):
    """Place a1 in case I, II or III and list the conditions each case imposes."""
    a1, a2, b1, b2 = data.a1, data.a2, data.b1, data.b2
    c1, c2, d1, d2 = data.c1, data.c2, data.d1, data.d2
    if not a1.is_constant():
        raise ValueError("a1 must be a number")
    a1v = a1.constant_value()
    if a1v == 0:
        return LameVerdict(None, reason="a1 = 0")
    # n(n+1) = 4/a1 and (n + 1/2)^2 = 4/a1 + 1/4
    sq = 4 / a1v + F(1, 4)
    r = rational_sqrt(sq) if sq >= 0 else None
    base = [("a2", a2)]
    if r is not None and _integer(r - F(1, 2)) and r > 1:
        n = int(r - F(1, 2))
        return LameVerdict("I", n, (tuple(base),), f"a1 = 4/(n(n+1)) with n = {n}")
    if r is not None and _integer(r) and r >= 1:
        m = int(r)
        base = base + [("b2", b2)]
        if m == 1:
            alts = [base + [("b1", b1)]]
            case = "II1"
        elif m == 2:
            alts = [base + [("c2", c2), ("16 a1 c1 + 3 b1^2", a1 * c1 * 16 + b1 * b1 * 3)]]
            case = "II2"
        elif m == 3:
            alts = [base + [
                ("16 a1 d2 + 11 b1 c2", a1 * d2 * 16 + b1 * c2 * 11),
                ("1024 a1^2 d1 + 704 a1 b1 c1 + 45 b1^3",
                 a1 * a1 * d1 * 1024 + a1 * b1 * c1 * 704 + b1 ** 3 * 45),
            ]]
            case = "II3"
        else:
            alts = []
            if m % 6 in (1, 2, 4, 5):
                alts.append(base + [("b1", b1), ("c1", c1), ("c2", c2)])
            if m % 2 == 1:
                alts.append(base + [("b1", b1), ("d1", d1), ("d2", d2)])
            case = "IIm"
        notes = ()
        if m == 3:
            notes = ("the first II3 condition is also quoted with coefficient 3 instead of 11; "
                     "with c2 = 0 both read 16 a1 d2 = 0",)
        return LameVerdict(case, m, tuple(tuple(a) for a in alts),
                           f"a1 = 16/(4m^2 - 1) with m = {m}", notes)
    if r is not None and any(_integer(r * q) for q in (3, 4, 5)):
        base = base + [("b2", b2)]
        alts = (
            tuple(base + [("c2", c2), ("b1^2 - 3 a1 c1", b1 * b1 - a1 * c1 * 3)]),
            tuple(base + [("c2 b1 - 3 a1 d2", c2 * b1 - a1 * d2 * 3),
                          ("2 b1^3 - 9 a1 b1 c1 + 27 a1^2 d1",
                           b1 ** 3 * 2 - a1 * b1 * c1 * 9 + a1 * a1 * d1 * 27)]),
        )
        return LameVerdict("III", r - F(1, 2), alts, f"n + 1/2 = {r}")
    return LameVerdict(None, reason=f"a1 = {a1v} fits no case")


def lame_index(alpha1):
    """n with n(n+1) = 12 alpha1 when it is a positive integer, else None."""
    r = rational_sqrt(12 * F(alpha1) + F(1, 4)) if 12 * F(alpha1) + F(1, 4) >= 0 else None
    if r is not None and _integer(r - F(1, 2)) and r > 1:
        return int(r - F(1, 2))
    return None
