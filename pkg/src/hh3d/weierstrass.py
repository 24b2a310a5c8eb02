"""Laurent expansion of the Weierstrass function wp(tau; g2, g3) at tau = 0.

Along the invariant plane q1 = q2 = 0 the third coordinate is

    q3 = -B1/2 + wp(tau; g2, g3),   g2 = 3 B1^2,   g3 = 12 h - B1^3,

with the energy h kept as a polynomial indeterminate.
"""

from dataclasses import dataclass

from .algebra import PARAMS, ParamRat
from .series import LogLaurentSeries


@dataclass(frozen=True)
class EllipticInvariants:
    g2: ParamRat
    g3: ParamRat

    @classmethod
    def from_family(cls, B1=None):
        """Invariants of the particular solution for the given B1 (symbolic by default)."""
        B1 = _param(B1, "B1")
        h = ParamRat.var("h")
        return cls(g2=B1 * B1 * 3, g3=h * 12 - B1 ** 3)

    def discriminant(self):
        return self.g2 ** 3 - self.g3 * self.g3 * 27

    def is_degenerate(self):
        """Advisory flag: the discriminant vanishes identically."""
        return self.discriminant().is_zero()


def _param(value, name):
    if value is None:
        return ParamRat.var(name)
    if isinstance(value, ParamRat):
        return value
    return ParamRat.const(value, PARAMS)


def wp_coefficients(inv, order):
    """Coefficients c_k of wp = tau^-2 + sum c_k tau^k for k < order.

    From wp'' = 6 wp^2 - g2/2: c2 = g2/20, c4 = g3/28 and for even k >= 6
    (k - 4)(k + 3) c_k = 6 * sum_{m=2}^{k-4} c_m c_{k-2-m}.
    """
    names = inv.g2.names
    c = {-2: ParamRat.const(1, names)}
    if order > 2:
        c[2] = inv.g2 / 20
    if order > 4:
        c[4] = inv.g3 / 28
    for k in range(6, order, 2):
        acc = ParamRat.const(0, names)
        for m in range(2, k - 3, 2):
            acc = acc + c[m] * c[k - 2 - m]
        c[k] = acc * 6 / ((k - 4) * (k + 3))
    return c


def wp_series(inv, order):
    """wp(tau; g2, g3) as a series known below tau^order (order >= 3)."""
    if order < 3:
        raise ValueError("wp_series needs order >= 3")
    return LogLaurentSeries(wp_coefficients(inv, order), order=order, names=inv.g2.names)


def gamma_h_solution(B1=None, order=12):
    """q3 on the family Gamma_h: -B1/2 + wp, with h symbolic."""
    if order < 3:
        raise ValueError("gamma_h_solution needs order >= 3")
    B1r = _param(B1, "B1")
    inv = EllipticInvariants.from_family(B1r)
    return wp_series(inv, order).add_constant(-B1r / 2)
