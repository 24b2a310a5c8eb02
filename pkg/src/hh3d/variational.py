"""Variational equations along the family Gamma_h and their log obstructions.

Everything is written in the rescaled time tau, where the equations of motion
read q'' = 6 grad V.  Expanding q = q0 + eps xi^(1) + eps^2 xi^(2) + ... gives
at every level the same linear operator

    xi_j'' - f_j(tau) xi_j = W_j^(k),

with f_j = 6 d^2V/dq_j^2 on Gamma_h and W_j^(k) a sum of products of
lower-level solutions.  Both the operators and the right-hand sides are
generated from the potential below rather than typed in per level.

The first-level equations are of Lamé type, ``xi'' = (n(n+1) wp + K) xi``; a
Frobenius pair with unit Wronskian solves the inhomogeneous equations by
variation of constants, and a nonzero tau^-1 coefficient in an integrand
forces a logarithm into the solutions.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import PARAMS, ParamRat, rational_sqrt
from .errors import InsufficientOrder, ResonanceLog
from .series import LogLaurentSeries, residue, series_integrate, series_mul
from .weierstrass import EllipticInvariants, _param, wp_coefficients, wp_series

F = Fraction
TAU_FACTOR = 6
COMPONENTS = (1, 2, 3)


# -- the potential and the generic expansion --------------------------------

def cubic_part(alpha1, gamma1=None):
    """(alpha1 q1^2 + gamma1 q2^2) q3 + q3^3/3 as {exponents: coefficient}."""
    gamma1 = alpha1 if gamma1 is None else gamma1
    return {(2, 0, 1): F(alpha1), (0, 2, 1): F(gamma1), (0, 0, 3): F(1, 3)}


QUADRATIC_PARAMS = ("A1", "C1", "B1")  # q1^2, q2^2, q3^2 coefficients (halved)


def _diff(terms, i):
    out = {}
    for e, c in terms.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = out.get(tuple(e2), 0) + c * e[i]
    return {e: c for e, c in out.items() if c}


def gradient_quadratics(alpha1, gamma1=None):
    """For each component i, Q_i = dV3/dq_i as {(j, l): coefficient} with j <= l."""
    cubic = cubic_part(alpha1, gamma1)
    result = []
    for i in range(3):
        pairs = {}
        for e, c in _diff(cubic, i).items():
            idx = [j + 1 for j in range(3) for _ in range(e[j])]
            key = (idx[0], idx[1])
            pairs[key] = pairs.get(key, 0) + c
        result.append(pairs)
    return result


def _axis_slope(pairs, j):
    """d/dq_j of sum c q_a q_b on the q3 axis, as a multiple of q3."""
    slope = F(0)
    for (a, b), c in pairs.items():
        if a == b == j == 3:
            slope += 2 * c
        elif a != b and {a, b} == {j, 3}:
            slope += c
    return slope


def ve1_operator(component, alpha1, gamma1=None):
    """(wp coefficient, constant) of f_j = 6 d^2V/dq_j^2 along q = (0, 0, wp - B1/2)."""
    Q = gradient_quadratics(alpha1, gamma1)[component - 1]
    for j in COMPONENTS:
        if j != component:
            assert _axis_slope(Q, j) == 0, "Hessian is not diagonal on the invariant plane"
    slope = _axis_slope(Q, component)
    linear = ParamRat.var(QUADRATIC_PARAMS[component - 1])
    B1 = ParamRat.var("B1")
    return TAU_FACTOR * slope, (linear - B1 * slope / 2) * TAU_FACTOR


def lame_index_of(wp_coef):
    """n with n(n+1) = wp_coef."""
    r = rational_sqrt(1 + 4 * F(wp_coef))
    if r is None or (r - 1) % 2:
        raise ValueError(f"{wp_coef} is not of the form n(n+1)")
    return int((r - 1) / 2)


@dataclass(frozen=True)
class RhsTerm:
    coef: Fraction
    left: tuple  # (component, level)
    right: tuple

    def __str__(self):
        (a, k), (b, l) = self.left, self.right
        return f"{self.coef}*xi{a}^({k})*xi{b}^({l})"


def ve_rhs_template(level, component, alpha1, gamma1=None):
    """W_component^(level) as a list of products of lower-level components."""
    if level < 2:
        return []
    Q = gradient_quadratics(alpha1, gamma1)[component - 1]
    acc = {}
    for (j, l), c in Q.items():
        for a in range(1, level):
            b = level - a
            key = tuple(sorted([(j, a), (l, b)]))
            acc[key] = acc.get(key, 0) + c * TAU_FACTOR
    return [RhsTerm(c, k[0], k[1]) for k, c in sorted(acc.items()) if c]


def build_rhs(level, component, alpha1, assignment, order=None):
    """Evaluate the level-``level`` right-hand side for one component.

    ``assignment`` maps (component, level) slots to series; slots left out
    count as zero.  ``order`` is only used when every product vanishes.
    """
    total = None
    for term in ve_rhs_template(level, component, alpha1):
        x, y = assignment.get(term.left), assignment.get(term.right)
        if x is None or y is None:
            continue
        p = series_mul(x, y).scale(term.coef)
        total = p if total is None else total + p
    if total is None:
        orders = [s.order for s in assignment.values() if s is not None]
        if order is None and not orders:
            raise ValueError("cannot size an all-zero right-hand side without an order")
        return LogLaurentSeries.zero(order if order is not None else min(orders))
    return total


# -- first-level Frobenius pairs ---------------------------------------------

@dataclass(frozen=True)
class Ve1Pair:
    index_n: int
    const_term: ParamRat
    sol_neg: LogLaurentSeries
    sol_pos: LogLaurentSeries
    B1: ParamRat = field(compare=False, default=None)

    def wronskian(self):
        y1, y2 = self.sol_neg, self.sol_pos
        return series_mul(y1, y2.derivative()) - series_mul(y1.derivative(), y2)

    def potential(self, order):
        """n(n+1) wp + const as a series known below tau^order."""
        inv = EllipticInvariants.from_family(self.B1)
        nn = self.index_n * (self.index_n + 1)
        return wp_series(inv, max(order, 3)).scale(nn).add_constant(self.const_term)

    def apply(self, xi):
        """xi'' - (n(n+1) wp + const) xi."""
        fxi = series_mul(self.potential(xi.order - xi.min_exp), xi)
        return xi.derivative().derivative() - fxi


def frobenius_coefficients(f, nn, lead, order):
    """Series solution of xi'' = (nn tau^-2 + sum_m f[m] tau^m) xi starting at tau^lead.

    ``f`` maps exponents m >= -1 to coefficients.  At a resonance
    e(e-1) = nn the recurrence must be solvable (right side zero); the free
    coefficient is then set to 0.
    """
    zero = ParamRat.const(0, PARAMS)
    a = {lead: ParamRat.const(1, PARAMS)}
    for e in range(lead + 1, order):
        rhs = zero
        for m, fm in f.items():
            prev = a.get(e - 2 - m)
            if prev is not None:
                rhs = rhs + fm * prev
        den = e * (e - 1) - nn
        if den == 0:
            if not rhs.is_zero():
                raise ResonanceLog(f"resonance at tau^{e} is not solvable: {rhs}")
            continue
        if not rhs.is_zero():
            a[e] = rhs / den
    return a


def ve1_pair(n, const_term, B1=None, order=None):
    """Frobenius solutions with exponents -n and n+1, normalized to unit Wronskian.

    Both series are known below tau^order (default 2n + 12).
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    order = 2 * n + 12 if order is None else order
    if order <= n + 1:
        raise InsufficientOrder(f"order {order} leaves no room above tau^{n + 1}")
    B1r = _param(B1, "B1")
    const_term = const_term if isinstance(const_term, ParamRat) else ParamRat.const(const_term)
    nn = n * (n + 1)
    inv = EllipticInvariants.from_family(B1r)
    wp = wp_coefficients(inv, max(order + n - 1, 3))
    f = {m: c * nn for m, c in wp.items() if m >= 0}
    f[0] = f.get(0, ParamRat.const(0)) + const_term
    neg = LogLaurentSeries(frobenius_coefficients(f, nn, -n, order), order=order)
    pos = LogLaurentSeries(frobenius_coefficients(f, nn, n + 1, order), order=order).scale(F(1, 2 * n + 1))
    return Ve1Pair(n, const_term, neg, pos, B1r)


def solve_inhomogeneous(pair, rhs, add_homogeneous=None):
    """Variation of constants for xi'' - f xi = rhs.

    Returns (xi, (nu1, nu2)) with nu1 = -sol_pos*rhs, nu2 = sol_neg*rhs and
    xi = sol_neg*int(nu1) + sol_pos*int(nu2), integration constants zero.
    ``add_homogeneous`` 1 or 2 adds sol_neg or sol_pos to xi.
    """
    y1, y2 = pair.sol_neg, pair.sol_pos
    nu1 = -series_mul(y2, rhs)
    nu2 = series_mul(y1, rhs)
    xi = series_mul(y1, series_integrate(nu1)) + series_mul(y2, series_integrate(nu2))
    if add_homogeneous == 1:
        xi = xi + y1
    elif add_homogeneous == 2:
        xi = xi + y2
    elif add_homogeneous is not None:
        raise ValueError("add_homogeneous must be None, 1 or 2")
    return xi, (nu1, nu2)


# -- residue certificates ------------------------------------------------------

def label(component, index, level):
    return f"xi_{component}_{index}^({level})"


# A level-2 recipe names the solution it defines (component, index), the
# level-1 basis series substituted into each slot of its right-hand side and
# the homogeneous solution added on top.  A level-3 recipe names the integrand
# (component, which of nu1/nu2) and the series substituted into each slot.
RECIPES = {
    F(1): {
        "level2": [
            ((1, 2), {(1, 1): (1, 2, 1), (3, 1): (3, 1, 1)}),
            ((2, 2), {(2, 1): (2, 2, 1), (3, 1): (3, 1, 1)}),
            ((3, 2), {(1, 1): (1, 1, 1), (2, 1): (2, 1, 1), (3, 1): (3, 1, 1)}),
        ],
        "level3": [
            ("nu_1_1", 1, 1, {(1, 1): (1, 1, 1), (3, 2): (3, 2, 2), (1, 2): (1, 2, 2), (3, 1): (3, 2, 1)}),
            ("nu_2_1", 2, 1, {(2, 1): (2, 1, 1), (3, 2): (3, 2, 2), (2, 2): (2, 2, 2), (3, 1): (3, 2, 1)}),
        ],
    },
    F(1, 2): {
        "level2": [
            ((1, 2), {(1, 1): (1, 1, 1), (3, 1): (3, 2, 1)}),
            ((3, 2), {(1, 1): (1, 1, 1), (2, 1): (2, 1, 1), (3, 1): (3, 2, 1)}),
        ],
        "level3": [
            ("nu_1_2", 1, 2, {(1, 1): (1, 2, 1), (3, 2): (3, 2, 2), (1, 2): (1, 2, 2), (3, 1): (3, 1, 1)}),
        ],
    },
}
RECIPE_NOTES = {
    F(1): ("the second-branch level-3 right-hand side mirrors the first branch and uses xi_2_2^(2)",),
    F(1, 2): (),
}


@dataclass(frozen=True)
class ResidueCertificate:
    alpha1: Fraction
    order_k: int
    integrand_id: str
    residue: ParamRat
    rhs_provenance: dict = field(compare=False, default_factory=dict)

    def evaluate(self, values):
        return self.residue.evaluate({**{"h": 0}, **values})

    def to_dict(self):
        return {
            "kind": "residue",
            "alpha1": self.alpha1,
            "level": self.order_k,
            "integrand": self.integrand_id,
            "value": self.residue,
            "provenance": self.rhs_provenance,
        }


class VariationalSystem:
    """First-level bases for the three components at a given alpha1, plus a cache of level-2 solutions."""

    def __init__(self, alpha1, order=14, B1=None):
        self.alpha1 = F(alpha1)
        self.order = order
        self.pairs = {}
        for j in COMPONENTS:
            wp_coef, const = ve1_operator(j, self.alpha1)
            self.pairs[j] = ve1_pair(lame_index_of(wp_coef), const, B1, order)
        self.series = {}
        for j, p in self.pairs.items():
            self.series[(j, 1, 1)] = p.sol_neg
            self.series[(j, 2, 1)] = p.sol_pos

    def basis(self, component, index):
        return self.series[(component, index, 1)]

    def level2(self, component, slots, add_homogeneous=None):
        """Solve level 2 for one component with slots {(comp, 1): (comp, index, 1)}."""
        assignment = {slot: self.series[key] for slot, key in slots.items()}
        rhs = build_rhs(2, component, self.alpha1, assignment)
        return solve_inhomogeneous(self.pairs[component], rhs, add_homogeneous)

    def integrand(self, component, which, assignment):
        rhs = build_rhs(3, component, self.alpha1, assignment)
        pair = self.pairs[component]
        if which == 1:
            return -series_mul(pair.sol_pos, rhs)
        return series_mul(pair.sol_neg, rhs)


@lru_cache(maxsize=None)
def residue_certificate(alpha1, order=14, add_homogeneous=True):
    """Level-3 residues for alpha1 = 1 or 1/2 along the documented right-hand-side choices."""
    alpha1 = F(alpha1)
    if alpha1 not in RECIPES:
        raise ValueError("residue certificates are defined for alpha1 = 1 and 1/2")
    system = VariationalSystem(alpha1, order)
    recipe = RECIPES[alpha1]
    for (j, i), slots in recipe["level2"]:
        xi, (nu1, nu2) = system.level2(j, slots, i if add_homogeneous else None)
        assert residue(nu1).is_zero() and residue(nu2).is_zero(), "level 2 is expected log-free"
        system.series[(j, i, 2)] = xi
    certs = []
    for ident, j, which, slots in recipe["level3"]:
        assignment = {slot: system.series[key] for slot, key in slots.items()}
        nu = system.integrand(j, which, assignment)
        res = residue(nu)
        if res.num.degree_in("h") or res.den.degree_in("h"):
            raise AssertionError(f"residue of {ident} depends on h: {res}")
        provenance = {
            "integrand": f"{'-xi_%d_2^(1)' % j if which == 1 else 'xi_%d_1^(1)' % j} * W_{j}^(3)",
            "W": {f"xi{c}^({k})": label(*system_key) for (c, k), system_key in sorted(slots.items())},
            "level2": {
                label(jj, ii, 2): {
                    "rhs": {f"xi{c}^({k})": label(*key) for (c, k), key in sorted(s.items())},
                    "plus": label(jj, ii, 1) if add_homogeneous else None,
                }
                for (jj, ii), s in recipe["level2"]
            },
            "notes": list(RECIPE_NOTES[alpha1]),
        }
        certs.append(ResidueCertificate(alpha1, 3, ident, res, provenance))
    return tuple(certs)


# -- exhaustive scan -------------------------------------------------------------

@dataclass(frozen=True)
class ScanHit:
    level: int
    integrand_id: str
    choice: tuple
    residue: ParamRat


def _slot_choices(component, level, alpha1):
    """Level-1 slots of W_component^(level)."""
    slots = set()
    for t in ve_rhs_template(level, component, alpha1):
        slots.update([t.left, t.right])
    return sorted(slots)


def _triple_residue(y, a, b):
    return residue(series_mul(series_mul(y, a), b))


def scan_residues(alpha1, order=14):
    """All nonzero integrand residues over fundamental-solution choices.

    Level 2: every assignment of basis solutions to the right-hand-side
    slots (expected: none nonzero).  Level 3 for components 1 and 2: every
    basis choice for xi_j^(1) and xi_3^(1), and every level-2 solution built
    from a basis assignment plus an optional homogeneous summand for
    xi_j^(2) and xi_3^(2).  Residues are combined by multilinearity.
    """
    alpha1 = F(alpha1)
    system = VariationalSystem(alpha1, order)
    hits = []
    level2 = {}
    for j in COMPONENTS:
        slots = _slot_choices(j, 2, alpha1)
        sols = []
        for idx in product((1, 2), repeat=len(slots)):
            choice = {s: (s[0], i, 1) for s, i in zip(slots, idx)}
            xi, nus = system.level2(j, choice)
            for w, nu in enumerate(nus, 1):
                r = residue(nu)
                if not r.is_zero():
                    hits.append(ScanHit(2, f"nu_{j}_{w}", tuple(sorted(choice.items())), r))
            sols.append((tuple(idx), xi))
        level2[j] = sols
    for j in (1, 2):
        pair = system.pairs[j]
        coef = {}
        for t in ve_rhs_template(3, j, alpha1):
            coef[(t.left, t.right)] = t.coef
        c_a = coef[((j, 1), (3, 2))]
        c_b = coef[((j, 2), (3, 1))]
        for w, y in ((1, -pair.sol_pos), (2, pair.sol_neg)):
            R1 = {}  # (i_j1, key of xi_3^(2) base) -> residue
            for i in (1, 2):
                a = system.basis(j, i)
                for idx, part in level2[3]:
                    R1[(i, ("p", idx))] = _triple_residue(y, a, part)
                for h in (1, 2):
                    R1[(i, ("h", h))] = _triple_residue(y, a, system.basis(3, h))
            R2 = {}
            for i3 in (1, 2):
                b = system.basis(3, i3)
                for idx, part in level2[j]:
                    R2[(i3, ("p", idx))] = _triple_residue(y, part, b)
                for h in (1, 2):
                    R2[(i3, ("h", h))] = _triple_residue(y, system.basis(j, h), b)
            for i_j1, i_31 in product((1, 2), repeat=2):
                for idx3, _ in level2[3]:
                    for h3 in (None, 1, 2):
                        r3 = R1[(i_j1, ("p", idx3))]
                        if h3:
                            r3 = r3 + R1[(i_j1, ("h", h3))]
                        for idxj, _ in level2[j]:
                            for hj in (None, 1, 2):
                                rj = R2[(i_31, ("p", idxj))]
                                if hj:
                                    rj = rj + R2[(i_31, ("h", hj))]
                                total = r3 * c_a + rj * c_b
                                if not total.is_zero():
                                    choice = (("xi_j^(1)", i_j1), ("xi_3^(1)", i_31),
                                              ("xi_3^(2)", idx3, h3), ("xi_j^(2)", idxj, hj))
                                    hits.append(ScanHit(3, f"nu_{j}_{w}", choice, total))
    return hits
