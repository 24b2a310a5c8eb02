"""Phase-space polynomials with parametric coefficients and the canonical bracket.

Coefficients live in the rational-function field of a separate alphabet
(At, Bt, Ct, bt): the tilde parameters A/alpha, B/alpha, C/alpha of the
rescaled Hamiltonian, plus a spare symbol for a free cubic coefficient.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ParamRat
from .errors import ZeroDenominator

TILDE = ("At", "Bt", "Ct", "bt")
PHASE_VARS = ("q1", "q2", "q3", "p1", "p2", "p3")


def _coef(c):
    if isinstance(c, ParamRat):
        return c
    return ParamRat.const(c, TILDE)


class PhasePoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for e, c in (terms or {}).items():
            c = _coef(c)
            if not c.is_zero():
                out[tuple(e)] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c):
        return cls({(0,) * 6: c})

    @classmethod
    def var(cls, name):
        e = [0] * 6
        e[PHASE_VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @staticmethod
    def param(name):
        return ParamRat.var(name, TILDE)

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, PhasePoly):
            return other
        return PhasePoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            w = out.get(e)
            w = c if w is None else w + c
            if w.is_zero():
                out.pop(e, None)
            else:
                out[e] = w
        return PhasePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PhasePoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PhasePoly):
            c = _coef(other)
            if c.is_zero():
                return PhasePoly._raw({})
            return PhasePoly._raw({e: v * c for e, v in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                w = out.get(e)
                out[e] = p if w is None else w + p
        return PhasePoly._raw({e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coef(other)
        if c.is_zero():
            raise ZeroDenominator("division of a phase polynomial by zero")
        inv = ParamRat.const(1, TILDE) / c
        return self * inv

    def __pow__(self, k):
        result = PhasePoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def diff(self, name):
        i = PHASE_VARS.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return PhasePoly._raw(out)

    def subs_params(self, mapping):
        """Substitute parameter values; raises ZeroDenominator if a coefficient blows up."""
        mapping = {k: (v if isinstance(v, ParamRat) else v) for k, v in mapping.items()}
        return PhasePoly({e: c.subs(mapping) for e, c in self.terms.items()})

    def evaluate(self, point, params):
        """Numeric value at a phase point {q1: .., p3: ..} and parameter values."""
        total = Fraction(0)
        vals = [Fraction(point[n]) for n in PHASE_VARS]
        for e, c in self.terms.items():
            t = c.evaluate(params)
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PhasePoly.const(other)
        if not isinstance(other, PhasePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def term_list(self):
        """Canonical [(monomial, coefficient)] list, highest degree first."""
        items = sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))
        return [(_fmt_mono(e), str(c)) for e, c in items]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" if m != "1" else f"({c})" for m, c in self.term_list())

    def __repr__(self):
        return f"PhasePoly({self})"


def _fmt_mono(e):
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(PHASE_VARS, e) if k]
    return "*".join(parts) or "1"


def poisson_bracket(f, g):
    """sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i."""
    out = PhasePoly._raw({})
    for i in (1, 2, 3):
        q, p = f"q{i}", f"p{i}"
        out = out + f.diff(q) * g.diff(p) - f.diff(p) * g.diff(q)
    return out


# -- Hamiltonians and integrals ------------------------------------------------

def _vars():
    return [PhasePoly.var(n) for n in PHASE_VARS]


def scaled_hamiltonian(beta_over_alpha, equal_AC=False):
    """|p|^2/2 + (At q1^2 + Ct q2^2 + Bt q3^2)/2 + (q1^2 + q2^2) q3 + (beta/alpha) q3^3/3."""
    q1, q2, q3, p1, p2, p3 = _vars()
    At, Bt = PhasePoly.param("At"), PhasePoly.param("Bt")
    Ct = At if equal_AC else PhasePoly.param("Ct")
    kinetic = (p1 ** 2 + p2 ** 2 + p3 ** 2) * Fraction(1, 2)
    quad = (q1 ** 2 * At + q2 ** 2 * Ct + q3 ** 2 * Bt) * Fraction(1, 2)
    return kinetic + quad + (q1 ** 2 + q2 ** 2) * q3 + q3 ** 3 * (Fraction(beta_over_alpha) / 3)


def case_ii_hamiltonian():
    return scaled_hamiltonian(6)


def rotation_integral():
    """F = q1 p2 - q2 p1."""
    q1, q2, q3, p1, p2, p3 = _vars()
    return q1 * p2 - q2 * p1


def homogeneous_hamiltonian(alpha1):
    """|p|^2/2 + alpha1 (q1^2 + q2^2) q3 + q3^3/3."""
    q1, q2, q3, p1, p2, p3 = _vars()
    kinetic = (p1 ** 2 + p2 ** 2 + p3 ** 2) * Fraction(1, 2)
    return kinetic + (q1 ** 2 + q2 ** 2) * q3 * Fraction(alpha1) + q3 ** 3 * Fraction(1, 3)


def _integral_pair(quoted):
    q1, q2, q3, p1, p2, p3 = _vars()
    At, Bt, Ct = (PhasePoly.param(n) for n in ("At", "Bt", "Ct"))
    L2 = (q2 * p1 - q1 * p2) ** 2 / (At - Ct)
    out = []
    for sign, qi, pi, X in ((1, q1, p1, At), (-1, q2, p2, Ct)):
        g = L2 * sign - qi ** 4 - q1 ** 2 * q2 ** 2 - p3 * qi * pi * 4
        if quoted:
            g = g + (q3 * 4 + (Bt - X * 4)) * (pi ** 2 + qi ** 2 * X)
        else:
            g = g + (pi ** 2 + qi ** 2 * X) * (Bt - X * 4) + q3 * (pi ** 2 - qi ** 2 * X) * 4
            g = g - qi ** 2 * q3 ** 2 * 4
        out.append(g)
    return tuple(out)


def quoted_integrals():
    """The quartic pair exactly as commonly quoted for the 1/6 case."""
    return _integral_pair(quoted=True)


def case_ii_integrals():
    """Quartic integrals of the 1/6 Hamiltonian, valid for At != Ct."""
    return _integral_pair(quoted=False)


@dataclass
class CaseReport:
    case: str
    checks: list = field(default_factory=list)  # (name, bracket) pairs
    unchecked: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)  # informational brackets

    @property
    def passed(self):
        return all(b.is_zero() for _, b in self.checks)

    def to_dict(self):
        return {
            "case": self.case,
            "passed": self.passed,
            "checks": [{"bracket": n, "zero": b.is_zero(), "terms": b.term_list()} for n, b in self.checks],
            "not_machine_checked": list(self.unchecked),
            "notes": list(self.notes),
            "diagnostics": [{"bracket": n, "zero": b.is_zero(), "terms": len(b.terms)}
                            for n, b in self.diagnostics],
        }


def _pairwise(named):
    out = []
    for i in range(len(named)):
        for j in range(i + 1, len(named)):
            (a, f), (b, g) = named[i], named[j]
            out.append((f"{{{a}, {b}}}", poisson_bracket(f, g)))
    return out


def verify_case(case_id, equal_AC=False):
    """Check involution of the integrals available for one integrable case."""
    q1, q2, q3, p1, p2, p3 = _vars()
    At, Bt, Ct, bt = (PhasePoly.param(n) for n in TILDE)
    F = rotation_integral()
    rep = CaseReport(case_id)
    if case_id == "separable":
        # here the symbols stand for A, B, C and beta themselves
        H = ((p1 ** 2 + p2 ** 2 + p3 ** 2) + q1 ** 2 * At + q2 ** 2 * Ct + q3 ** 2 * Bt) * Fraction(1, 2)
        H = H + q3 ** 3 * bt / 3
        I1 = (p1 ** 2 + q1 ** 2 * At) * Fraction(1, 2)
        I2 = (p2 ** 2 + q2 ** 2 * Ct) * Fraction(1, 2)
        I3 = (p3 ** 2 + q3 ** 2 * Bt) * Fraction(1, 2) + q3 ** 3 * bt / 3
        rep.checks = _pairwise([("H", H), ("I1", I1), ("I2", I2), ("I3", I3)])
        rep.notes.append("H = I1 + I2 + I3")
    elif case_id == "case_i":
        H = scaled_hamiltonian(1, equal_AC=True).subs_params({"Bt": PhasePoly.param("At")})
        rep.checks = _pairwise([("H", H), ("F", F)])
        rep.unchecked.append("third integral: externally established - not machine-checked")
    elif case_id == "case_iii":
        H = scaled_hamiltonian(16, equal_AC=True).subs_params({"Bt": PhasePoly.param("At") * 16})
        rep.checks = _pairwise([("H", H), ("F", F)])
        rep.unchecked.append("third integral: externally established - not machine-checked")
    elif case_id == "case_ii":
        G1, G2 = case_ii_integrals()
        if not equal_AC:
            H = case_ii_hamiltonian()
            rep.checks = _pairwise([("H", H), ("G1", G1), ("G2", G2)])
            P1, P2 = quoted_integrals()
            rep.diagnostics = _pairwise([("H", H), ("G1_quoted", P1), ("G2_quoted", P2)])
            rep.notes.append("quartic integrals G1, G2 with At != Ct")
        else:
            H = scaled_hamiltonian(6, equal_AC=True)
            S = (G1 + G2).subs_params({"Ct": PhasePoly.param("At")})
            rep.checks = _pairwise([("H", H), ("F", F), ("G1+G2", S)])
            rep.notes.append("At = Ct: G1, G2 are singular; verified H, F and G1 + G2 instead")
    else:
        raise ValueError(f"unknown case {case_id!r}")
    return rep
