"""Exact rationals, polynomials and rational functions over a parameter alphabet.

Scalars are :class:`fractions.Fraction`.  A :class:`ParamPoly` is a sparse map
from exponent tuples to nonzero Fractions; a :class:`ParamRat` is a reduced
quotient of two of them.  The default alphabet is ``("A1", "B1", "C1", "h")``;
the Poisson module uses its own alphabet for the tilde parameters.

Everything is immutable once built.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput, NegativeInput, ZeroDenominator

PARAMS = ("A1", "B1", "C1", "h")

_RATIONAL_RE = re.compile(r"^\s*(-?)(\d+)(?:/(\d+))?\s*$")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"`` (optional leading minus) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise InvalidInput(f"not a rational number: {text!r}")
    sign, p, q = m.groups()
    if q is not None and int(q) == 0:
        raise InvalidInput(f"zero denominator in {text!r}")
    value = Fraction(int(p), int(q) if q is not None else 1)
    return -value if sign else value


def format_rational(x):
    return str(Fraction(x))


def rational_sqrt(x):
    """Return the nonnegative rational square root of ``x``, or None.

    Raises NegativeInput for x < 0.
    """
    x = Fraction(x)
    if x < 0:
        raise NegativeInput(f"square root of negative number {x}")
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def _grlex_key(exps):
    return (sum(exps), exps)


def _fmt_monomial(exps, names):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class ParamPoly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms", "names")

    def __init__(self, terms=None, names=PARAMS):
        self.names = names
        clean = {}
        if terms:
            nv = len(names)
            for exps, c in terms.items():
                if len(exps) != nv or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {names}")
                c = Fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms, names):
        p = object.__new__(cls)
        p.terms = terms
        p.names = names
        return p

    @classmethod
    def const(cls, c, names=PARAMS):
        c = Fraction(c)
        return cls._raw({(0,) * len(names): c} if c else {}, names)

    @classmethod
    def var(cls, name, names=PARAMS):
        exps = [0] * len(names)
        exps[names.index(name)] = 1
        return cls._raw({tuple(exps): Fraction(1)}, names)

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        if not self.terms:
            return True
        return len(self.terms) == 1 and not any(next(iter(self.terms)))

    def is_one(self):
        if len(self.terms) != 1:
            return False
        (exps, c), = self.terms.items()
        return c == 1 and not any(exps)

    def constant_value(self):
        """Coefficient of the constant monomial."""
        return self.terms.get((0,) * len(self.names), Fraction(0))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        """Leading (exponents, coefficient) in graded-lex order A1 > B1 > C1 > h."""
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.names != self.names:
                raise ValueError("mixing polynomials over different alphabets")
            return other
        if isinstance(other, (int, Fraction)):
            return ParamPoly.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exps, c in other.terms.items():
            v = out.get(exps)
            if v is None:
                out[exps] = c
            else:
                v += c
                if v:
                    out[exps] = v
                else:
                    del out[exps]
        return ParamPoly._raw(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return ParamPoly._raw({}, self.names)
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return ParamPoly._raw({e: c for e, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return ParamPoly._raw({}, self.names)
        return ParamPoly._raw({e: v * c for e, v in self.terms.items()}, self.names)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = ParamPoly.const(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, name):
        i = self.names.index(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                out[tuple(e)] = c * exps[i]
        return ParamPoly._raw(out, self.names)

    def subs(self, mapping):
        """Substitute variables by numbers or polynomials (same alphabet)."""
        idx = {self.names.index(k): v for k, v in mapping.items()}
        result = ParamPoly._raw({}, self.names)
        powers = {}
        for exps, c in self.terms.items():
            kept = list(exps)
            term = ParamPoly._raw({}, self.names)
            factor = Fraction(c)
            poly_factor = None
            for i, v in idx.items():
                e = exps[i]
                if not e:
                    continue
                kept[i] = 0
                if isinstance(v, ParamPoly):
                    key = (i, e)
                    if key not in powers:
                        powers[key] = v ** e
                    poly_factor = powers[key] if poly_factor is None else poly_factor * powers[key]
                else:
                    factor *= Fraction(v) ** e
            term = ParamPoly._raw({tuple(kept): factor} if factor else {}, self.names)
            if poly_factor is not None:
                term = term * poly_factor
            result = result + term
        return result

    def evaluate(self, values):
        """Evaluate at a full assignment name -> rational."""
        vals = [Fraction(values[n]) for n in self.names]
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(vals, exps):
                if e:
                    t *= v ** e
            total += t
        return total

    # -- comparison / display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.sorted_terms():
            mono = _fmt_monomial(exps, self.names)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not out:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"ParamPoly({self})"


# sympy is only used for multivariate gcd, and only when a denominator is not
# a constant.
@lru_cache(maxsize=None)
def _sympy_ring(names):
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(names), QQ, order="grlex")
    return R


def _to_ring(p):
    R = _sympy_ring(p.names)
    dom = R.domain
    return R.from_dict({e: dom(c.numerator, c.denominator) for e, c in p.terms.items()})


def _from_ring(f, names):
    return ParamPoly._raw(
        {tuple(e): Fraction(int(c.numerator), int(c.denominator)) for e, c in f.items()},
        names,
    )


def poly_gcd(a, b):
    """Monic (grlex) gcd of two polynomials; gcd(0, 0) = 0."""
    if a.is_zero() and b.is_zero():
        return ParamPoly._raw({}, a.names)
    g = _to_ring(a).gcd(_to_ring(b))
    return _from_ring(g, a.names)


def ratfunc_normalize(num, den):
    """Reduce num/den to canonical form: coprime, den monic under grlex."""
    if den.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    names = num.names
    if num.is_zero():
        return ParamRat._raw(num, ParamPoly.const(1, names))
    if den.is_constant():
        c = den.constant_value()
        return ParamRat._raw(num.scale(1 / c), ParamPoly.const(1, names))
    if num.is_constant() or num.total_degree() == 0:
        lc = den.leading()[1]
        return ParamRat._raw(num.scale(1 / lc), den.scale(1 / lc))
    _, cn, cd = _to_ring(num).cofactors(_to_ring(den))
    n = _from_ring(cn, names)
    d = _from_ring(cd, names)
    lc = d.leading()[1]
    if lc != 1:
        n = n.scale(1 / lc)
        d = d.scale(1 / lc)
    return ParamRat._raw(n, d)


class ParamRat:
    """Canonical rational function num/den over a parameter alphabet."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, ParamPoly):
            num = ParamPoly.const(num)
        if den is None:
            den = ParamPoly.const(1, num.names)
        elif not isinstance(den, ParamPoly):
            den = ParamPoly.const(den, num.names)
        r = ratfunc_normalize(num, den)
        self.num = r.num
        self.den = r.den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def const(cls, c, names=PARAMS):
        return cls._raw(ParamPoly.const(c, names), ParamPoly.const(1, names))

    @classmethod
    def var(cls, name, names=PARAMS):
        return cls._raw(ParamPoly.var(name, names), ParamPoly.const(1, names))

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, ParamPoly.const(1, p.names))

    @property
    def names(self):
        return self.num.names

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_value()

    def _coerce(self, other):
        if isinstance(other, ParamRat):
            return other
        if isinstance(other, ParamPoly):
            return ParamRat.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return ParamRat.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return ParamRat._raw(self.num + other.num, self.den)
        if self.den == other.den:
            return ratfunc_normalize(self.num + other.num, self.den)
        return ratfunc_normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamRat._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamRat._raw(self.num.scale(other), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return ParamRat._raw(self.num * other.num, self.den)
        return ratfunc_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDenominator("division by zero")
            return ParamRat._raw(self.num.scale(1 / Fraction(other)), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return ratfunc_normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return ParamRat.const(1, self.names) / (self ** -k)
        return ParamRat._raw(self.num ** k, self.den ** k) if self.den.is_one() else \
            ratfunc_normalize(self.num ** k, self.den ** k)

    def derivative(self, name):
        n, d = self.num, self.den
        if d.is_one():
            return ParamRat._raw(n.derivative(name), d)
        return ratfunc_normalize(n.derivative(name) * d - n * d.derivative(name), d * d)

    def subs(self, mapping):
        """Substitute numbers or ParamPoly/ParamRat values; ZeroDenominator if den vanishes."""
        if any(isinstance(v, ParamRat) for v in mapping.values()):
            result = ParamRat.const(1, self.names)
            # substitute a rational function by clearing one variable at a time
            num = ParamRat.from_poly(self.num)
            den = ParamRat.from_poly(self.den)
            for k, v in mapping.items():
                num = _subs_rat(num, k, v)
                den = _subs_rat(den, k, v)
            if den.is_zero():
                raise ZeroDenominator(f"denominator of {self} vanishes under substitution")
            return result * num / den
        poly_map = {k: (v.num if isinstance(v, ParamRat) else v) for k, v in mapping.items()}
        den = self.den.subs(poly_map)
        if den.is_zero():
            raise ZeroDenominator(f"denominator {self.den} vanishes under substitution")
        return ratfunc_normalize(self.num.subs(poly_map), den)

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDenominator(f"denominator {self.den} vanishes at {values}")
        return self.num.evaluate(values) / d

    def __eq__(self, other):
        if isinstance(other, ParamRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.num.constant_value() == other
        if isinstance(other, ParamPoly):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self):
        return f"ParamRat({self})"


def _subs_rat(r, name, value):
    """Substitute a single variable by a ParamRat inside a polynomial ParamRat."""
    p = r.num
    i = p.names.index(name)
    out = ParamRat.const(0, p.names)
    for exps, c in p.terms.items():
        e = list(exps)
        k = e[i]
        e[i] = 0
        mono = ParamRat.from_poly(ParamPoly._raw({tuple(e): c}, p.names))
        out = out + (mono * value ** k if k else mono)
    return out / r.den if not r.den.is_one() else out


def symbols(names=PARAMS):
    """ParamRat generators for an alphabet, in order."""
    return tuple(ParamRat.var(n, names) for n in names)
