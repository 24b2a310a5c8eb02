"""Truncated Laurent series in tau with an optional log(tau) part.

A :class:`LogLaurentSeries` represents

    sum_k plain[k] tau^k  +  log(tau) * sum_k logpart[k] tau^k  +  O(tau^order)

with every stored exponent in ``[min_exp, order)``.  Coefficients below
``min_exp`` are exactly zero; coefficients at or above ``order`` are unknown
and reading them raises :class:`InsufficientOrder`.  Each operation computes
its output window from its inputs' windows, never from hope.
"""

from fractions import Fraction

from .algebra import PARAMS, ParamRat
from .errors import InsufficientOrder, LogSquared


def _clean(d):
    return {k: v for k, v in d.items() if not v.is_zero()}


class LogLaurentSeries:
    __slots__ = ("plain", "logpart", "min_exp", "order", "names")

    def __init__(self, plain=None, logpart=None, min_exp=None, order=None, names=PARAMS):
        if order is None:
            raise ValueError("a truncation order is required")
        plain = _clean({k: _as_rat(v, names) for k, v in (plain or {}).items()})
        logpart = _clean({k: _as_rat(v, names) for k, v in (logpart or {}).items()})
        exps = list(plain) + list(logpart)
        if min_exp is None:
            min_exp = min(exps) if exps else order - 1
        if any(k < min_exp or k >= order for k in exps):
            raise ValueError(f"stored exponents {sorted(exps)} outside window [{min_exp}, {order})")
        if order <= min_exp:
            raise ValueError(f"empty window [{min_exp}, {order})")
        self.plain = plain
        self.logpart = logpart
        self.names = names
        # coefficients between min_exp and the first stored one are exact zeros
        self.min_exp = min(exps) if exps else order - 1
        self.order = order

    @classmethod
    def _raw(cls, plain, logpart, min_exp, order, names):
        s = object.__new__(cls)
        s.plain = plain
        s.logpart = logpart
        s.names = names
        exps = [k for k in plain] + [k for k in logpart]
        s.min_exp = min(exps) if exps else max(min_exp, order - 1)
        s.order = order
        return s

    @classmethod
    def monomial(cls, coeff, exp, order, names=PARAMS):
        return cls({exp: coeff}, order=order, names=names)

    @classmethod
    def zero(cls, order, names=PARAMS):
        return cls({}, order=order, names=names)

    # -- access -----------------------------------------------------------

    def _check(self, k):
        if k >= self.order:
            raise InsufficientOrder(
                f"coefficient of tau^{k} requested, series only known below tau^{self.order}"
            )

    def coeff(self, k):
        self._check(k)
        v = self.plain.get(k)
        return v if v is not None else ParamRat.const(0, self.names)

    def log_coeff(self, k):
        self._check(k)
        v = self.logpart.get(k)
        return v if v is not None else ParamRat.const(0, self.names)

    def has_log(self):
        return bool(self.logpart)

    def is_zero(self):
        return not self.plain and not self.logpart

    def leading_exponent(self):
        exps = list(self.plain) + list(self.logpart)
        return min(exps) if exps else None

    # -- linear structure -------------------------------------------------

    def _combine(self, other, sign):
        if not isinstance(other, LogLaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        plain = {k: v for k, v in self.plain.items() if k < order}
        logpart = {k: v for k, v in self.logpart.items() if k < order}
        for src, dst in ((other.plain, plain), (other.logpart, logpart)):
            for k, v in src.items():
                if k >= order:
                    continue
                v = v if sign > 0 else -v
                w = dst.get(k)
                if w is None:
                    dst[k] = v
                else:
                    w = w + v
                    if w.is_zero():
                        del dst[k]
                    else:
                        dst[k] = w
        return LogLaurentSeries._raw(plain, logpart, min(self.min_exp, other.min_exp), order, self.names)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LogLaurentSeries._raw(
            {k: -v for k, v in self.plain.items()},
            {k: -v for k, v in self.logpart.items()},
            self.min_exp, self.order, self.names,
        )

    def scale(self, c):
        """Multiply by a constant (Fraction, int or ParamRat)."""
        if isinstance(c, (int, Fraction)) and c == 0 or isinstance(c, ParamRat) and c.is_zero():
            return LogLaurentSeries.zero(self.order, self.names)
        return LogLaurentSeries._raw(
            {k: v * c for k, v in self.plain.items()},
            {k: v * c for k, v in self.logpart.items()},
            self.min_exp, self.order, self.names,
        )

    def add_constant(self, c):
        """Add a constant tau^0 term (0 must lie below the order)."""
        if self.order <= 0:
            raise InsufficientOrder("cannot add a constant to a series known only below tau^0")
        return self + LogLaurentSeries({0: c}, order=self.order, names=self.names)

    def shift(self, k):
        """Multiply by tau^k."""
        return LogLaurentSeries._raw(
            {e + k: v for e, v in self.plain.items()},
            {e + k: v for e, v in self.logpart.items()},
            self.min_exp + k, self.order + k, self.names,
        )

    def truncate(self, order):
        """Forget coefficients at or above ``order`` (which must not exceed the current order)."""
        if order > self.order:
            raise InsufficientOrder(f"cannot extend window from {self.order} to {order}")
        return LogLaurentSeries._raw(
            {k: v for k, v in self.plain.items() if k < order},
            {k: v for k, v in self.logpart.items() if k < order},
            min(self.min_exp, order - 1), order, self.names,
        )

    # -- calculus ---------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, LogLaurentSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def derivative(self):
        """d/dtau; the log part contributes logpart(tau)/tau to the plain part."""
        plain = {}
        for k, v in self.plain.items():
            if k:
                plain[k - 1] = v * k
        logpart = {}
        for k, v in self.logpart.items():
            if k:
                logpart[k - 1] = v * k
            w = plain.get(k - 1)
            plain[k - 1] = v if w is None else w + v
        return LogLaurentSeries._raw(
            _clean(plain), logpart, self.min_exp - 1, self.order - 1, self.names
        )

    def __eq__(self, other):
        if not isinstance(other, LogLaurentSeries):
            return NotImplemented
        return (self.order == other.order and self.plain == other.plain
                and self.logpart == other.logpart)

    def __hash__(self):
        return hash((self.order, frozenset(self.plain.items()), frozenset(self.logpart.items())))

    def agrees_with(self, other):
        """Equal on the common window."""
        return (self - other).is_zero()

    # -- display ----------------------------------------------------------

    def dump(self):
        """Text dump: ``k: coeff`` lines, ``log k: coeff`` lines, then the window."""
        lines = [f"{k}: {self.plain[k]}" for k in sorted(self.plain)]
        lines += [f"log {k}: {self.logpart[k]}" for k in sorted(self.logpart)]
        lines.append(f"window: [{self.min_exp}, {self.order})")
        return "\n".join(lines)

    def __repr__(self):
        head = ", ".join(f"{k}: {self.plain[k]}" for k in sorted(self.plain)[:4])
        return f"<LogLaurentSeries [{self.min_exp}, {self.order}) {head}{' ...' if len(self.plain) > 4 else ''}>"


def _as_rat(v, names):
    if isinstance(v, ParamRat):
        return v
    return ParamRat.const(v, names)


def _convolve(a, b, order, out=None):
    out = {} if out is None else out
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            if k >= order:
                continue
            p = x * y
            w = out.get(k)
            out[k] = p if w is None else w + p
    return out


def series_mul(a, b):
    """Product of two series; log(tau)^2 is rejected."""
    if a.logpart and b.logpart:
        raise LogSquared("both factors carry log(tau) parts")
    order = min(a.order + b.min_exp, b.order + a.min_exp)
    min_exp = a.min_exp + b.min_exp
    if order <= min_exp:
        raise InsufficientOrder(f"product has empty window [{min_exp}, {order})")
    plain = _clean(_convolve(a.plain, b.plain, order))
    logpart = {}
    if a.logpart:
        logpart = _clean(_convolve(a.logpart, b.plain, order))
    elif b.logpart:
        logpart = _clean(_convolve(a.plain, b.logpart, order))
    return LogLaurentSeries._raw(plain, logpart, min_exp, order, a.names)


def series_integrate(a):
    """Termwise antiderivative with zero constant; rho*tau^-1 becomes rho*log(tau)."""
    if a.logpart:
        raise LogSquared("integrating a log-carrying series is not supported")
    plain = {}
    logpart = {}
    for k, v in a.plain.items():
        if k == -1:
            logpart[0] = v
        else:
            plain[k + 1] = v / (k + 1)
    return LogLaurentSeries._raw(plain, logpart, a.min_exp + 1, a.order + 1, a.names)


def residue(a):
    """Coefficient of tau^-1 in the plain part."""
    if -1 >= a.order:
        raise InsufficientOrder(f"tau^-1 lies outside the window [{a.min_exp}, {a.order})")
    return a.coeff(-1)


def product_coeff(a, b, k):
    """Coefficient of tau^k in a*b without forming the whole product."""
    if a.logpart or b.logpart:
        raise LogSquared("product_coeff only handles log-free factors")
    order = min(a.order + b.min_exp, b.order + a.min_exp)
    if k >= order:
        raise InsufficientOrder(f"tau^{k} outside the product window (order {order})")
    total = ParamRat.const(0, a.names)
    for i, x in a.plain.items():
        y = b.plain.get(k - i)
        if y is not None:
            total = total + x * y
    return total
