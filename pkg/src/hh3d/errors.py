"""Exception hierarchy shared by all modules."""


class HH3Error(Exception):
    """Base class for every error raised by hh3d."""


class InvalidInput(HH3Error, ValueError):
    pass


class ZeroDenominator(HH3Error, ZeroDivisionError):
    pass


class NegativeInput(HH3Error, ValueError):
    pass


class NegativeDiscriminant(HH3Error, ValueError):
    pass


class ZeroParameter(HH3Error, ValueError):
    pass


class InsufficientOrder(HH3Error):
    """A coefficient was requested outside the certified truncation window."""


class LogSquared(HH3Error):
    """An operation would create log(tau)^2 terms, which are not modelled."""


class ResonanceLog(HH3Error):
    """A Frobenius recurrence hit a resonance whose solvability condition fails."""
