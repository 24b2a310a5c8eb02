"""Exact Morales-Ramis analysis of the three-dimensional Henon-Heiles family.

The Hamiltonian studied is

    H = (p1^2 + p2^2 + p3^2)/2 + (A q1^2 + C q2^2 + B q3^2)/2
        + (alpha q1^2 + gamma q2^2) q3 + beta q3^3 / 3

and :func:`hh3d.analysis.analyze` decides, with exact certificates, whether a
rational parameter tuple is one of the known integrable cases or provably
non-integrable by meromorphic first integrals.
"""

__version__ = "0.1.0"

from .algebra import ParamPoly, ParamRat, parse_rational, rational_sqrt
from .series import LogLaurentSeries
from .analysis import Verdict, analyze, report_serialize

__all__ = [
    "ParamPoly",
    "ParamRat",
    "parse_rational",
    "rational_sqrt",
    "LogLaurentSeries",
    "Verdict",
    "analyze",
    "report_serialize",
    "__version__",
]
