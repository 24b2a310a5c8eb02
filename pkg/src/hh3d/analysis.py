"""The decision pipeline: from (A, B, C, alpha, beta, gamma) to a certified verdict.

Stages, in order:

1. alpha = gamma = 0: the Hamiltonian separates.
2. Degenerate scalings (beta = 0, or exactly one of alpha, gamma zero) are
   reported as inconclusive.
3. The homogeneous cubic part must have alpha1 = gamma1 in {1, 1/2, 1/6, 1/16};
   otherwise table or gap certificates prove non-integrability.
4. A B C = 0 is outside the scope of the remaining tests.
5. alpha1 = 1/16: the Lamé condition b1 = 0 on both normal branches.
6. alpha1 = 1/6: quartic integrals in involution.
7. alpha1 = 1: level-3 residues vanish only for A1 = B1 = C1.
8. alpha1 = 1/2: a constant nonzero residue.
"""

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .algebra import ParamRat, format_rational, parse_rational
from .errors import InvalidInput
from .homogeneous import candidate_search, obstructions
from .lame import classify_theoremB1, lame_coefficients
from .poisson import verify_case
from .variational import residue_certificate, scan_residues

SCHEMA_VERSION = 1
F = Fraction

INTEGRABLE = "integrable_known"
NON_INTEGRABLE = "non_integrable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class AnalysisConfig:
    order: int = 14
    s_bound: int = 50
    l_bound: int = 50
    scan_rhs: bool = False


@dataclass
class Verdict:
    status: str
    case: str = None
    certificates: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    inputs: dict = field(default_factory=dict)
    reduced: dict = field(default_factory=dict)
    config: AnalysisConfig = field(default_factory=AnalysisConfig)

    @property
    def definitive(self):
        return self.status != INCONCLUSIVE


def _rational(name, value):
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInput(f"{name}: {value!r} is not an exact rational")
    if isinstance(value, (int, Fraction)):
        return F(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInput(f"{name}: unsupported value {value!r}")


_candidate_cache = {}


def _candidates(config):
    key = (config.s_bound, config.l_bound)
    if key not in _candidate_cache:
        _candidate_cache[key] = candidate_search(*key)
    return _candidate_cache[key]


def analyze(A, B, C, alpha, beta, gamma, config=None):
    config = config or AnalysisConfig()
    names = ("A", "B", "C", "alpha", "beta", "gamma")
    vals = [_rational(n, v) for n, v in zip(names, (A, B, C, alpha, beta, gamma))]
    A, B, C, alpha, beta, gamma = vals
    v = Verdict(INCONCLUSIVE, inputs=dict(zip(names, vals)), config=config)

    v.trace.append("separable")
    if alpha == 0 and gamma == 0:
        rep = verify_case("separable")
        v.status, v.case = INTEGRABLE, "separable"
        v.notes.append("alpha = gamma = 0: the Hamiltonian splits into three one-degree-of-freedom parts")
        v.notes.append(f"separation integrals in involution: {rep.passed}")
        return v

    v.trace.append("degenerate_scaling")
    if beta == 0:
        v.notes.append("beta = 0 with alpha or gamma nonzero: the cubic part cannot be normalized by beta")
        return v
    alpha1, gamma1 = alpha / beta, gamma / beta
    A1, B1, C1 = A / beta, B / beta, C / beta
    v.reduced = {"alpha1": alpha1, "gamma1": gamma1, "A1": A1, "B1": B1, "C1": C1}
    if alpha == 0 or gamma == 0:
        v.notes.append("exactly one of alpha, gamma vanishes: the Darboux point analysis needs both nonzero")
        return v

    v.trace.append("homogeneous")
    if gamma1 != alpha1 or alpha1 not in _candidates(config):
        certs = obstructions(alpha1, gamma1)
        if not certs:
            certs = [{"kind": "step1", "alpha1": alpha1, "gamma1": gamma1,
                      "reason": "alpha1 = gamma1 must lie in {1, 1/2, 1/6, 1/16}"}]
        v.certificates.extend(certs)
        v.status = NON_INTEGRABLE
        return v

    v.trace.append("nonzero_quadratic")
    if A * B * C == 0:
        v.notes.append("A B C = 0: the remaining tests assume nonzero quadratic coefficients")
        return v

    point = {"A1": A1, "B1": B1, "C1": C1, "h": F(0)}
    if alpha1 == F(1, 16):
        v.trace.append("lame")
        holds = True
        for branch in ("Xi1", "Xi2"):
            data = lame_coefficients(alpha1, branch)
            lv = classify_theoremB1(data)
            if not lv.holds_at(point):
                holds = False
                v.certificates.append({
                    "kind": "lame",
                    "branch": branch,
                    "case": lv.case,
                    "conditions": [[(lab, str(e)) for lab, e in alt] for alt in lv.alternatives],
                    "values": [[(lab, e.evaluate(point)) for lab, e in alt] for alt in lv.alternatives],
                })
        if holds:
            rep = verify_case("case_iii")
            v.status, v.case = INTEGRABLE, "iii"
            v.notes.append(f"rotation integral F in involution with H: {rep.passed}")
            v.notes.extend(rep.unchecked)
        else:
            v.status = NON_INTEGRABLE
        return v

    if alpha1 == F(1, 6):
        v.trace.append("poisson")
        equal = A == C
        rep = verify_case("case_ii", equal_AC=equal)
        if not rep.passed:
            raise AssertionError("quartic integrals failed to commute")
        v.status, v.case = INTEGRABLE, "ii"
        v.notes.extend(rep.notes)
        return v

    v.trace.append("residue")
    certs = residue_certificate(alpha1, config.order)
    values = [(c, c.evaluate(point)) for c in certs]
    if config.scan_rhs:
        v.trace.append("residue_scan")
        hits = scan_residues(alpha1, config.order)
        nonzero = sum(1 for hit in hits if hit.residue.evaluate(point) != 0)
        v.notes.append(f"residue scan: {len(hits)} nonzero residue forms, {nonzero} nonzero at this point")
    if alpha1 == 1 and all(val == 0 for _, val in values):
        rep = verify_case("case_i")
        v.status, v.case = INTEGRABLE, "i"
        v.notes.append(f"rotation integral F in involution with H: {rep.passed}")
        v.notes.extend(rep.unchecked)
        return v
    for c, val in values:
        if val != 0:
            d = c.to_dict()
            d["residue_form"] = d.pop("value")
            d["value"] = val
            v.certificates.append(d)
    v.status = NON_INTEGRABLE
    return v


# -- serialization -----------------------------------------------------------

def _plain(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, ParamRat):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(val) for k, val in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(val) for val in x]
    return x


def verdict_dict(v):
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "status": v.status,
        "case": v.case,
        "inputs": _plain(v.inputs),
        "reduced": _plain(v.reduced),
        "certificates": _plain(v.certificates),
        "trace": list(v.trace),
        "notes": list(v.notes),
        "config": asdict(v.config),
    }


def report_serialize(v, format="json"):
    """Deterministic bytes: JSON (sorted keys) or a short text report."""
    d = verdict_dict(v)
    if format == "json":
        return (json.dumps(d, indent=2, sort_keys=True) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"status: {d['status']}"]
    if d["case"]:
        lines.append(f"case: {d['case']}")
    lines.append("inputs: " + " ".join(f"{k}={val}" for k, val in d["inputs"].items()))
    if d["reduced"]:
        lines.append("reduced: " + " ".join(f"{k}={val}" for k, val in d["reduced"].items()))
    lines.append("trace: " + " -> ".join(d["trace"]))
    for c in d["certificates"]:
        body = ", ".join(f"{k}={c[k]}" for k in sorted(c) if k not in ("kind", "provenance"))
        lines.append(f"certificate [{c['kind']}] {body}")
    for n in d["notes"]:
        lines.append(f"note: {n}")
    lines.append("parameters outside the rationals are not accepted; irrational alpha1 already "
                 "fails the rationality of the eigenvalues")
    lines.append(f"tool {d['tool_version']}, schema {d['schema_version']}")
    return ("\n".join(lines) + "\n").encode()
