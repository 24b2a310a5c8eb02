"""Necessary conditions for the cubic homogeneous part of the potential.

The top-degree Hamiltonian, after rescaling by beta, is

    H = |p|^2/2 + (alpha1 x^2 + gamma1 y^2) z + z^3/3.

Its Darboux points give Yoshida eigenvalue triples; integrability forces each
eigenvalue into the degree-3 rows of the Morales-Ramis table and each pair to
satisfy the square-root gap relation.  Together these leave
alpha1 = gamma1 in {1, 1/2, 1/6, 1/16}.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import rational_sqrt
from .errors import NegativeDiscriminant, ZeroParameter

F = Fraction


@dataclass(frozen=True)
class TableRow:
    """One row (k, lambda(s)) of the Morales-Ramis table; k None means any degree."""

    row_id: int
    k: object
    value: object = None  # callable (k, s) -> Fraction, or None for "any complex"

    def applies_to(self, k):
        return self.k is None or self.k == k

    def at(self, k, s):
        return self.value(F(k), F(s))

    def quadratic(self, k):
        """(a, b, c) with lambda(s) = a s^2 + b s + c."""
        v0, v1, vm = self.at(k, 0), self.at(k, 1), self.at(k, -1)
        a = (v1 + vm) / 2 - v0
        b = (v1 - vm) / 2
        return a, b, v0


def _shifted(base, sign, u, v, w):
    return lambda k, s: base + sign * (u + v * s) ** 2 / w


MORALES_RAMIS_TABLE = (
    TableRow(1, None, lambda k, s: s + s * (s - 1) * k / 2),
    TableRow(2, 2),
    TableRow(3, -2),
    TableRow(4, -5, _shifted(F(49, 40), -1, F(10, 3), 10, 40)),
    TableRow(5, -5, _shifted(F(49, 40), -1, F(4), 10, 40)),
    TableRow(6, -4, _shifted(F(9, 8), -1, F(4, 3), 4, 8)),
    TableRow(7, -3, _shifted(F(25, 24), -1, F(2), 6, 24)),
    TableRow(8, -3, _shifted(F(25, 24), -1, F(3, 2), 6, 24)),
    TableRow(9, -3, _shifted(F(25, 24), -1, F(6, 5), 6, 24)),
    TableRow(10, -3, _shifted(F(25, 24), -1, F(12, 5), 6, 24)),
    TableRow(11, 3, _shifted(F(-1, 24), 1, F(2), 6, 24)),
    TableRow(12, 3, _shifted(F(-1, 24), 1, F(3, 2), 6, 24)),
    TableRow(13, 3, _shifted(F(-1, 24), 1, F(6, 5), 6, 24)),
    TableRow(14, 3, _shifted(F(-1, 24), 1, F(12, 5), 6, 24)),
    TableRow(15, 4, _shifted(F(-1, 8), 1, F(4, 3), 4, 8)),
    TableRow(16, 5, _shifted(F(-9, 40), 1, F(10, 3), 10, 40)),
    TableRow(17, 5, _shifted(F(-9, 40), 1, F(4), 10, 40)),
    TableRow(18, None, lambda k, s: ((k - 1) / k + s * (s + 1) * k) / 2),
)

_ROWS = {row.row_id: row for row in MORALES_RAMIS_TABLE}

# The six value families for degree 3, named g1..g6.
CUBIC_FAMILIES = {"g1": 1, "g2": 11, "g3": 12, "g4": 13, "g5": 14, "g6": 18}


def family_value(family, s, k=3):
    return _ROWS[CUBIC_FAMILIES[family]].at(k, s)


@dataclass(frozen=True)
class FamilyHit:
    family: str
    row: int
    s: int


@dataclass(frozen=True)
class EigenvalueTriple:
    source: str  # "C1ZeroPoint", "C2ZeroPoint" or "AxisPoint"
    lambda1: Fraction
    lambda2: Fraction
    lambda3: Fraction
    degenerate: bool = False
    # squares of the Darboux point coordinates (c1^2, c2^2) and c3
    darboux: tuple = field(default=(), compare=False)

    @property
    def normal(self):
        return (self.lambda1, self.lambda2)


def darboux_eigenvalues(alpha1, gamma1):
    """Yoshida eigenvalue triples at the three Darboux point families."""
    alpha1, gamma1 = F(alpha1), F(gamma1)
    if alpha1 == 0 or gamma1 == 0:
        raise ZeroParameter("alpha1 and gamma1 must be nonzero")
    two = F(2)
    return [
        EigenvalueTriple(
            "C1ZeroPoint", alpha1 / gamma1, 1 / gamma1 - 1, two,
            degenerate=(2 - 1 / gamma1 == 0),
            darboux=(F(0), (2 - 1 / gamma1) / (4 * gamma1 ** 2), 1 / (2 * gamma1)),
        ),
        EigenvalueTriple(
            "C2ZeroPoint", gamma1 / alpha1, 1 / alpha1 - 1, two,
            degenerate=(2 - 1 / alpha1 == 0),
            darboux=((2 - 1 / alpha1) / (4 * alpha1 ** 2), F(0), 1 / (2 * alpha1)),
        ),
        EigenvalueTriple("AxisPoint", 2 * alpha1, 2 * gamma1, two, darboux=(F(0), F(0), F(1))),
    ]


def _integer_roots(a, b, c):
    """Integer solutions of a s^2 + b s + c = 0 (exact)."""
    if a == 0:
        if b == 0:
            return []
        s = -c / b
        return [int(s)] if s.denominator == 1 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = rational_sqrt(disc)
    if r is None:
        return []
    roots = {(-b + r) / (2 * a), (-b - r) / (2 * a)}
    return sorted(int(s) for s in roots if s.denominator == 1)


def family_membership(lam, s_bound=None, k=3):
    """All (family, s) with |s| <= s_bound whose value equals ``lam``.

    Every family is quadratic in s, so the integer roots are found exactly;
    ``s_bound`` only filters them (None keeps all).
    """
    lam = F(lam)
    if s_bound is not None and s_bound < 1:
        raise ValueError("s_bound must be >= 1")
    if k != 3:
        rows = [(f"row{r.row_id}", r) for r in MORALES_RAMIS_TABLE if r.applies_to(k)]
    else:
        rows = [(name, _ROWS[rid]) for name, rid in CUBIC_FAMILIES.items()]
    hits = []
    for name, row in rows:
        if row.value is None:
            hits.append(FamilyHit(name, row.row_id, 0))
            continue
        a, b, c = row.quadratic(k)
        for s in _integer_roots(a, b, c - lam):
            if s_bound is None or abs(s) <= s_bound:
                hits.append(FamilyHit(name, row.row_id, s))
    return hits


def in_table(lam, k=3):
    return bool(family_membership(lam, None, k))


@dataclass(frozen=True)
class GapResult:
    status: str  # "satisfied", "violated" or "irrational"
    l: int = None
    flipped: bool = False  # True when the second radical enters with a minus sign
    radicals: tuple = ()

    @property
    def satisfied(self):
        return self.status == "satisfied"


def gap_condition(lambda_i, lambda_j, k=3):
    """Check sqrt((k-2)^2 + 8k li)/(2k) = +-sqrt((k-2)^2 + 8k lj)/(2k) + l, l integer.

    Square roots are determined only up to sign, so both relative signs are
    tried; the same-sign branch is preferred when both work.
    """
    k = F(k)
    di = (k - 2) ** 2 + 8 * k * F(lambda_i)
    dj = (k - 2) ** 2 + 8 * k * F(lambda_j)
    if di < 0 or dj < 0:
        raise NegativeDiscriminant(f"negative radicand in gap condition ({di}, {dj})")
    ri, rj = rational_sqrt(di), rational_sqrt(dj)
    if ri is None or rj is None:
        return GapResult("irrational", radicals=(ri, rj))
    same = (ri - rj) / (2 * k)
    if same.denominator == 1:
        return GapResult("satisfied", int(same), False, (ri, rj))
    flipped = (ri + rj) / (2 * k)
    if flipped.denominator == 1:
        return GapResult("satisfied", int(flipped), True, (ri, rj))
    return GapResult("violated", radicals=(ri, rj))


@dataclass(frozen=True)
class SearchHit:
    relation: str  # "inverse": 1/alpha1 - 1 = g(s); "axis": 2 alpha1 = g(s)
    family: str
    s: int
    l: int
    alpha1: Fraction


def alpha_from_l(l):
    """alpha1 = 24 / (23 + (5 - 6 l)^2), the gap relation against lambda = 1."""
    return F(24, 23 + (5 - 6 * l) ** 2)


def candidate_hits(s_bound, l_bound):
    if s_bound < 1 or l_bound < 1:
        raise ValueError("bounds must be >= 1")
    hits = []
    for l in range(-l_bound, l_bound + 1):
        a = alpha_from_l(l)
        for relation, lam in (("inverse", 1 / a - 1), ("axis", 2 * a)):
            for hit in family_membership(lam, s_bound):
                hits.append(SearchHit(relation, hit.family, hit.s, l, a))
    return hits


def candidate_search(s_bound=50, l_bound=50):
    """alpha1 values passing both table relations; {1, 1/2, 1/6, 1/16} for any bounds >= 10."""
    inverse, axis = set(), set()
    for hit in candidate_hits(s_bound, l_bound):
        (inverse if hit.relation == "inverse" else axis).add(hit.alpha1)
    return frozenset(inverse & axis)


CANDIDATES = frozenset({F(1), F(1, 2), F(1, 6), F(1, 16)})


def obstructions(alpha1, gamma1):
    """Machine-checkable reasons the homogeneous part fails the table tests.

    Returns certificate dicts: ``table_miss`` for an eigenvalue outside every
    degree-3 family (checked for all integers s), ``gap_violation`` for a pair
    of eigenvalues at one Darboux point whose radicals are irrational or do
    not differ by an integer.
    """
    certs = []
    triples = darboux_eigenvalues(alpha1, gamma1)
    for t in triples:
        for name, lam in (("lambda1", t.lambda1), ("lambda2", t.lambda2)):
            if not in_table(lam):
                certs.append({
                    "kind": "table_miss",
                    "darboux_point": t.source,
                    "eigenvalue": name,
                    "value": lam,
                })
    for t in triples:
        try:
            gap = gap_condition(t.lambda1, t.lambda2)
            status = gap.status
        except NegativeDiscriminant:
            status = "irrational"
        if status != "satisfied":
            certs.append({
                "kind": "gap_violation",
                "darboux_point": t.source,
                "lambda1": t.lambda1,
                "lambda2": t.lambda2,
                "status": status,
            })
    return certs
