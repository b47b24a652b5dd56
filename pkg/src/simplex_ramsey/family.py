"""The three-parameter family A_d(s, t, u) of diameter-Ramsey simplices.

Vertices are 0-based here: vertex 0 is the apex, vertex 2 is the special
vertex whose barycentric coordinate can go negative, and vertices
1, 3, ..., d are interchangeable.  With D2 = s + t + u the squared edges are

* ``M[0, j] = s + t + u`` for j = 1 and j >= 3,
* ``M[0, 2] = s + u``,
* ``M[i, j] = s + t`` for 1 <= i < j <= d.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .deficits import (
    DeficitDecomposition,
    deficit_profile,
    verify_decomposition,
)
from .errors import ClosedFormMismatch, InconsistentCertificate
from .exactgeom import (
    SquaredDistanceMatrix,
    as_rational,
    cf_obstruction,
    circumcenter_barycentric,
)


class Verdict(str, enum.Enum):
    CONJECTURE_COUNTEREXAMPLE = "CONJECTURE_COUNTEREXAMPLE"
    CRITERION_ONLY = "CRITERION_ONLY"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class FamilyParams:
    d: int
    s: Fraction
    t: Fraction
    u: Fraction

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 3:
            raise ValueError(f"dimension must be an integer >= 3, got {self.d!r}")
        for name in ("s", "t", "u"):
            v = as_rational(getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be positive, got {v}")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "d", int(self.d))

    @property
    def n(self) -> int:
        return self.d + 1

    @property
    def diam_sq(self) -> Fraction:
        return self.s + self.t + self.u


def family_sqdist(p: FamilyParams) -> SquaredDistanceMatrix:
    s, t, u = p.s, p.t, p.u
    n = p.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, n):
        rows[0][j] = rows[j][0] = s + u if j == 2 else s + t + u
    for i in range(1, n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = s + t
    return SquaredDistanceMatrix(tuple(tuple(r) for r in rows))


def delta(p: FamilyParams) -> Fraction:
    """Common denominator (d+1) s^2 + 2d (st + su + tu) of the closed form."""
    s, t, u, d = p.s, p.t, p.u, p.d
    return (d + 1) * s * s + 2 * d * (s * t + s * u + t * u)


def family_barycentric_closed_form(p: FamilyParams) -> list[Fraction]:
    s, t, u, d = p.s, p.t, p.u, p.d
    den = delta(p)
    apex = (s + t) * (s + d * u) / den
    generic = (s + 2 * t) * (s + u) / den
    special = (s * s + s * t + s * u - (d - 2) * t * u) / den
    lams = [generic] * p.n
    lams[0] = apex
    lams[2] = special
    return lams


def outside_condition(p: FamilyParams) -> bool:
    """(d - 2) t u > s (s + t + u): the circumcenter leaves the hull."""
    return (p.d - 2) * p.t * p.u > p.s * (p.s + p.t + p.u)


def canonical_decomposition(p: FamilyParams) -> DeficitDecomposition:
    """Mass t on {0, 2}, mass u on {1, 2, ..., d}, reserve s."""
    masses = {(0, 2): p.t, tuple(range(1, p.n)): p.u}
    return DeficitDecomposition(p.n, masses, p.s, (0, 1), p.diam_sq)


@dataclass(frozen=True)
class FamilyReport:
    params: FamilyParams
    sqdist: SquaredDistanceMatrix
    closed_form_lambdas: tuple[Fraction, ...]
    solver_lambdas: tuple[Fraction, ...]
    two_rho_sq: Fraction
    delta_d: Fraction
    outside: bool
    decomposition: DeficitDecomposition
    decomposition_verified: bool
    cf_obstructed: bool
    verdict: Verdict

    @property
    def rho_sq(self) -> Fraction:
        return self.two_rho_sq / 2


def counterexample_report(p: FamilyParams) -> FamilyReport:
    """Assemble and cross-check every certificate for ``A_d(s, t, u)``.

    Raises
    ------
    ClosedFormMismatch
        If the generic circumcenter solver disagrees with the closed form.
    InconsistentCertificate
        If a verified decomposition coexists with the circumradius
        obstruction.
    """
    M = family_sqdist(p)
    closed = tuple(family_barycentric_closed_form(p))
    circ = circumcenter_barycentric(M)
    if circ.lambdas != closed:
        raise ClosedFormMismatch(
            f"solver {circ.lambdas} != closed form {closed} for {p}")
    outside = any(lam < 0 for lam in circ.lambdas)
    if outside != outside_condition(p):
        raise ClosedFormMismatch(f"hull test disagrees with the outside condition for {p}")
    dec = canonical_decomposition(p)
    ok = verify_decomposition(deficit_profile(M, (0, 1)), dec)
    obstructed = cf_obstruction(circ.rho_sq, p.diam_sq)
    if ok and obstructed:
        raise InconsistentCertificate(f"certificate verified but 2 rho^2 > D^2 for {p}")
    if not ok:
        verdict = Verdict.NOT_APPLICABLE
    elif outside:
        verdict = Verdict.CONJECTURE_COUNTEREXAMPLE
    else:
        verdict = Verdict.CRITERION_ONLY
    return FamilyReport(p, M, closed, circ.lambdas, circ.two_rho_sq, delta(p), outside,
                        dec, ok, obstructed, verdict)


def default_grid(values: Iterable[int] = range(1, 6)) -> list[tuple[Fraction, Fraction, Fraction]]:
    vals = [Fraction(v) for v in values]
    return list(product(vals, repeat=3))


def scan(d: int, grid: Sequence[tuple[object, object, object]] | None = None) -> list[FamilyParams]:
    """Grid points (s, t, u) whose family member is a conjecture counterexample."""
    if grid is None:
        grid = default_grid()
    hits = []
    for s, t, u in grid:
        p = FamilyParams(d, s, t, u)
        if counterexample_report(p).verdict is Verdict.CONJECTURE_COUNTEREXAMPLE:
            hits.append(p)
    return hits
