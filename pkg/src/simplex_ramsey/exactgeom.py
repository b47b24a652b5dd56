"""Exact-rational distance geometry for simplices.

A simplex is carried around as its matrix of squared pairwise distances.
Everything here is exact (``fractions.Fraction``) except :func:`realize`
and the small numeric helpers next to it, which produce float coordinates.

Vertex indices are 0-based throughout the library.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateSimplex,
    DuplicatePoints,
    MalformedMatrix,
    ParseError,
    SingularSystem,
    ToleranceExceeded,
)

Pair = tuple[int, int]


def as_rational(value) -> Fraction:
    """Parse ``value`` into an exact Fraction.

    Accepts ints, Fractions (or any ``numbers.Rational``), and strings such
    as ``"3"``, ``"-1.25"``, ``"7/4"`` or ``"2e-3"``.  Binary floats are
    refused: ``0.1`` has no exact decimal meaning and would silently turn an
    intended rational into something else.
    """
    if isinstance(value, bool):
        raise ParseError(f"booleans are not rationals: {value!r}")
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            f"binary float {value!r} rejected; pass a decimal or 'p/q' string")
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational literal: {value!r}") from exc
    raise ParseError(f"cannot read {type(value).__name__} as a rational")


def format_rational(x: Fraction) -> str:
    """Render as ``"p/q"`` in lowest terms, or ``"p"`` when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SquaredDistanceMatrix:
    """Symmetric matrix of squared pairwise distances, zero diagonal.

    Off-diagonal entries must be strictly positive (distinct points).  A
    1x1 matrix is allowed and stands for a single point, which is handy as
    an identity factor in products.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise MalformedMatrix("empty matrix")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedMatrix(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise MalformedMatrix(f"diagonal entry ({i},{i}) is {rows[i][i]}")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise MalformedMatrix(f"entries ({i},{j}) and ({j},{i}) differ")
                if rows[i][j] < 0:
                    raise MalformedMatrix(f"negative squared distance at ({i},{j})")
                if rows[i][j] == 0:
                    raise DuplicatePoints(f"vertices {i} and {j} coincide")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_pairs(cls, n: int, values: dict[Pair, object]) -> "SquaredDistanceMatrix":
        """Build from a ``{(i, j): value}`` map covering every pair i<j."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, j in combinations(range(n), 2):
            key = (i, j) if (i, j) in values else (j, i)
            if key not in values:
                raise MalformedMatrix(f"missing pair {(i, j)}")
            rows[i][j] = rows[j][i] = as_rational(values[key])
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Pair) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def pairs(self) -> Iterable[Pair]:
        return combinations(range(self.n), 2)

    def submatrix(self, idx: Sequence[int]) -> "SquaredDistanceMatrix":
        return SquaredDistanceMatrix(
            tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def permuted(self, perm: Sequence[int]) -> "SquaredDistanceMatrix":
        """Relabel so that new vertex k is old vertex ``perm[k]``."""
        return self.submatrix(perm)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def regular_sqdist(n: int, side_sq=1) -> SquaredDistanceMatrix:
    """Regular simplex on ``n`` vertices with every squared edge ``side_sq``."""
    s = as_rational(side_sq)
    return SquaredDistanceMatrix(
        tuple(tuple(Fraction(0) if i == j else s for j in range(n)) for i in range(n)))


def gram_from_sqdist(M: SquaredDistanceMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the edge vectors p_{i+1} - p_0, i = 0..n-2."""
    e = M.entries
    k = M.n - 1
    return tuple(
        tuple((e[0][i + 1] + e[0][j + 1] - e[i + 1][j + 1]) / 2 for j in range(k))
        for i in range(k))


def _integer_rows(A: Sequence[Sequence[Fraction]]) -> tuple[int, list[list[int]]]:
    # one common factor for every row, so minors scale by den**k
    den = 1
    for row in A:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    return den, [[int(Fraction(x) * den) for x in row] for row in A]


def leading_minors(A: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Leading principal minors of a square matrix, exactly.

    Uses Bareiss elimination without row exchanges on an integer rescaling
    of ``A``: the k-th pivot is then the k-th leading minor.  Stops after the
    first zero minor, since later pivots are undefined without pivoting.
    """
    k = len(A)
    if k == 0:
        return []
    den, a = _integer_rows(A)
    minors = []
    prev = 1
    for p in range(k):
        piv = a[p][p]
        minors.append(Fraction(piv, den ** (p + 1)))
        if piv == 0:
            break
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * piv - a[i][p] * a[p][j]) // prev
        prev = piv
    return minors


def determinant(A: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free elimination with row exchanges."""
    k = len(A)
    if k == 0:
        return Fraction(1)
    den, a = _integer_rows(A)
    sign = 1
    prev = 1
    for p in range(k):
        r = next((i for i in range(p, k) if a[i][p] != 0), None)
        if r is None:
            return Fraction(0)
        if r != p:
            a[p], a[r] = a[r], a[p]
            sign = -sign
        piv = a[p][p]
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * piv - a[i][p] * a[p][j]) // prev
        prev = piv
    return Fraction(sign * a[k - 1][k - 1], den ** k)


def solve_linear(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve the square system ``A x = b`` exactly.

    Fraction-free forward elimination on the integer-scaled augmented
    matrix, pivoting on the first row with a nonzero entry, followed by
    rational back substitution.
    """
    k = len(A)
    rows = [list(map(Fraction, r)) + [Fraction(bi)] for r, bi in zip(A, b)]
    # scale each row independently; row scaling does not change the solution
    a = []
    for r in rows:
        den = 1
        for x in r:
            den = math.lcm(den, x.denominator)
        a.append([int(x * den) for x in r])
    prev = 1
    for p in range(k):
        r = next((i for i in range(p, k) if a[i][p] != 0), None)
        if r is None:
            raise SingularSystem(f"no pivot in column {p}")
        a[p], a[r] = a[r], a[p]
        piv = a[p][p]
        for i in range(p + 1, k):
            for j in range(p + 1, k + 1):
                a[i][j] = (a[i][j] * piv - a[i][p] * a[p][j]) // prev
            a[i][p] = 0
        prev = piv
    x = [Fraction(0)] * k
    for i in reversed(range(k)):
        acc = Fraction(a[i][k])
        for j in range(i + 1, k):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def is_nondegenerate_simplex(M: SquaredDistanceMatrix) -> bool:
    """True iff the vertices are affinely independent points of some R^m.

    Equivalent to the Gram matrix being positive definite, which is checked
    through its leading principal minors.
    """
    if M.n < 2:
        return False
    return all(m > 0 for m in leading_minors(gram_from_sqdist(M)))


def diameter_sq(M: SquaredDistanceMatrix) -> tuple[Fraction, list[Pair]]:
    """Largest squared distance and every pair (i<j) attaining it."""
    if M.n < 2:
        return Fraction(0), []
    best = max(M[p] for p in M.pairs())
    return best, [p for p in M.pairs() if M[p] == best]


@dataclass(frozen=True)
class CircumcenterResult:
    """Barycentric circumcenter and twice the squared circumradius."""

    lambdas: tuple[Fraction, ...]
    two_rho_sq: Fraction

    @property
    def rho_sq(self) -> Fraction:
        return self.two_rho_sq / 2


def circumcenter_barycentric(M: SquaredDistanceMatrix) -> CircumcenterResult:
    """Solve ``sum_j lam_j M_ij = 2 rho^2`` for all i together with ``sum lam = 1``.

    Raises
    ------
    DegenerateSimplex
        If ``M`` is not a nondegenerate simplex.
    SingularSystem
        If elimination breaks down anyway (should not happen).
    """
    if not is_nondegenerate_simplex(M):
        raise DegenerateSimplex("circumcenter needs affinely independent vertices")
    n = M.n
    # unknowns: lam_0..lam_{n-1}, w = 2 rho^2
    A = [list(M.entries[i]) + [Fraction(-1)] for i in range(n)]
    A.append([Fraction(1)] * n + [Fraction(0)])
    b = [Fraction(0)] * n + [Fraction(1)]
    sol = solve_linear(A, b)
    return CircumcenterResult(tuple(sol[:n]), sol[n])


def check_circumcenter(M: SquaredDistanceMatrix, c: CircumcenterResult) -> bool:
    """Re-verify a circumcenter certificate against ``M`` exactly."""
    if len(c.lambdas) != M.n or sum(c.lambdas) != 1 or c.two_rho_sq <= 0:
        return False
    return all(
        sum(lam * mij for lam, mij in zip(c.lambdas, M.entries[i])) == c.two_rho_sq
        for i in range(M.n))


def circumcenter_in_hull(c: CircumcenterResult) -> bool:
    """Closed-hull membership: every barycentric coordinate is >= 0."""
    return all(lam >= 0 for lam in c.lambdas)


def cf_obstruction(rho_sq, diam_sq) -> bool:
    """True when the circumradius exceeds diam/sqrt(2), i.e. 2 rho^2 > D^2.

    A simplex for which this holds cannot be diameter-Ramsey.
    """
    return 2 * as_rational(rho_sq) > as_rational(diam_sq)


def sqdist_from_points(points: Sequence[Sequence[object]]) -> SquaredDistanceMatrix:
    """Exact squared distances between points with rational coordinates."""
    pts = [tuple(as_rational(x) for x in p) for p in points]
    if not pts:
        raise MalformedMatrix("no points given")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise MalformedMatrix("points have different dimensions")
    n = len(pts)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        d = sum((a - b) ** 2 for a, b in zip(pts[i], pts[j]))
        if d == 0:
            raise DuplicatePoints(f"points {i} and {j} coincide")
        rows[i][j] = rows[j][i] = d
    return SquaredDistanceMatrix(tuple(tuple(r) for r in rows))


# -- floating point realization ----------------------------------------------

def float_sqdist(points: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - points[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def max_relative_error(points: np.ndarray, M: SquaredDistanceMatrix) -> float:
    target = np.array([[float(x) for x in row] for row in M.entries])
    got = float_sqdist(points)
    off = ~np.eye(M.n, dtype=bool)
    if not off.any():
        return 0.0
    return float(np.max(np.abs(got[off] - target[off]) / target[off]))


def realize(M: SquaredDistanceMatrix, tol: float = 1e-9) -> np.ndarray:
    """Float coordinates for the simplex ``M`` in dimension n-1.

    Vertex 0 sits at the origin; the rest come from a Cholesky factor of the
    Gram matrix, so vertex k lies in the span of the first k axes.

    Raises
    ------
    DegenerateSimplex
        If ``M`` is not a nondegenerate simplex.
    ToleranceExceeded
        If reconstructed squared distances differ from ``M`` by more than
        ``tol`` relatively.
    """
    if not is_nondegenerate_simplex(M):
        raise DegenerateSimplex("only nondegenerate simplices can be realized")
    G = np.array([[float(x) for x in row] for row in gram_from_sqdist(M)])
    L = np.linalg.cholesky(G)
    pts = np.vstack([np.zeros((1, M.n - 1)), L])
    err = max_relative_error(pts, M)
    if not err <= tol:
        raise ToleranceExceeded(f"relative error {err:.3g} exceeds {tol:.3g}")
    return pts


def circumcenter_numeric(points: np.ndarray) -> np.ndarray:
    """Circumcenter of a full-dimensional float simplex (n points in R^(n-1))."""
    p0 = points[0]
    E = points[1:] - p0
    rhs = 0.5 * np.einsum("ij,ij->i", E, E)
    return p0 + np.linalg.solve(E, rhs)


def align_to_frame(points: np.ndarray, origin: int, axis: int, plane: int,
                   up: int | None = None) -> np.ndarray:
    """Apply a rigid motion putting ``origin`` at 0, ``axis`` on +x and
    ``plane`` in the upper half of the xy-plane.

    In 3 or more dimensions the remaining orientation is fixed by
    Gram-Schmidt on the other vertices; ``up`` picks a vertex whose last
    coordinate is made nonnegative (a reflection is applied if needed).
    """
    P = np.asarray(points, dtype=float) - points[origin]
    order = [axis, plane] + [k for k in range(len(P)) if k not in (origin, axis, plane)]
    basis: list[np.ndarray] = []
    for k in order:
        v = P[k].copy()
        for e in basis:
            v -= (v @ e) * e
        nv = np.linalg.norm(v)
        if nv > 1e-12 * max(1.0, np.linalg.norm(P[k])):
            basis.append(v / nv)
    Q = np.array(basis)
    out = P @ Q.T
    if up is not None and out[up, -1] < 0:
        out[:, -1] = -out[:, -1]
    return out
