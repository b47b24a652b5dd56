"""Deficit decompositions certifying that a simplex is diameter-Ramsey.

For a simplex with squared diameter ``D2`` attained at a pair ``(a, b)``,
the deficit of a pair is ``D2 - M[i, j]``.  A decomposition spreads the
deficits over vertex subsets ``B`` that do not contain both ``a`` and ``b``:
each pair's deficit is the total mass of the subsets containing it, and the
total mass may not exceed ``D2``.  What is left over is the reserve mass.

Given a decomposition, the simplex sits inside a product of regular
simplices of squared diameter ``D2`` (see :func:`build_embedding`), which
is what makes the certificate work.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

import numpy as np

from . import lp
from .errors import MalformedMatrix, NotADiameterPair, TooManyVertices
from .exactgeom import (
    Pair,
    SquaredDistanceMatrix,
    diameter_sq,
    realize,
    regular_sqdist,
)

Subset = tuple[int, ...]

DEFAULT_MAX_N = 14


def max_vertices() -> int:
    """Vertex cap for the LP search; ``SIMPLEX_RAMSEY_MAX_N`` overrides it."""
    raw = os.environ.get("SIMPLEX_RAMSEY_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class DeficitProfile:
    n: int
    diameter_pair: Pair
    diam_sq: Fraction
    deficits: Mapping[Pair, Fraction]

    def __getitem__(self, ij: Pair) -> Fraction:
        return self.deficits[_pair(*ij)]

    def positive_pairs(self) -> list[Pair]:
        return [p for p in combinations(range(self.n), 2) if self.deficits[p] > 0]

    def total(self) -> Fraction:
        return sum(self.deficits.values(), Fraction(0))


def deficit_profile(M: SquaredDistanceMatrix, pair: Pair) -> DeficitProfile:
    """Deficits ``D2 - M[i, j]`` relative to a diameter-attaining ``pair``.

    Raises
    ------
    NotADiameterPair
        If ``M[pair]`` is not the largest entry of ``M``.
    """
    pair = _pair(*pair)
    D2, _ = diameter_sq(M)
    if pair[0] == pair[1] or not (0 <= pair[0] and pair[1] < M.n) or M[pair] != D2:
        raise NotADiameterPair(f"{pair} does not attain the diameter {D2}")
    deficits = {p: D2 - M[p] for p in M.pairs()}
    return DeficitProfile(M.n, pair, D2, deficits)


def pairwise_criterion(p: DeficitProfile) -> tuple[bool, Fraction]:
    """Special case using only two-element subsets: sum of deficits <= D2."""
    total = p.total()
    return total <= p.diam_sq, total


def admissible_subsets(p: DeficitProfile, max_n: int | None = None) -> list[Subset]:
    """Subsets that can carry positive mass, ordered by size then lexicographically.

    A subset qualifies when it has at least two vertices and every pair
    inside it has positive deficit.  The diameter pair has deficit zero, so
    it is excluded automatically; so is any subset that would be forced to
    zero mass by a zero-deficit pair.
    """
    cap = max_vertices() if max_n is None else max_n
    if p.n > cap:
        raise TooManyVertices(f"{p.n} vertices exceeds the cap of {cap}")
    adj = {i: set() for i in range(p.n)}
    for i, j in p.positive_pairs():
        adj[i].add(j)
        adj[j].add(i)
    out: list[Subset] = []
    # grow cliques level by level; each level is already in lexicographic order
    level = [(i, j) for i, j in p.positive_pairs()]
    while level:
        out.extend(level)
        nxt = []
        for B in level:
            common = set.intersection(*(adj[v] for v in B))
            nxt.extend(B + (v,) for v in sorted(common) if v > B[-1])
        level = nxt
    return out


@dataclass(frozen=True)
class DeficitDecomposition:
    """Masses on admissible subsets plus the reserve ``D2 - sum(masses)``."""

    n: int
    masses: Mapping[Subset, Fraction]
    reserve: Fraction
    diameter_pair: Pair
    diam_sq: Fraction

    def total_mass(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))


def find_decomposition(p: DeficitProfile, max_n: int | None = None,
                       stats: lp.PhaseOneStats | None = None) -> DeficitDecomposition | None:
    """Search for a decomposition by exact Phase-I simplex.

    Rows: one equality per pair with positive deficit, plus the mass row
    ``sum(alpha_B) + alpha_0 = D2`` whose slack is the reserve.  Returns the
    basic solution found, or ``None`` if the system is infeasible.
    """
    family = admissible_subsets(p, max_n)
    # Bland's rule accepts any fixed variable order; reserve and large
    # subsets first keeps pivot counts in the tens instead of thousands
    order = sorted(family, key=lambda B: (-len(B), B))
    rows = {pr: k for k, pr in enumerate(p.positive_pairs())}
    mass_row = len(rows)
    columns = [[(mass_row, 1)]]  # reserve
    for B in order:
        col = [(rows[pr], 1) for pr in combinations(B, 2)]
        col.append((mass_row, 1))
        columns.append(col)
    b = [p.deficits[pr] for pr in rows] + [p.diam_sq]
    x = lp.phase_one(columns, b, stats)
    if x is None:
        return None
    masses = {B: v for B, v in zip(order, x[1:]) if v > 0}
    return DeficitDecomposition(p.n, masses, x[0], p.diameter_pair, p.diam_sq)


def verify_decomposition(p: DeficitProfile, dec: DeficitDecomposition) -> bool:
    """Exact check of every certificate condition."""
    if (dec.n != p.n or dec.diameter_pair != p.diameter_pair
            or dec.diam_sq != p.diam_sq):
        return False
    a, b = p.diameter_pair
    covered = {pr: Fraction(0) for pr in p.deficits}
    for B, alpha in dec.masses.items():
        if alpha < 0 or len(B) < 2 or len(set(B)) != len(B):
            return False
        if any(not 0 <= v < p.n for v in B) or (a in B and b in B):
            return False
        for pr in combinations(sorted(B), 2):
            covered[pr] += alpha
    if any(covered[pr] != p.deficits[pr] for pr in p.deficits):
        return False
    total = dec.total_mass()
    return total <= p.diam_sq and dec.reserve == p.diam_sq - total


def criterion_by_pair(M: SquaredDistanceMatrix, max_n: int | None = None
                      ) -> dict[Pair, DeficitDecomposition | None]:
    """Run :func:`find_decomposition` for every pair attaining the diameter."""
    _, pairs = diameter_sq(M)
    return {pr: find_decomposition(deficit_profile(M, pr), max_n) for pr in pairs}


# -- product embeddings ---------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """One regular-simplex factor of the product.

    ``kind`` is ``"reserve"`` for the full-vertex factor (a single point when
    the reserve is zero) or ``"collapse"`` for the factor attached to
    ``subset``, whose vertices are ``u_B`` followed by ``v_i`` for i not in B.
    Vertex labels are ints for ``v_i``, ``"u"`` for ``u_B`` and ``"*"`` for
    the lone point of a trivial reserve factor.
    """

    kind: str
    side_sq: Fraction
    vertices: tuple[int | str, ...]
    subset: Subset | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sqdist(self) -> SquaredDistanceMatrix:
        return regular_sqdist(self.size, self.side_sq if self.size > 1 else 1)

    @property
    def diam_sq(self) -> Fraction:
        return self.side_sq if self.size > 1 else Fraction(0)


@dataclass(frozen=True)
class ProductEmbedding:
    """The points q_i inside a product of regular simplices.

    ``assignment[i][f]`` is the vertex of factor ``f`` that q_i uses.
    """

    factors: tuple[Factor, ...]
    assignment: tuple[tuple[int | str, ...], ...]
    derived_sqdist: SquaredDistanceMatrix
    diameter_pair: Pair = field(default=(0, 1))

    @property
    def product_diam_sq(self) -> Fraction:
        return sum((f.diam_sq for f in self.factors), Fraction(0))

    def q_sqdist(self, i: int, j: int) -> Fraction:
        """Squared distance between q_i and q_j read off the factor assignment."""
        return sum((f.side_sq for f, a, b in zip(self.factors, self.assignment[i],
                                                 self.assignment[j]) if a != b),
                   Fraction(0))


def build_embedding(dec: DeficitDecomposition) -> ProductEmbedding:
    """Place the simplex's vertices in a product of regular simplices.

    The reserve factor has one vertex per simplex vertex (or is a single
    point if the reserve is zero).  The factor for a subset B maps every
    vertex of B to a shared vertex ``u_B`` and every other vertex i to its
    own ``v_i``.  Two vertices therefore differ in a factor unless the
    subset contains both, and the derived squared distances are
    ``reserve + sum of alpha_B over subsets not containing both``.
    """
    n = dec.n
    factors: list[Factor] = []
    if dec.reserve > 0:
        factors.append(Factor("reserve", dec.reserve, tuple(range(n))))
    else:
        factors.append(Factor("reserve", Fraction(0), ("*",)))
    for B in sorted(dec.masses, key=lambda B: (len(B), B)):
        alpha = dec.masses[B]
        if alpha <= 0:
            continue
        members = set(B)
        verts = ("u",) + tuple(i for i in range(n) if i not in members)
        factors.append(Factor("collapse", alpha, verts, tuple(B)))

    members_of = {B: set(B) for B in dec.masses}
    assignment = []
    for i in range(n):
        row = []
        for f in factors:
            if f.kind == "reserve":
                row.append(i if f.size > 1 else "*")
            else:
                row.append("u" if i in members_of[f.subset] else i)
        assignment.append(tuple(row))

    values = {}
    for i, j in combinations(range(n), 2):
        values[(i, j)] = dec.reserve + sum(
            (alpha for B, alpha in dec.masses.items()
             if not (i in members_of[B] and j in members_of[B])), Fraction(0))
    try:
        derived = SquaredDistanceMatrix.from_pairs(n, values)
    except MalformedMatrix as exc:
        raise ValueError("decomposition collapses two vertices; was it verified?") from exc
    return ProductEmbedding(tuple(factors), tuple(assignment), derived, dec.diameter_pair)


def realize_embedding(emb: ProductEmbedding, tol: float = 1e-9) -> np.ndarray:
    """Float coordinates of q_1..q_n, concatenating per-factor realizations."""
    blocks = []
    for k, f in enumerate(emb.factors):
        if f.size == 1:
            continue
        pts = realize(f.sqdist(), tol)
        index = {name: r for r, name in enumerate(f.vertices)}
        blocks.append(np.array([pts[index[a[k]]] for a in emb.assignment]))
    n = len(emb.assignment)
    if not blocks:
        return np.zeros((n, 0))
    return np.hstack(blocks)


def product_sqdist(M1: SquaredDistanceMatrix, M2: SquaredDistanceMatrix) -> SquaredDistanceMatrix:
    """Squared distances on the Cartesian product; point (i, j) has index ``i * n2 + j``."""
    n1, n2 = M1.n, M2.n
    e1, e2 = M1.entries, M2.entries
    rows = tuple(
        tuple(e1[i][k] + e2[j][l] for k in range(n1) for l in range(n2))
        for i in range(n1) for j in range(n2))
    return SquaredDistanceMatrix(rows)

