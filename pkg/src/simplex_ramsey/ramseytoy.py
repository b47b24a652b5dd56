"""Brute-force checks of the arrow relation R -> (A)_q on tiny configurations.

Congruence is decided on squared distances: a labelled copy of A in R is an
injection f with ``R[f(i), f(j)] == A[i, j]`` for all pairs, which for
point sets in Euclidean space is the same as congruence.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice, product
from typing import Sequence

from .deficits import product_sqdist
from .exactgeom import SquaredDistanceMatrix, as_rational, regular_sqdist, sqdist_from_points

DEFAULT_COLOR_CAP = 2 ** 24


def color_cap() -> int:
    """Coloring cap; ``SIMPLEX_RAMSEY_COLOR_CAP`` overrides the default 2**24."""
    raw = os.environ.get("SIMPLEX_RAMSEY_COLOR_CAP")
    return int(raw) if raw else DEFAULT_COLOR_CAP


@dataclass(frozen=True)
class FiniteConfig:
    """A finite point set given by its squared distances (any dimension)."""

    sqdist: SquaredDistanceMatrix
    label: str = ""

    @property
    def m(self) -> int:
        return self.sqdist.n


class ArrowStatus(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class ArrowVerdict:
    status: ArrowStatus
    witness_coloring: tuple[int, ...] | None
    colorings_checked: int


def regular_simplex_config(k: int, side_sq=1) -> FiniteConfig:
    """Regular k-simplex: k+1 points at mutual squared distance ``side_sq``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return FiniteConfig(regular_sqdist(k + 1, side_sq), f"regular {k}-simplex")


def pigeonhole_witness(k: int, q: int, side_sq=1) -> FiniteConfig:
    """Regular simplex on qk+1 vertices.

    Any q-coloring puts k+1 vertices in one color class, and those span a
    regular k-simplex, so this set arrows the regular k-simplex.
    """
    if k < 1 or q < 1:
        raise ValueError("k and q must be positive")
    return FiniteConfig(regular_sqdist(q * k + 1, side_sq),
                        f"pigeonhole witness k={k} q={q}")


def product_config(R1: FiniteConfig, R2: FiniteConfig) -> FiniteConfig:
    return FiniteConfig(product_sqdist(R1.sqdist, R2.sqdist),
                        f"({R1.label}) x ({R2.label})")


def congruent_copies(R: FiniteConfig | SquaredDistanceMatrix, A: SquaredDistanceMatrix,
                     within: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Every injection of A's vertices into R that preserves squared distances.

    Backtracks over A's vertices in order, extending only with points whose
    distances to the already placed ones match.  ``within`` restricts the
    candidate points of R.
    """
    S = R.sqdist if isinstance(R, FiniteConfig) else R
    e, a = S.entries, A.entries
    cand = list(range(S.n)) if within is None else sorted(within)
    n = A.n
    out: list[tuple[int, ...]] = []
    placed: list[int] = []

    def extend(k: int) -> None:
        if k == n:
            out.append(tuple(placed))
            return
        for x in cand:
            if x in placed:
                continue
            ex = e[x]
            if all(ex[placed[i]] == a[k][i] for i in range(k)):
                placed.append(x)
                extend(k + 1)
                placed.pop()

    extend(0)
    return out


def copy_sets(R: FiniteConfig, A: SquaredDistanceMatrix) -> list[tuple[int, ...]]:
    """Unordered copies: the distinct point sets underlying congruent_copies."""
    return sorted({tuple(sorted(c)) for c in congruent_copies(R, A)})


def has_monochromatic_copy(R: FiniteConfig, A: SquaredDistanceMatrix,
                           coloring: Sequence[int]) -> bool:
    """Search each color class separately for a copy of A."""
    for c in set(coloring):
        cls = [i for i, col in enumerate(coloring) if col == c]
        if len(cls) >= A.n and congruent_copies(R, A, within=cls):
            return True
    return False


def _scan(copies: list[tuple[int, ...]], m: int, q: int, start: int, stop: int
          ) -> tuple[int, tuple[int, ...] | None]:
    """Scan reduced colorings ``start..stop-1`` in lexicographic order.

    Returns (number checked, first coloring without a monochromatic copy).
    """
    checked = 0
    for rest in islice(product(range(q), repeat=m - 1), start, stop):
        col = (0,) + rest
        checked += 1
        if not any(all(col[v] == col[c[0]] for v in c[1:]) for c in copies):
            return checked, col
    return checked, None


def arrow_check(R: FiniteConfig, A: SquaredDistanceMatrix, q: int,
                cap: int | None = None, workers: int = 1) -> ArrowVerdict:
    """Decide R -> (A)_q by enumerating every q-coloring of R.

    The first point's color is fixed to 0 (renaming colors preserves the
    property), leaving q**(m-1) colorings.  Returns INFEASIBLE without
    scanning when q**m exceeds ``cap``.  With ``workers > 1`` the counter
    range is split across processes; the reported witness is still the
    lexicographically least failing coloring.
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    cap = color_cap() if cap is None else cap
    m = R.m
    if q ** m > cap:
        return ArrowVerdict(ArrowStatus.INFEASIBLE, None, 0)
    copies = copy_sets(R, A)
    total = q ** (m - 1)

    if workers <= 1 or total < 2 * workers:
        checked, witness = _scan(copies, m, q, 0, total)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan, *zip(*[(copies, m, q, lo, hi) for lo, hi in bounds])))
        checked, witness = 0, None
        # chunks are in counter order, so the first failing chunk holds the least witness
        for (lo, _), (n_chk, w) in zip(bounds, results):
            if w is not None:
                checked = lo + n_chk
                witness = w
                break
        else:
            checked = total

    if witness is None:
        return ArrowVerdict(ArrowStatus.HOLDS, None, checked)
    if has_monochromatic_copy(R, A, witness):
        raise AssertionError(f"witness {witness} re-check found a monochromatic copy")
    return ArrowVerdict(ArrowStatus.FAILS, witness, checked)


def config_from_points(points, label: str = "") -> FiniteConfig:
    return FiniteConfig(sqdist_from_points(points), label)


def segment(side_sq=1) -> SquaredDistanceMatrix:
    return regular_sqdist(2, as_rational(side_sq))
