import random
from fractions import Fraction
from itertools import combinations

import pytest

from simplex_ramsey.deficits import DeficitDecomposition, build_embedding
from simplex_ramsey.exactgeom import SquaredDistanceMatrix

ACCEPTANCE_LINES: list[str] = []


def tetra_sqdist():
    """The d=3 member with (s, t, u) = (1, 3, 3), 0-based labels."""
    return SquaredDistanceMatrix.from_pairs(4, {
        (0, 1): 7, (0, 3): 7, (0, 2): 4, (1, 2): 4, (1, 3): 4, (2, 3): 4})


def random_certified_simplex(rng: random.Random, max_n: int = 6):
    """Random simplex built from a random decomposition for diameter pair (0, 1).

    Reserve in [1, 20] and at most five subset masses in (0, 15], so every
    squared distance lands in [1, 100].  A positive reserve makes the
    result a nondegenerate simplex.
    """
    n = rng.randint(2, max_n)
    subsets = [B for k in range(2, n + 1) for B in combinations(range(n), k)
               if not (0 in B and 1 in B)]
    masses = {}
    for B in rng.sample(subsets, min(len(subsets), rng.randint(0, 5))):
        masses[B] = Fraction(rng.randint(1, 60), 4)
    reserve = Fraction(rng.randint(4, 80), 4)
    D2 = reserve + sum(masses.values(), Fraction(0))
    dec = DeficitDecomposition(n, masses, reserve, (0, 1), D2)
    return build_embedding(dec).derived_sqdist


@pytest.fixture
def tetra():
    return tetra_sqdist()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
