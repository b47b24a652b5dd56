"""Exhaustive colorings on tiny configurations.

Run:  python3 demos/toy_ramsey.py
"""
from simplex_ramsey.exactgeom import regular_sqdist
from simplex_ramsey.ramseytoy import (
    FiniteConfig,
    arrow_check,
    config_from_points,
    copy_sets,
    pigeonhole_witness,
    product_config,
    regular_simplex_config,
    segment,
)


def show(R, A, q, name):
    v = arrow_check(R, A, q)
    extra = f" witness {v.witness_coloring}" if v.witness_coloring else ""
    print(f"{name:<44} {v.status.value:<6} ({v.colorings_checked} colorings){extra}")


for k, q in [(1, 2), (1, 3), (2, 2)]:
    show(pigeonhole_witness(k, q), regular_simplex_config(k).sqdist, q,
         f"{q * k + 1} points -> regular {k}-simplex, {q} colors")

tri = regular_simplex_config(2)
show(tri, tri.sqdist, 2, "triangle -> triangle, 2 colors")

square = config_from_points([[0, 0], [1, 0], [1, 1], [0, 1]], "unit square")
show(square, segment(2), 2, "unit square -> diagonal, 2 colors")

# A product of two witnesses contains copies of the product pattern.
R = product_config(pigeonhole_witness(1, 2), pigeonhole_witness(1, 2))
pattern = FiniteConfig(regular_sqdist(2, 2), "diagonal")
print(f"\n{R.label}: {R.m} points, {len(copy_sets(R, pattern.sqdist))} diagonals")
show(R, pattern.sqdist, 2, "triangle x triangle -> diagonal, 2 colors")
