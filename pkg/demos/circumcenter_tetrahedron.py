"""Exact circumcenter of a tetrahedron whose circumcenter lies outside it.

Run:  python3 demos/circumcenter_tetrahedron.py
"""
import numpy as np

from simplex_ramsey.exactgeom import (
    SquaredDistanceMatrix,
    align_to_frame,
    circumcenter_barycentric,
    circumcenter_in_hull,
    circumcenter_numeric,
    diameter_sq,
    format_rational,
    gram_from_sqdist,
    is_nondegenerate_simplex,
    leading_minors,
    realize,
)

M = SquaredDistanceMatrix.from_pairs(4, {
    (0, 1): 7, (0, 3): 7, (0, 2): 4, (1, 2): 4, (1, 3): 4, (2, 3): 4})

print("squared distances:")
for row in M.to_lists():
    print("   ", "  ".join(f"{format_rational(x):>3}" for x in row))

minors = leading_minors(gram_from_sqdist(M))
print("Gram leading minors:", [format_rational(m) for m in minors])
print("nondegenerate:", is_nondegenerate_simplex(M))

D2, pairs = diameter_sq(M)
print(f"squared diameter {D2}, attained by {pairs}")

c = circumcenter_barycentric(M)
print("barycentric circumcenter:", [format_rational(x) for x in c.lambdas])
print("squared circumradius:", format_rational(c.rho_sq))
print("inside the closed hull:", circumcenter_in_hull(c))
print("2 rho^2 <= D^2:", 2 * c.rho_sq <= D2)

# Float picture: base triangle in the xy-plane, apex above it.
P = align_to_frame(realize(M), origin=1, axis=2, plane=3, up=0)
P[np.abs(P) < 1e-12] = 0.0
np.set_printoptions(precision=6, suppress=True)
print("coordinates:\n", P)
print("numeric circumcenter:", circumcenter_numeric(P))
print("from barycentrics:   ", np.array([float(x) for x in c.lambdas]) @ P)
