"""Find a deficit decomposition by exact LP, then build the product embedding.

Run:  python3 demos/decomposition_and_embedding.py
"""
import numpy as np

from simplex_ramsey.deficits import (
    admissible_subsets,
    build_embedding,
    deficit_profile,
    find_decomposition,
    pairwise_criterion,
    realize_embedding,
    verify_decomposition,
)
from simplex_ramsey.exactgeom import float_sqdist, format_rational as fr
from simplex_ramsey.family import FamilyParams, family_sqdist
from simplex_ramsey.lp import PhaseOneStats

M = family_sqdist(FamilyParams(4, 1, 3, 3))
profile = deficit_profile(M, (0, 1))
print(f"{M.n} vertices, D^2 = {fr(profile.diam_sq)}")
print("positive deficits:", {ij: fr(profile[ij]) for ij in profile.positive_pairs()})

ok, total = pairwise_criterion(profile)
print(f"pairwise sum {fr(total)} <= D^2? {ok}")

family = admissible_subsets(profile)
print(f"{len(family)} admissible subsets, largest {family[-1]}")

stats = PhaseOneStats()
dec = find_decomposition(profile, stats=stats)
print(f"LP with {stats.rows} rows, {stats.cols} columns: feasible after {stats.pivots} pivots")
for B, a in dec.masses.items():
    print(f"   alpha{B} = {fr(a)}")
print("   reserve =", fr(dec.reserve))
print("verified:", verify_decomposition(profile, dec))

emb = build_embedding(dec)
print("\nfactors of the product:")
for f in emb.factors:
    print(f"   {f.kind:<8} B={f.subset}  side^2 {fr(f.side_sq)}  vertices {f.vertices}")
print("vertex assignment:")
for i, row in enumerate(emb.assignment):
    print(f"   q{i}: {row}")
print("derived distances equal the input:", emb.derived_sqdist == M)
print("product diameter^2:", fr(emb.product_diam_sq))

X = realize_embedding(emb)
err = np.max(np.abs(float_sqdist(X) - np.array(M.to_lists(), dtype=float)))
print(f"realized in R^{X.shape[1]}, max abs distance error {err:.2e}")
