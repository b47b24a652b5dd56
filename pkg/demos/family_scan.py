"""Scan the one-apex family for simplices with circumcenter outside the hull.

Run:  python3 demos/family_scan.py
"""
from simplex_ramsey.exactgeom import format_rational as fr
from simplex_ramsey.family import (
    FamilyParams,
    Verdict,
    counterexample_report,
    default_grid,
    scan,
)

print(" d   grid hits   first hit (s, t, u)")
for d in range(3, 9):
    hits = scan(d)
    first = hits[0]
    print(f"{d:>2}   {len(hits):>4}/{len(default_grid())}   "
          f"({fr(first.s)}, {fr(first.t)}, {fr(first.u)})")

print("\ns=1, t=u=3 across dimensions:")
for d in range(3, 11):
    r = counterexample_report(FamilyParams(d, 1, 3, 3))
    assert r.verdict is Verdict.CONJECTURE_COUNTEREXAMPLE
    print(f"   d={d:>2}  special coordinate {fr(r.solver_lambdas[2]):>8}  "
          f"rho^2 {fr(r.rho_sq):>8}  D^2 {fr(r.params.diam_sq)}")

print("\nequal parameters change sign at d = 5:")
for d in (4, 5, 6):
    lam = counterexample_report(FamilyParams(d, 1, 1, 1)).solver_lambdas[2]
    print(f"   d={d}  {fr(lam)}")
