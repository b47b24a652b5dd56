"""End-to-end acceptance gate; each test records one PASS/FAIL line."""
import io
import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_certified_simplex, tetra_sqdist
from simplex_ramsey import cli
from simplex_ramsey.deficits import (
    build_embedding,
    deficit_profile,
    find_decomposition,
    pairwise_criterion,
    product_sqdist,
    verify_decomposition,
)
from simplex_ramsey.exactgeom import (
    align_to_frame,
    circumcenter_barycentric,
    circumcenter_numeric,
    diameter_sq,
    realize,
    sqdist_from_points,
)
from simplex_ramsey.family import (
    FamilyParams,
    canonical_decomposition,
    default_grid,
    family_barycentric_closed_form,
    family_sqdist,
)
from simplex_ramsey.ramseytoy import (
    ArrowStatus,
    arrow_check,
    copy_sets,
    pigeonhole_witness,
    regular_simplex_config,
)

F = Fraction
DIMS = range(3, 11)


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"[FAIL] {number:>2}. {title}")
        raise
    ACCEPTANCE_LINES.append(f"[PASS] {number:>2}. {title}")


@pytest.fixture(scope="module")
def grid_certificates():
    """(params, sqdist, profile, LP certificate) for every grid point."""
    out = []
    for d in DIMS:
        for s, t, u in default_grid():
            p = FamilyParams(d, s, t, u)
            M = family_sqdist(p)
            prof = deficit_profile(M, (0, 1))
            out.append((p, M, prof, find_decomposition(prof)))
    return out


def test_01_circumcenter_exactness(tmp_path):
    with criterion(1, "circumcenter of the d=3 family tetrahedron is exact and outside the hull"):
        path = tmp_path / "tetra.json"
        path.write_text(json.dumps({"sqdist": cli.sqdist_to_json(tetra_sqdist())}))
        out = io.StringIO()
        assert cli.main(["check", str(path)], out=out) == 0
        report = json.loads(out.getvalue())
        assert report["circumcenter"]["lambdas"] == ["20/47", "14/47", "-1/47", "14/47"]
        assert report["in_hull"] is False


def test_02_closed_form_audit():
    with criterion(2, "solver matches closed form on d=3..10, s,t,u in 1..5; sign rule exact"):
        for d in DIMS:
            for s, t, u in default_grid():
                p = FamilyParams(d, s, t, u)
                lam = list(circumcenter_barycentric(family_sqdist(p)).lambdas)
                assert lam == family_barycentric_closed_form(p)
                assert (lam[2] < 0) == ((d - 2) * t * u > s * (s + t + u))


def test_03_counterexample_formula():
    with criterion(3, "special coordinate equals (25-9d)/(31d+1) < 0 for s=1, t=u=3"):
        for d in DIMS:
            lam = circumcenter_barycentric(family_sqdist(FamilyParams(d, 1, 3, 3))).lambdas
            assert lam[2] == F(25 - 9 * d, 31 * d + 1)
            assert lam[2] < 0


def test_04_criterion_certificate(grid_certificates):
    with criterion(4, "canonical and LP decompositions verify on every grid instance"):
        for p, M, prof, found in grid_certificates:
            canon = canonical_decomposition(p)
            assert canon.masses == {(0, 2): p.t, tuple(range(1, p.d + 1)): p.u}
            assert canon.reserve == p.s
            assert verify_decomposition(prof, canon)
            assert found is not None and verify_decomposition(prof, found)


def test_05_pairwise_failure():
    with criterion(5, "pairwise sum is 3+3C(d,2) > 7 while the LP succeeds"):
        for d in DIMS:
            prof = deficit_profile(family_sqdist(FamilyParams(d, 1, 3, 3)), (0, 1))
            ok, total = pairwise_criterion(prof)
            assert total == 3 + 3 * comb(d, 2) and total > 7 and not ok
            dec = find_decomposition(prof)
            assert dec is not None and verify_decomposition(prof, dec)


def test_06_embedding_fidelity(grid_certificates):
    with criterion(6, "every verified certificate embeds with exact distances and diameter"):
        for p, M, prof, found in grid_certificates:
            for dec in (canonical_decomposition(p), found):
                emb = build_embedding(dec)
                assert emb.derived_sqdist == M
                assert emb.q_sqdist(0, 1) == p.diam_sq
                assert all(emb.q_sqdist(i, j) == M[i, j] for i, j in M.pairs())
                assert emb.product_diam_sq == p.diam_sq


def test_07_cf_consistency(grid_certificates):
    with criterion(7, "rho^2 <= D^2/2 on the grid and 200 random certified simplices"):
        for p, M, _, _ in grid_certificates:
            assert 2 * circumcenter_barycentric(M).rho_sq <= p.diam_sq
        rng = random.Random(2024)
        for _ in range(200):
            M = random_certified_simplex(rng, max_n=6)
            assert all(1 <= M[ij] <= 100 for ij in M.pairs())
            D2, pairs = diameter_sq(M)
            prof = deficit_profile(M, pairs[0])
            dec = find_decomposition(prof)
            assert dec is not None and verify_decomposition(prof, dec)
            assert 2 * circumcenter_barycentric(M).rho_sq <= D2


def test_08_numeric_realization():
    with criterion(8, "realized tetrahedron and circumcenter match the explicit frame to 1e-9"):
        Q = align_to_frame(realize(tetra_sqdist()), origin=1, axis=2, plane=3, up=0)
        r3 = np.sqrt(3)
        expected = np.array([[7 / 4, r3 / 12, np.sqrt(47 / 12)],
                             [0, 0, 0], [2, 0, 0], [1, r3, 0]])
        assert np.all(np.abs(Q - expected) <= 1e-9)
        center = circumcenter_numeric(Q)
        assert np.all(np.abs(center - [1, r3 / 3, 10 * np.sqrt(141) / 141]) <= 1e-9)


@pytest.mark.parametrize("k,q", [(1, 2), (1, 3), (2, 2)])
def test_09_toy_ramsey_pigeonhole(k, q):
    with criterion(9, f"pigeonhole witness arrows the regular {k}-simplex in {q} colors"):
        start = time.perf_counter()
        v = arrow_check(pigeonhole_witness(k, q), regular_simplex_config(k).sqdist, q)
        assert v.status is ArrowStatus.HOLDS
        assert time.perf_counter() - start < 1


def test_09_toy_ramsey_triangle_fails():
    with criterion(9, "equilateral triangle does not arrow itself in 2 colors"):
        start = time.perf_counter()
        tri = regular_simplex_config(2)
        v = arrow_check(tri, tri.sqdist, 2)
        assert v.status is ArrowStatus.FAILS
        assert time.perf_counter() - start < 1
        col = v.witness_coloring
        assert len(col) == 3 and set(col) <= {0, 1}
        assert all(len({col[x] for x in S}) > 1 for S in copy_sets(tri, tri.sqdist))


def test_10_product_additivity():
    with criterion(10, "product diameter^2 is additive on 100 random pairs"):
        rng = random.Random(10)

        def cloud():
            n, dim = rng.randint(1, 5), rng.randint(1, 3)
            while True:
                pts = [[F(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(dim)]
                       for _ in range(n)]
                if len({tuple(p) for p in pts}) == n:
                    return pts

        for _ in range(100):
            A, B = cloud(), cloud()
            M1, M2 = sqdist_from_points(A), sqdist_from_points(B)
            P = product_sqdist(M1, M2)
            assert diameter_sq(P)[0] == diameter_sq(M1)[0] + diameter_sq(M2)[0]
            # concatenated coordinates give the same product distances
            assert P == sqdist_from_points([a + b for a in A for b in B])
