from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from simplex_ramsey.deficits import (
    build_embedding,
    deficit_profile,
    pairwise_criterion,
    verify_decomposition,
)
from simplex_ramsey.exactgeom import is_nondegenerate_simplex
from simplex_ramsey.family import (
    FamilyParams,
    Verdict,
    canonical_decomposition,
    counterexample_report,
    default_grid,
    delta,
    family_barycentric_closed_form,
    family_sqdist,
    outside_condition,
    scan,
)

F = Fraction


class TestParams:
    @pytest.mark.parametrize("args", [(2, 1, 1, 1), (3, 0, 1, 1), (3, 1, -1, 1), (3, 1, 1, "0")])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            FamilyParams(*args)


class TestSqdist:
    def test_tetra(self, tetra):
        assert family_sqdist(FamilyParams(3, 1, 3, 3)) == tetra

    def test_t_equals_u(self):
        M = family_sqdist(FamilyParams(3, 2, 5, 5))
        assert M[0, 1] == M[0, 3] == 12 and M[0, 2] == 7 and M[1, 2] == 7

    def test_nondegenerate_on_grid(self):
        for d in (3, 4, 6):
            for s, t, u in default_grid(range(1, 4)):
                assert is_nondegenerate_simplex(family_sqdist(FamilyParams(d, s, t, u)))
        assert is_nondegenerate_simplex(family_sqdist(FamilyParams(3, F(1, 7), F(9, 2), F(1, 3))))


class TestClosedForm:
    def test_tetra(self):
        p = FamilyParams(3, 1, 3, 3)
        assert delta(p) == 94
        assert family_barycentric_closed_form(p) == [F(20, 47), F(14, 47), F(-1, 47), F(14, 47)]

    @pytest.mark.parametrize("d", range(3, 11))
    def test_special_coordinate(self, d):
        lam = family_barycentric_closed_form(FamilyParams(d, 1, 3, 3))
        assert lam[2] == F(25 - 9 * d, 31 * d + 1) < 0

    @pytest.mark.parametrize("d", range(3, 9))
    def test_equal_parameters(self, d):
        s = F(2)
        p = FamilyParams(d, s, s, s)
        lam3 = family_barycentric_closed_form(p)[2]
        assert lam3 == (3 * s * s - (d - 2) * s * s) / delta(p)
        assert (lam3 > 0, lam3 == 0, lam3 < 0) == (d < 5, d == 5, d > 5)


class TestOutside:
    def test_examples(self):
        assert outside_condition(FamilyParams(3, 1, 3, 3))
        assert not outside_condition(FamilyParams(3, 1, 1, 1))

    def test_boundary(self):
        # (d-2) t u = s (s+t+u): d=5, s=t=u
        p = FamilyParams(5, 1, 1, 1)
        assert not outside_condition(p)
        assert family_barycentric_closed_form(p)[2] == 0
        assert counterexample_report(p).verdict is Verdict.CRITERION_ONLY


class TestCanonicalDecomposition:
    def test_tetra(self, tetra):
        dec = canonical_decomposition(FamilyParams(3, 1, 3, 3))
        assert dec.masses == {(0, 2): 3, (1, 2, 3): 3} and dec.reserve == 1
        assert verify_decomposition(deficit_profile(tetra, (0, 1)), dec)
        assert build_embedding(dec).derived_sqdist == tetra

    @settings(max_examples=50, deadline=None)
    @given(st.integers(3, 8), *(st.fractions(min_value=F(1, 6), max_value=10, max_denominator=6)
                                .filter(lambda x: x > 0) for _ in range(3)))
    def test_always_verifies(self, d, s, t, u):
        p = FamilyParams(d, s, t, u)
        M = family_sqdist(p)
        dec = canonical_decomposition(p)
        assert verify_decomposition(deficit_profile(M, (0, 1)), dec)
        emb = build_embedding(dec)
        assert emb.derived_sqdist == M and emb.product_diam_sq == p.diam_sq


class TestReport:
    def test_tetra(self):
        r = counterexample_report(FamilyParams(3, 1, 3, 3))
        assert r.verdict is Verdict.CONJECTURE_COUNTEREXAMPLE
        assert r.two_rho_sq == F(192, 47) and not r.cf_obstructed

    @pytest.mark.parametrize("d", range(4, 11))
    def test_higher_d(self, d):
        r = counterexample_report(FamilyParams(d, 1, 3, 3))
        assert r.verdict is Verdict.CONJECTURE_COUNTEREXAMPLE
        assert r.solver_lambdas[2] == F(25 - 9 * d, 31 * d + 1)

    def test_criterion_only(self):
        assert counterexample_report(FamilyParams(3, 1, 1, 1)).verdict is Verdict.CRITERION_ONLY
        assert counterexample_report(FamilyParams(3, 5, 1, 1)).verdict is Verdict.CRITERION_ONLY

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 9), *(st.integers(1, 7) for _ in range(3)))
    def test_properties(self, d, s, t, u):
        p = FamilyParams(d, s, t, u)
        r = counterexample_report(p)
        lam = r.solver_lambdas
        assert lam[0] > 0 and lam[1] > 0
        assert (lam[2] < 0) == outside_condition(p)
        assert len({lam[k] for k in [1] + list(range(3, d + 1))}) == 1
        assert 2 * r.rho_sq <= p.diam_sq

    def test_pairwise_fails(self):
        for d in range(3, 11):
            M = family_sqdist(FamilyParams(d, 1, 3, 3))
            ok, total = pairwise_criterion(deficit_profile(M, (0, 1)))
            assert total == 3 + 3 * comb(d, 2) and not ok


class TestScan:
    def test_contains_known_instance(self):
        assert FamilyParams(3, 1, 3, 3) in scan(3, [(1, 3, 3), (1, 1, 1)])

    def test_inside_grid_is_empty(self):
        assert scan(3, [(1, 1, 1), (5, 1, 1), (2, 1, 3), (3, 3, 3)]) == []

    def test_monotone_in_u(self):
        # (d-2) t > s: the outside margin (d-2) t u - s(s+t+u) grows with u
        s, t = 1, 2
        grid = [(s, t, u) for u in range(1, 12)]
        hits = [p.u for p in scan(3, grid)]
        first = int(min(hits))
        assert hits == list(range(first, 12))
        assert all((t - s) * u <= s * (s + t) for u in range(1, first))

    def test_default_grid(self):
        hits = scan(3)
        assert all(outside_condition(p) for p in hits)
        expected = sum(1 for s, t, u in default_grid() if t * u > s * (s + t + u))
        assert len(hits) == expected
