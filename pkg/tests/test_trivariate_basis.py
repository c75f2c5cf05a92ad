import math

import numpy as np
import pytest

from tritrig import (
    BasisIndex,
    DomainPoint,
    TrivariateSystem,
    delta,
    eval_family,
    eval_R,
    eval_system,
    index_list,
    make_univariate,
    restrict_boundary,
)
from tritrig.exceptions import BasisIndexError, DomainError
from tritrig.trivariate_basis import EDGES, edge_indices, edge_point
from tritrig.univariate import eval_all

from conftest import ALPHAS, random_points


class TestIndexing:
    @pytest.mark.parametrize("n,expected", [(1, 7), (2, 19), (3, 37), (4, 61), (5, 91), (6, 127)])
    def test_counts(self, n, expected):
        assert delta(n) == expected == len(index_list(n))

    def test_canonical_order(self):
        idx = index_list(1)
        assert idx == [
            BasisIndex("Center", 1, 1),
            BasisIndex("R", 0, 0), BasisIndex("R", 1, 0),
            BasisIndex("G", 0, 0), BasisIndex("G", 1, 0),
            BasisIndex("B", 0, 0), BasisIndex("B", 1, 0),
        ]

    def test_no_duplicates(self):
        assert len(set(index_list(5))) == delta(5)

    @pytest.mark.parametrize("idx", [("R", 4, 0), ("G", 0, 2), ("R", 1, 2), ("X", 0, 0), ("Center", 1, 1)])
    def test_invalid_indices(self, idx):
        with pytest.raises(BasisIndexError):
            eval_family(2, 1.0, idx, (0.3, 0.3))

    def test_system_descriptor(self):
        system = TrivariateSystem(3, 1.0)
        assert system.dimension == 37
        assert system.evaluate(random_points(1.0, 5)).shape == (5, 37)


class TestDomainPoint:
    def test_renormalizes_w(self):
        p = DomainPoint.from_uv(0.1, 0.2, 1.0)
        assert p.u + p.v + p.w == pytest.approx(1.0, abs=1e-16)

    def test_from_uvw_checks_sum(self):
        with pytest.raises(DomainError):
            DomainPoint.from_uvw(0.5, 0.5, 0.5, 1.0)

    def test_outside_domain(self):
        with pytest.raises(DomainError):
            DomainPoint.from_uv(0.8, 0.5, 1.0)


class TestEvaluation:
    def test_center_formula(self):
        p = DomainPoint.from_uv(0.4, 0.5, 1.4)
        expected = (math.sin(p.u / 2) * math.sin(p.v / 2) * math.sin(p.w / 2)) ** 3
        assert eval_R(3, 1.4, 3, 3, p) == pytest.approx(expected, rel=1e-14)
        assert eval_family(3, 1.4, ("Center", 3, 3), p) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("i,j", [(1, 1), (2, 1), (2, 2), (3, 1)])
    def test_vanishes_on_v_zero(self, i, j):
        assert eval_R(2, 1.0, i, j, (0.4, 0.0)) == 0.0

    def test_frozen_value(self):
        # 50-digit transcription of the formula at the centroid, alpha = 1
        value = eval_R(2, 1.0, 1, 0, (1 / 3, 1 / 3))
        assert value == pytest.approx(0.00074693884611179115639, rel=1e-13)

    def test_order_one_table(self):
        expected = [
            0.0038455949762107147301, 0.061208719054813641942, 0.030604359527406820971,
            0.015543789144677607928, 0.015060570382729213043,
            0.015543789144677607928, 0.030604359527406820971,
        ]
        values = eval_system(1, 1.0, [(0.5, 0.25)])[0]
        np.testing.assert_allclose(values, expected, rtol=1e-13)

    def test_b_family_formula(self):
        n, i, j = 3, 2, 1
        u, v, w = random_points(1.2, 1, seed=3)[0]
        expected = (
            math.sin(v / 2) ** (2 * n - i) * math.sin(u / 2) ** i
            * math.cos(w / 2) ** (i - j) * math.sin(w / 2) ** j
        )
        assert eval_family(n, 1.2, ("B", i, j), (u, v)) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_reflection_branch(self, n):
        alpha = 1.1
        pts = random_points(alpha, 20, seed=n)
        for j in range(n):
            for i in range(n + 1, 2 * n - j):
                direct = eval_R(n, alpha, i, j, pts)
                mirrored = eval_R(n, alpha, 2 * n - i, j, pts[:, [2, 1, 0]])
                np.testing.assert_allclose(direct, mirrored, rtol=1e-12, atol=1e-18)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_family_permutations(self, n):
        alpha = 2.0
        pts = random_points(alpha, 10, seed=7)
        for idx in index_list(n)[1:]:
            if idx.family != "R":
                continue
            r = eval_family(n, alpha, idx, pts)
            g = eval_family(n, alpha, ("G", idx.i, idx.j), pts[:, [1, 2, 0]])
            b = eval_family(n, alpha, ("B", idx.i, idx.j), pts[:, [2, 0, 1]])
            np.testing.assert_allclose(g, r, rtol=1e-12, atol=1e-18)
            np.testing.assert_allclose(b, r, rtol=1e-12, atol=1e-18)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_nonnegative_on_grid(self, n, alpha):
        k = 49
        uv = [(alpha * p / k, alpha * q / k) for p in range(k + 1) for q in range(k + 1 - p)]
        assert np.all(eval_system(n, alpha, uv) >= 0)

    def test_scalar_and_array_returns(self):
        assert isinstance(eval_family(2, 1.0, ("R", 1, 0), (0.2, 0.3)), float)
        assert eval_family(2, 1.0, ("R", 1, 0), [(0.2, 0.3), (0.1, 0.1)]).shape == (2,)


class TestBoundary:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("edge", EDGES)
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_reduces_to_univariate(self, n, edge, alpha):
        basis = make_univariate(n, alpha)
        t = np.linspace(0, alpha, 101)
        expected = (eval_all(basis, t) / np.asarray(basis.coeffs))[:, ::-1]
        np.testing.assert_allclose(restrict_boundary(n, alpha, edge, t), expected, atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("edge", EDGES)
    def test_other_functions_vanish(self, n, edge):
        alpha = 1.0
        pts = edge_point(edge, np.linspace(0, alpha, 17), alpha)
        survivors = set(edge_indices(n, edge))
        M = eval_system(n, alpha, pts)
        for col, idx in enumerate(index_list(n)):
            if idx not in survivors:
                assert np.max(np.abs(M[:, col])) < 1e-15

    @pytest.mark.parametrize("edge", EDGES)
    def test_corner_single_survivor(self, edge):
        values = restrict_boundary(2, 1.0, edge, 0.0)
        assert np.count_nonzero(values > 1e-15) == 1
        basis = make_univariate(2, 1.0)
        assert values[-1] * basis.coeffs[0] == pytest.approx(1.0)

    def test_edge_w_zero_third_of_alpha(self):
        alpha = 0.9
        basis = make_univariate(2, alpha)
        t = alpha / 3
        expected = (eval_all(basis, t) / np.asarray(basis.coeffs))[::-1]
        np.testing.assert_allclose(restrict_boundary(2, alpha, "w=0", t), expected, atol=1e-13)

    def test_v_zero_survivors(self):
        assert edge_indices(2, "v=0") == [BasisIndex("R", i, 0) for i in range(4)] + [BasisIndex("G", 0, 0)]

    def test_bad_edge_and_parameter(self):
        with pytest.raises(DomainError):
            restrict_boundary(2, 1.0, "x=0", 0.1)
        with pytest.raises(DomainError):
            restrict_boundary(2, 1.0, "v=0", 1.5)
