import math

import numpy as np
import pytest
from scipy.spatial import ConvexHull
from scipy.stats import special_ortho_group

from tritrig import (
    ControlNet,
    RationalTrigPatch,
    TrigPatch,
    WeightNet,
    affine_check,
    boundary_curve,
    delta,
    eval_patch,
    eval_rational,
    make_table,
)
from tritrig.exceptions import ConfigurationError, DomainError, EvaluationSingularityError
from tritrig.geometries import TorusParams, torus_implicit, torus_net
from tritrig.patches import finite_difference_normal, projective_image
from tritrig.trivariate_basis import EDGES, edge_point

from conftest import random_points


def random_patch(n, alpha, seed=0):
    net = ControlNet.from_array(n, np.random.default_rng(seed).normal(size=(delta(n), 3)))
    return TrigPatch(net, make_table(n, alpha))


class TestControlNet:
    def test_missing_points(self):
        with pytest.raises(ConfigurationError):
            ControlNet(1, {("R", 0, 0): (0, 0, 0)})

    def test_bad_shape(self):
        with pytest.raises(ConfigurationError):
            ControlNet.from_array(1, np.zeros((7, 2)))

    def test_lookup_and_array(self):
        net = random_patch(2, 1.0).net
        assert len(net) == 19
        np.testing.assert_array_equal(net[("R", 0, 0)], net.as_array()[1])

    def test_weights_validation(self):
        with pytest.raises(DomainError):
            WeightNet.from_array(1, [-1, 1, 1, 1, 1, 1, 1])
        with pytest.raises(DomainError):
            WeightNet.from_array(1, np.zeros(7))

    def test_order_mismatch(self):
        net = random_patch(2, 1.0).net
        with pytest.raises(ConfigurationError):
            TrigPatch(net, make_table(1, 1.0))


class TestEvaluation:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_corners(self, n):
        alpha = 1.1
        patch = random_patch(n, alpha, seed=n)
        for uv, key in [((alpha, 0), ("R", 0, 0)), ((0, alpha), ("B", 0, 0)), ((0, 0), ("G", 0, 0))]:
            np.testing.assert_allclose(eval_patch(patch, uv), patch.net[key], rtol=1e-15, atol=1e-15)

    def test_constant_net(self):
        q = np.array([1.5, -2.0, 0.25])
        patch = TrigPatch(ControlNet.from_array(3, np.tile(q, (37, 1))), make_table(3, 0.9))
        np.testing.assert_allclose(patch.evaluate(random_points(0.9, 50)), np.tile(q, (50, 1)), atol=1e-13)

    def test_torus_centroid(self):
        alpha = 1.3
        params = TorusParams(4.0, 1.2)
        patch = TrigPatch(torus_net(params, alpha), make_table(2, alpha))
        p = eval_patch(patch, (alpha / 3, alpha / 3))
        u = v = alpha / 3
        expected = [(4 + 1.2 * math.sin(u)) * math.cos(v), (4 + 1.2 * math.sin(u)) * math.sin(v), 1.2 * math.cos(u)]
        np.testing.assert_allclose(p, expected, atol=1e-9)

    def test_shapes(self):
        patch = random_patch(2, 1.0)
        assert eval_patch(patch, (0.2, 0.3)).shape == (3,)
        assert eval_patch(patch, [(0.2, 0.3), (0.1, 0.1)]).shape == (2, 3)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_convex_hull(self, n):
        patch = random_patch(n, 2.0, seed=10 + n)
        hull = ConvexHull(patch.net.as_array())
        pts = patch.evaluate(random_points(2.0, 300, seed=n))
        side = pts @ hull.equations[:, :3].T + hull.equations[:, 3]
        assert np.max(side) <= 1e-9


class TestRational:
    def test_unit_weights(self):
        patch = random_patch(2, 1.0)
        rational = RationalTrigPatch(patch.net, patch.table, WeightNet.uniform(2))
        pts = random_points(1.0, 100)
        np.testing.assert_allclose(eval_rational(rational, pts), eval_patch(patch, pts), atol=1e-14)

    def test_constant_scaled_weights(self):
        patch = random_patch(1, 1.0)
        rational = RationalTrigPatch(patch.net, patch.table, WeightNet.uniform(1, 7.5))
        pts = random_points(1.0, 20)
        np.testing.assert_allclose(rational.evaluate(pts), patch.evaluate(pts), atol=1e-14)

    def test_singular_denominator(self):
        patch = random_patch(1, 1.0)
        w = np.zeros(7)
        w[1] = 1.0  # only R[0,0], which vanishes away from its corner edge
        rational = RationalTrigPatch(patch.net, patch.table, WeightNet.from_array(1, w))
        with pytest.raises(EvaluationSingularityError):
            rational.evaluate([(0.0, 0.5)])

    def test_projective_closure(self):
        alpha = 1.2
        patch = random_patch(2, alpha, seed=4)
        H = np.array([[1.0, 0.2, 0.0, 0.5], [0.1, 0.9, 0.3, -0.2], [0.0, 0.1, 1.1, 0.3], [0.02, -0.03, 0.01, 1.0]])
        image = projective_image(patch, H)
        pts = random_points(alpha, 200, seed=8)
        homog = np.hstack([patch.evaluate(pts), np.ones((200, 1))]) @ H.T
        mapped = homog[:, :3] / homog[:, 3:]
        np.testing.assert_allclose(image.evaluate(pts), mapped, atol=1e-9)

    def test_projective_of_rational(self):
        patch = random_patch(1, 1.0, seed=2)
        rational = RationalTrigPatch(patch.net, patch.table, WeightNet.from_array(1, np.linspace(0.5, 2, 7)))
        H = np.eye(4)
        H[3, 0] = 0.05
        image = projective_image(rational, H)
        pts = random_points(1.0, 50)
        homog = np.hstack([rational.evaluate(pts), np.ones((50, 1))]) @ H.T
        np.testing.assert_allclose(image.evaluate(pts), homog[:, :3] / homog[:, 3:], atol=1e-9)


class TestBoundaryCurves:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("edge", EDGES)
    def test_matches_patch_on_edge(self, n, edge):
        alpha = 1.4
        patch = random_patch(n, alpha, seed=n)
        t = np.linspace(0, alpha, 33)
        np.testing.assert_allclose(boundary_curve(patch, edge, t), patch.evaluate(edge_point(edge, t, alpha)), atol=1e-12)

    def test_edge_u_zero_uses_g_points(self):
        patch = random_patch(2, 1.0)
        np.testing.assert_allclose(boundary_curve(patch, "u=0", 0.0), patch.net[("B", 0, 0)], atol=1e-15)
        np.testing.assert_allclose(boundary_curve(patch, "u=0", 1.0), patch.net[("G", 0, 0)], atol=1e-15)

    @pytest.mark.parametrize("edge,start,end", [("v=0", ("G", 0, 0), ("R", 0, 0)), ("w=0", ("R", 0, 0), ("B", 0, 0))])
    def test_endpoints(self, edge, start, end):
        patch = random_patch(3, 0.8)
        np.testing.assert_allclose(boundary_curve(patch, edge, 0.0), patch.net[start], atol=1e-14)
        np.testing.assert_allclose(boundary_curve(patch, edge, 0.8), patch.net[end], atol=1e-14)

    def test_torus_edge_midpoint(self):
        alpha = math.pi / 2
        params = TorusParams(5.0, 2.0)
        patch = TrigPatch(torus_net(params, alpha), make_table(2, alpha))
        assert abs(torus_implicit(params, boundary_curve(patch, "v=0", alpha / 2))) <= 1e-9

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            boundary_curve(random_patch(1, 1.0), "v=0", 2.0)


class TestAffine:
    def test_identity(self):
        patch = random_patch(2, 1.0)
        assert affine_check(patch, np.eye(3), np.zeros(3), random_points(1.0, 50)) == 0.0

    def test_translation_torus(self):
        alpha = math.pi / 2
        patch = TrigPatch(torus_net(TorusParams(4.0, 1.0), alpha), make_table(2, alpha))
        assert affine_check(patch, np.eye(3), [1, 2, 3], random_points(alpha, 100)) <= 1e-12

    def test_rotation_scale(self):
        patch = random_patch(3, 2.0, seed=3)
        L = 2.5 * special_ortho_group.rvs(3, random_state=1)
        assert affine_check(patch, L, [0.3, -1, 2], random_points(2.0, 100)) <= 1e-11


class TestNormals:
    def test_torus_normals_are_radial(self):
        alpha = 1.0
        params = TorusParams(4.0, 1.0)
        patch = TrigPatch(torus_net(params, alpha), make_table(2, alpha))
        pts = random_points(alpha, 20)
        normals = finite_difference_normal(patch, pts)
        surface = patch.evaluate(pts)
        ring = surface.copy()
        scale = 4.0 / np.hypot(surface[:, 0], surface[:, 1])
        ring[:, 0] *= scale
        ring[:, 1] *= scale
        ring[:, 2] = 0.0
        radial = (surface - ring) / np.linalg.norm(surface - ring, axis=1, keepdims=True)
        assert np.min(np.abs(np.sum(radial * normals, axis=1))) > 1 - 1e-5

    def test_corner_normal_finite(self):
        patch = random_patch(2, 1.0)
        n = finite_difference_normal(patch, [(1.0, 0.0), (0.0, 0.0), (0.0, 1.0)])
        assert np.all(np.isfinite(n))
