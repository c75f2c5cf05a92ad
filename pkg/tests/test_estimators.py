import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from tritrig import TorusParams, make_table, torus_net
from tritrig.estimators import BlendingTransformer, TrigPatchRegressor
from tritrig.geometries import torus_point

from conftest import random_points


class TestBlendingTransformer:
    def test_params(self):
        est = BlendingTransformer(order=3, alpha=1.0)
        assert est.get_params() == {"order": 3, "alpha": 1.0, "tol": 1e-9}
        assert clone(est).set_params(order=1).order == 1

    def test_partition_of_unity(self):
        X = random_points(1.0, 40)
        features = BlendingTransformer(order=2, alpha=1.0).fit_transform(X)
        assert features.shape == (40, 19)
        np.testing.assert_allclose(features.sum(axis=1), 1.0, atol=1e-14)
        assert len(BlendingTransformer(order=1, alpha=1.0).fit(X).get_feature_names_out()) == 7

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            BlendingTransformer().transform([[0.1, 0.1]])


class TestTrigPatchRegressor:
    def test_recovers_torus_net(self):
        alpha = math.pi / 2
        params = TorusParams(4.0, 1.5)
        X = random_points(alpha, 200)
        y = torus_point(params, X[:, 0], X[:, 1])
        reg = TrigPatchRegressor(order=2, alpha=alpha).fit(X, y)
        assert reg.residual_ <= 1e-12
        np.testing.assert_allclose(reg.to_patch().net.as_array(), torus_net(params, alpha).as_array(), atol=1e-9)
        assert reg.score(X, y) == pytest.approx(1.0)

    def test_single_output(self):
        X = random_points(1.0, 60)
        reg = TrigPatchRegressor(order=1, alpha=1.0).fit(X, np.cos(X[:, 0]))
        np.testing.assert_allclose(reg.predict(X), np.cos(X[:, 0]), atol=1e-12)
        with pytest.raises(ValueError):
            reg.to_patch()

    def test_not_fitted(self):
        with pytest.raises(NotFittedError):
            TrigPatchRegressor().predict([[0.1, 0.1]])

    def test_table_matches(self):
        reg = TrigPatchRegressor(order=2, alpha=1.0).fit(random_points(1.0, 40), np.zeros((40, 3)))
        assert reg.table_.reduced == make_table(2, 1.0).reduced
