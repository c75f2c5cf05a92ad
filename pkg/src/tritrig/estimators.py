"""scikit-learn compatible wrappers.

Samples are rows (u, v) of domain parameters; w is implied by u + v + w = alpha.
"""
from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from ._linalg import lstsq_qr
from ._validation import as_barycentric, check_alpha, check_order
from .normalization import blending_matrix, make_table
from .patches import ControlNet, TrigPatch
from .trivariate_basis import index_list

__all__ = ["BlendingTransformer", "TrigPatchRegressor"]


class BlendingTransformer(TransformerMixin, BaseEstimator):
    """Map (u, v) samples to the delta(n) normalized blending values."""

    def __init__(self, order: int = 2, alpha: float = math.pi / 2, tol: float = 1e-9):
        self.order = order
        self.alpha = alpha
        self.tol = tol

    def fit(self, X, y=None):
        X = check_array(X)
        check_order(self.order)
        check_alpha(self.alpha)
        self.table_ = make_table(self.order, self.alpha, self.tol)
        self.n_features_in_ = X.shape[1]
        self.feature_names_out_ = np.array([str(i) for i in index_list(self.order)], dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "table_")
        X = check_array(X)
        return blending_matrix(self.table_, as_barycentric(X, self.table_.alpha))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "table_")
        return self.feature_names_out_


class TrigPatchRegressor(RegressorMixin, BaseEstimator):
    """Least-squares control net from sampled surface points.

    ``fit`` solves for the control points by QR; ``predict`` evaluates the
    fitted patch.  Targets may have one or several (typically 3) columns.
    """

    def __init__(self, order: int = 2, alpha: float = math.pi / 2, tol: float = 1e-9):
        self.order = order
        self.alpha = alpha
        self.tol = tol

    def fit(self, X, y):
        X, y = check_X_y(X, y, multi_output=True, y_numeric=True)
        alpha = check_alpha(self.alpha)
        self.table_ = make_table(check_order(self.order), alpha, self.tol)
        B = blending_matrix(self.table_, as_barycentric(X, alpha))
        self._single_output = y.ndim == 1
        self.coef_ = lstsq_qr(B, y)
        self.residual_ = float(np.max(np.abs(B @ self.coef_ - y)))
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X)
        return blending_matrix(self.table_, as_barycentric(X, self.table_.alpha)) @ self.coef_

    def to_patch(self) -> TrigPatch:
        """The fitted control net as a patch (needs 3-column targets)."""
        check_is_fitted(self, "coef_")
        coef = np.asarray(self.coef_)
        if coef.ndim != 2 or coef.shape[1] != 3:
            raise ValueError("to_patch needs a regressor fitted on 3D targets")
        return TrigPatch(ControlNet.from_array(self.table_.order, coef), self.table_)
