"""Triangular trigonometric patches and their rational counterparts."""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ._validation import as_barycentric, check_order
from .exceptions import ConfigurationError, DomainError, EvaluationSingularityError
from .normalization import NormalizationTable, blending_matrix
from .trivariate_basis import (
    BasisIndex,
    _check_basis_index,
    edge_indices,
    edge_point,
    index_list,
)
from .univariate import eval_all, make_univariate

__all__ = [
    "ControlNet",
    "WeightNet",
    "TrigPatch",
    "RationalTrigPatch",
    "eval_patch",
    "eval_rational",
    "boundary_curve",
    "affine_check",
    "transform_net",
    "projective_image",
    "finite_difference_normal",
]


class ControlNet:
    """Mapping BasisIndex -> 3D point covering every index of order ``order``."""

    def __init__(self, order: int, points: Mapping):
        self.order = check_order(order)
        expected = index_list(self.order)
        normalized = {}
        for key, xyz in points.items():
            idx = _check_basis_index(self.order, BasisIndex(*key))
            if idx in normalized:
                raise ConfigurationError(f"duplicate control point for {idx}")
            p = np.asarray(xyz, dtype=float)
            if p.shape != (3,) or not np.all(np.isfinite(p)):
                raise ConfigurationError(f"control point {idx} must be 3 finite floats")
            normalized[idx] = p
        missing = [str(i) for i in expected if i not in normalized]
        if missing:
            raise ConfigurationError(f"control net misses {', '.join(missing)}")
        self._points = MappingProxyType({idx: normalized[idx] for idx in expected})

    @classmethod
    def from_array(cls, order: int, array) -> "ControlNet":
        """Build from a (delta(n), 3) array in canonical index order."""
        arr = np.asarray(array, dtype=float)
        idxs = index_list(order)
        if arr.shape != (len(idxs), 3):
            raise ConfigurationError(f"expected shape ({len(idxs)}, 3), got {arr.shape}")
        return cls(order, dict(zip(idxs, arr)))

    @property
    def points(self) -> Mapping[BasisIndex, np.ndarray]:
        return self._points

    def __getitem__(self, idx) -> np.ndarray:
        return self._points[_check_basis_index(self.order, BasisIndex(*idx))]

    def __len__(self) -> int:
        return len(self._points)

    def as_array(self) -> np.ndarray:
        return np.array(list(self._points.values()))

    def map(self, fn) -> "ControlNet":
        """New net with ``fn`` applied to the (delta, 3) point array."""
        return ControlNet.from_array(self.order, fn(self.as_array()))

    def __repr__(self) -> str:
        return f"ControlNet(order={self.order}, points={len(self)})"


class WeightNet:
    """Non-negative weights keyed like a control net."""

    def __init__(self, order: int, weights: Mapping):
        self.order = check_order(order)
        expected = index_list(self.order)
        normalized = {
            _check_basis_index(self.order, BasisIndex(*k)): float(w) for k, w in weights.items()
        }
        missing = [str(i) for i in expected if i not in normalized]
        if missing:
            raise ConfigurationError(f"weight net misses {', '.join(missing)}")
        values = np.array([normalized[i] for i in expected])
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise DomainError("weights must be finite and non-negative")
        if values.sum() <= 0:
            raise DomainError("at least one weight must be positive")
        self._weights = MappingProxyType({i: normalized[i] for i in expected})

    @classmethod
    def from_array(cls, order: int, array) -> "WeightNet":
        arr = np.asarray(array, dtype=float).ravel()
        idxs = index_list(order)
        if arr.shape != (len(idxs),):
            raise ConfigurationError(f"expected {len(idxs)} weights, got {arr.shape}")
        return cls(order, dict(zip(idxs, arr)))

    @classmethod
    def uniform(cls, order: int, value: float = 1.0) -> "WeightNet":
        return cls.from_array(order, np.full(len(index_list(order)), value))

    @property
    def weights(self) -> Mapping[BasisIndex, float]:
        return self._weights

    def __getitem__(self, idx) -> float:
        return self._weights[_check_basis_index(self.order, BasisIndex(*idx))]

    def as_array(self) -> np.ndarray:
        return np.array(list(self._weights.values()))


def _check_orders(net: ControlNet, table: NormalizationTable, wnet: WeightNet | None = None):
    if net.order != table.order:
        raise ConfigurationError(f"net order {net.order} != table order {table.order}")
    if wnet is not None and wnet.order != net.order:
        raise ConfigurationError(f"weight order {wnet.order} != net order {net.order}")


@dataclass(frozen=True)
class TrigPatch:
    net: ControlNet
    table: NormalizationTable

    def __post_init__(self):
        _check_orders(self.net, self.table)

    @property
    def order(self) -> int:
        return self.net.order

    @property
    def alpha(self) -> float:
        return self.table.alpha

    def evaluate(self, points) -> np.ndarray:
        """Surface points, shape (N, 3)."""
        return blending_matrix(self.table, points) @ self.net.as_array()


@dataclass(frozen=True)
class RationalTrigPatch:
    net: ControlNet
    table: NormalizationTable
    wnet: WeightNet

    def __post_init__(self):
        _check_orders(self.net, self.table, self.wnet)

    @property
    def order(self) -> int:
        return self.net.order

    @property
    def alpha(self) -> float:
        return self.table.alpha

    def denominator(self, points) -> np.ndarray:
        return blending_matrix(self.table, points) @ self.wnet.as_array()

    def evaluate(self, points) -> np.ndarray:
        B = blending_matrix(self.table, points)
        w = self.wnet.as_array()
        den = B @ w
        threshold = 1e-12 * float(np.max(w))
        if np.any(den <= threshold):
            raise EvaluationSingularityError(
                f"rational denominator {float(np.min(den)):.3e} is not positive"
            )
        return (B * w) @ self.net.as_array() / den[:, None]


def _evaluate_single_or_many(patch, p):
    pts = as_barycentric(p, patch.alpha)
    out = patch.evaluate(pts)
    single = np.ndim(p) <= 1 and not (isinstance(p, (list, tuple)) and p and not np.isscalar(p[0]))
    return out[0] if single else out


def eval_patch(patch: TrigPatch, p) -> np.ndarray:
    """Point (3,) for a single domain point, (N, 3) for an array of points."""
    if not isinstance(patch, TrigPatch):
        raise ConfigurationError("eval_patch expects a TrigPatch")
    return _evaluate_single_or_many(patch, p)


def eval_rational(patch: RationalTrigPatch, p) -> np.ndarray:
    if not isinstance(patch, RationalTrigPatch):
        raise ConfigurationError("eval_rational expects a RationalTrigPatch")
    return _evaluate_single_or_many(patch, p)


def boundary_curve(patch: TrigPatch, edge: str, t) -> np.ndarray:
    """Boundary curve as the univariate combination of the edge's level-0 points.

    On edge v=0 the parameter is u, on u=0 it is w and on w=0 it is v.
    """
    n = patch.order
    pts = np.array([patch.net[idx] for idx in edge_indices(n, edge)])
    basis = make_univariate(n, patch.alpha)
    values = eval_all(basis, t)[..., ::-1]
    return values @ pts


def transform_net(net: ControlNet, linear, translation=(0.0, 0.0, 0.0)) -> ControlNet:
    L = np.asarray(linear, dtype=float)
    b = np.asarray(translation, dtype=float)
    return net.map(lambda P: P @ L.T + b)


def affine_check(patch: TrigPatch, linear, translation, samples) -> float:
    """max |eval(map(net)) - map(eval(net))| over the sample points."""
    L = np.asarray(linear, dtype=float)
    b = np.asarray(translation, dtype=float)
    mapped = TrigPatch(transform_net(patch.net, L, b), patch.table)
    pts = as_barycentric(samples, patch.alpha)
    direct = patch.evaluate(pts) @ L.T + b
    return float(np.max(np.abs(mapped.evaluate(pts) - direct)))


def projective_image(patch, H) -> RationalTrigPatch:
    """Rational patch whose surface is the image of ``patch`` under the 4x4 map H.

    Control points are lifted to homogeneous coordinates (w p, w), mapped by
    H and projected back; the last homogeneous coordinate becomes the new
    weight and must stay non-negative.
    """
    H = np.asarray(H, dtype=float)
    if H.shape != (4, 4):
        raise ConfigurationError("projective map must be a 4x4 matrix")
    P = patch.net.as_array()
    w = patch.wnet.as_array() if isinstance(patch, RationalTrigPatch) else np.ones(len(P))
    homog = np.hstack([P * w[:, None], w[:, None]]) @ H.T
    new_w = homog[:, 3]
    if np.any(new_w <= 0):
        raise DomainError("projective map sends a control point to or beyond infinity")
    net = ControlNet.from_array(patch.order, homog[:, :3] / new_w[:, None])
    return RationalTrigPatch(net, patch.table, WeightNet.from_array(patch.order, new_w))


def finite_difference_normal(patch, points, step: float | None = None) -> np.ndarray:
    """Unit normals from central differences along u and v (w = alpha - u - v).

    Points are first pulled towards the centroid by a relative 6h/alpha so the
    stencil never leaves the domain.
    """
    alpha = patch.alpha
    h = alpha * 1e-6 if step is None else step
    pts = as_barycentric(points, alpha)
    shrink = 1.0 - 6.0 * h / alpha
    uc = alpha / 3 + shrink * (pts[:, 0] - alpha / 3)
    vc = alpha / 3 + shrink * (pts[:, 1] - alpha / 3)

    def at(du, dv):
        return patch.evaluate(np.stack([uc + du, vc + dv], axis=1))

    su = (at(h, 0) - at(-h, 0)) / (2 * h)
    sv = (at(0, h) - at(0, -h)) / (2 * h)
    nrm = np.cross(su, sv)
    length = np.linalg.norm(nrm, axis=1, keepdims=True)
    return nrm / np.where(length > 0, length, 1.0)
