"""Exact control nets for a toroidal triangle and a ring Dupin cyclide."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_alpha
from .exceptions import DomainError, NotRepresentableError
from .normalization import NormalizationTable, closed_form_table
from .patches import ControlNet, RationalTrigPatch, WeightNet
from .span_analysis import fit_in_span
from .trivariate_basis import BasisIndex, index_list

__all__ = [
    "GOLDEN_RATIO",
    "TorusParams",
    "CyclideParams",
    "torus_point",
    "torus_implicit",
    "torus_net",
    "cyclide_point",
    "cyclide_denominator",
    "cyclide_implicit",
    "cyclide_patch",
]

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class TorusParams:
    rho: float
    mu: float

    def __post_init__(self):
        if not (self.rho > 0 and 0 < self.mu <= self.rho):
            raise DomainError(f"torus needs 0 < mu <= rho, got rho={self.rho}, mu={self.mu}")


def torus_point(params: TorusParams, u, v) -> np.ndarray:
    """((rho + mu sin u) cos v, (rho + mu sin u) sin v, mu cos u)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    radial = params.rho + params.mu * np.sin(u)
    return np.stack([radial * np.cos(v), radial * np.sin(v), params.mu * np.cos(u)], axis=-1)


def torus_implicit(params: TorusParams, xyz) -> np.ndarray:
    """(sqrt(x^2+y^2) - rho)^2 + z^2 - mu^2; zero on the torus."""
    xyz = np.asarray(xyz, dtype=float)
    ring = np.hypot(xyz[..., 0], xyz[..., 1]) - params.rho
    return ring**2 + xyz[..., 2] ** 2 - params.mu**2


def torus_net(params: TorusParams, alpha: float) -> ControlNet:
    """Order-2 control net reproducing the torus patch over the domain.

    The patch parameters (u, v) of a domain point are used directly as the
    torus angles.
    """
    a = check_alpha(alpha)
    rho, mu = params.rho, params.mu
    sa, ca = math.sin(a), math.cos(a)
    t2 = math.tan(a / 2)
    ch, sh = math.cos(a / 2), math.sin(a / 2)
    s3, c3 = math.sin(3 * a / 2), math.cos(3 * a / 2)
    P = {
        ("R", 0, 0): (rho + mu * sa, 0.0, mu * ca),
        ("R", 1, 0): (rho + mu / 2 * (t2 + sa), 0.0, mu / 2 * (1 + ca)),
        ("R", 2, 0): (rho + 3 * mu * sa / (4 + 2 * ca), 0.0, 3 * mu * (1 + ca) / (4 + 2 * ca)),
        ("R", 3, 0): (rho + mu / 2 * t2, 0.0, mu),
        ("R", 1, 1): (
            rho + 3 * mu * sa / (4 + 2 * ca),
            (3 * rho * sa + mu * (3 + ca) * (1 - ca)) / (8 + 4 * ca),
            3 * mu * (1 + ca) / (4 + 2 * ca),
        ),
        ("R", 2, 1): (
            rho + 3 * mu * (2 + ca) * sa / ((1 + ca) * (10 + 2 * ca)),
            (2 * rho * (sa + t2) + 3 * mu * (1 - ca)) / (10 + 2 * ca),
            3 * mu * (3 + ca) / (10 + 2 * ca),
        ),
        ("Center", 2, 2): (
            (6 * rho * (3 + 2 * ca) + mu * (9 + ca) * sa) / (20 + 10 * ca),
            (10 * rho * sa + mu * (7 + ca) * (1 - ca)) / (20 + 10 * ca),
            3 * mu * (3 + 2 * ca) / (10 + 5 * ca),
        ),
        ("G", 0, 0): (rho, 0.0, mu),
        ("G", 1, 0): (rho, rho / 2 * t2, mu),
        ("G", 2, 0): (3 * rho * (1 + ca) / (4 + 2 * ca), 3 * rho * sa / (4 + 2 * ca), mu),
        ("G", 3, 0): (rho / 2 * (1 + ca), rho / 2 * (t2 + sa), mu),
        ("G", 1, 1): (
            rho + 3 * mu * sa / (8 + 4 * ca),
            (3 * rho * sa + 2 * mu * (1 - ca)) / (8 + 4 * ca),
            mu,
        ),
        ("G", 2, 1): (
            (3 * rho * (3 + ca) + 3 * mu * sa) / (10 + 2 * ca),
            (3 * rho * (3 * sh + s3) + 3 * mu * (ch - c3)) / ((20 + 4 * ca) * ch),
            mu,
        ),
        ("B", 0, 0): (rho * ca, rho * sa, mu),
        ("B", 1, 0): (
            rho / 2 * (1 + ca) + mu / 2 * t2 * ca,
            rho / 2 * (t2 + sa) + mu / 2 * (1 - ca),
            mu,
        ),
        ("B", 2, 0): (
            3 * rho * (1 + ca) / (4 + 2 * ca) + mu / 2 * sa,
            (3 * rho * sa + mu * (3 + ca) * (1 - ca)) / (4 + 2 * ca),
            3 * mu * (1 + ca) / (4 + 2 * ca),
        ),
        ("B", 3, 0): (rho + mu / 2 * (t2 + sa), rho / 2 * t2 + mu / 2 * (1 - ca), mu / 2 * (1 + ca)),
        # x uses cos(alpha) in the bracket; a cos(alpha/2) there breaks exactness
        ("B", 1, 1): (
            rho * (7 - 2 * ch**2 + ca) * ch**2 / (4 + 2 * ca) + mu / 4 * sa,
            (6 * rho * sa + mu * (1 - ca) * (3 + ca)) / (8 + 4 * ca),
            mu,
        ),
        ("B", 2, 1): (
            (3 * rho * (3 + ca) * ch + mu * (3 * sh + 2 * s3)) / ((10 + 2 * ca) * ch),
            (3 * rho * (3 * sh + s3) + 4 * mu * (ch - c3)) / ((20 + 4 * ca) * ch),
            3 * mu * (3 + ca) / (10 + 2 * ca),
        ),
    }
    return ControlNet(2, {BasisIndex(*k): v for k, v in P.items()})


@dataclass(frozen=True)
class CyclideParams:
    """Ring Dupin cyclide with a^2 = b^2 + c^2 and c < mu <= a."""

    a: float
    b: float
    c: float
    mu: float
    phi: float = 0.0
    psi: float = 0.0

    def __post_init__(self):
        if abs(self.a**2 - self.b**2 - self.c**2) > 1e-12 * max(1.0, self.a**2):
            raise DomainError("cyclide parameters must satisfy a^2 = b^2 + c^2")
        if not self.c < self.mu <= self.a:
            raise DomainError("cyclide parameters must satisfy c < mu <= a")
        for name in ("phi", "psi"):
            value = getattr(self, name)
            if not 0.0 <= value <= 2 * math.pi:
                raise DomainError(f"{name} must lie in [0, 2*pi]")

    @classmethod
    def from_abc(cls, a: float, c: float, mu: float, phi: float = 0.0, psi: float = 0.0):
        return cls(a, math.sqrt(a * a - c * c), c, mu, phi, psi)


def cyclide_denominator(params: CyclideParams, u, v) -> np.ndarray:
    cu = np.cos(np.asarray(u, dtype=float) + params.phi)
    cv = np.cos(np.asarray(v, dtype=float) + params.psi)
    return params.a - params.c * cu * cv


def _cyclide_numerators(params: CyclideParams, u, v) -> np.ndarray:
    a, b, c, mu = params.a, params.b, params.c, params.mu
    uu = np.asarray(u, dtype=float) + params.phi
    vv = np.asarray(v, dtype=float) + params.psi
    cu, su, cv, sv = np.cos(uu), np.sin(uu), np.cos(vv), np.sin(vv)
    x = mu * (c - a * cu * cv) + b * b * cu
    y = b * su * (a - mu * cv)
    z = b * sv * (c * cu - mu)
    return np.stack([x, y, z], axis=-1)


def cyclide_point(params: CyclideParams, u, v) -> np.ndarray:
    """Parametric ring Dupin cyclide point(s) at the phase-shifted angles."""
    return _cyclide_numerators(params, u, v) / cyclide_denominator(params, u, v)[..., None]


def cyclide_implicit(params: CyclideParams, xyz) -> np.ndarray:
    """Quartic (|p|^2 - mu^2 + b^2)^2 - 4(a x - c mu)^2 - 4 b^2 y^2."""
    xyz = np.asarray(xyz, dtype=float)
    x, y = xyz[..., 0], xyz[..., 1]
    r2 = np.sum(xyz**2, axis=-1)
    a, b, c, mu = params.a, params.b, params.c, params.mu
    return (r2 - mu**2 + b**2) ** 2 - 4 * (a * x - c * mu) ** 2 - 4 * b**2 * y**2


def cyclide_patch(
    params: CyclideParams,
    alpha: float,
    table: NormalizationTable | None = None,
    tol: float = 1e-9,
) -> RationalTrigPatch:
    """Rational order-2 patch reproducing the cyclide over the domain.

    The denominator and the three numerators are order-2 trigonometric
    polynomials, so each is fitted exactly in the blending system: the
    denominator coordinates are the weights and the numerator coordinates
    are the weighted control points.
    """
    alpha = check_alpha(alpha)
    table = closed_form_table(2, alpha) if table is None else table
    if table.order != 2:
        raise DomainError("the cyclide construction needs an order-2 table")

    def target(u, v, w):
        return np.column_stack(
            [cyclide_denominator(params, u, v), _cyclide_numerators(params, u, v)]
        )

    fit = fit_in_span(2, alpha, target, table, tol=tol)
    if not fit.in_span:
        raise NotRepresentableError(
            f"cyclide fit residual {fit.residual:.3e} exceeds tol {tol:.1e}"
        )
    weights = fit.coords[:, 0]
    if np.any(weights <= 0):
        raise NotRepresentableError("fitted cyclide weights are not all positive")
    points = fit.coords[:, 1:] / weights[:, None]
    net = ControlNet(2, dict(zip(index_list(2), points)))
    return RationalTrigPatch(net, table, WeightNet.from_array(2, weights))
