from __future__ import annotations

import math
import numbers

import numpy as np

from .exceptions import BasisIndexError, DomainError

#: relative slack used when checking that a parameter lies in [0, alpha]
DOMAIN_SLACK = 1e-12


def check_alpha(alpha) -> float:
    """Return ``alpha`` as a float, raising DomainError unless 0 < alpha < pi."""
    try:
        a = float(alpha)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"alpha must be a real number, got {alpha!r}") from exc
    if not math.isfinite(a) or not 0.0 < a < math.pi:
        raise DomainError(f"alpha must lie strictly inside (0, pi), got {a!r}")
    return a


def check_order(n, minimum: int = 1) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError(f"order must be an integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"order must be >= {minimum}, got {n}")
    return int(n)


def check_parameter(t, alpha: float, name: str = "t") -> np.ndarray:
    """Validate values in [0, alpha]; values within a tiny slack are clipped."""
    arr = np.asarray(t, dtype=float)
    slack = DOMAIN_SLACK * max(alpha, 1.0)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    if np.any(arr < -slack) or np.any(arr > alpha + slack):
        raise DomainError(f"{name} must lie in [0, alpha={alpha}]")
    return np.clip(arr, 0.0, alpha)


def check_index(value, low: int, high: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise BasisIndexError(f"{name} must be an integer, got {value!r}")
    if not low <= value <= high:
        raise BasisIndexError(f"{name}={value} outside [{low}, {high}]")
    return int(value)


def as_barycentric(points, alpha: float) -> np.ndarray:
    """Coerce points to an (N, 3) array of barycentric angles summing to alpha.

    Accepts a single point or an array whose last axis has length 2 (u, v) or
    3 (u, v, w).  The third coordinate is always recomputed as alpha - u - v.
    """
    from .trivariate_basis import DomainPoint

    if isinstance(points, DomainPoint):
        arr = np.array([[points.u, points.v]])
    elif isinstance(points, (list, tuple)) and points and all(
        isinstance(p, DomainPoint) for p in points
    ):
        arr = np.array([[p.u, p.v] for p in points])
    else:
        arr = np.asarray(points, dtype=float)
        if arr.ndim == 1:
            arr = arr[None, :]
        if arr.ndim != 2 or arr.shape[1] not in (2, 3):
            raise DomainError("points must have shape (N, 2) or (N, 3)")
        arr = arr[:, :2]
    if not np.all(np.isfinite(arr)):
        raise DomainError("points must be finite")
    slack = DOMAIN_SLACK * max(alpha, 1.0) * 10
    u, v = arr[:, 0], arr[:, 1]
    w = alpha - u - v
    if np.any(u < -slack) or np.any(v < -slack) or np.any(w < -slack):
        raise DomainError("points must lie on the domain triangle u+v+w=alpha, u,v,w>=0")
    out = np.empty((arr.shape[0], 3))
    out[:, 0] = np.clip(u, 0.0, alpha)
    out[:, 1] = np.clip(v, 0.0, alpha)
    out[:, 2] = np.clip(alpha - out[:, 0] - out[:, 1], 0.0, alpha)
    return out
