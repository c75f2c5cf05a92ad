"""Unnormalized constrained trivariate families R, G, B and the joint system.

Index convention
----------------
A function is addressed by ``BasisIndex(family, i, j)`` where ``j`` is the
level and ``i`` runs over ``j..2n-1-j``.  For family R this is the function

    R[i, j](u, v, w) = sin^{2n-i}(u/2) sin^i(w/2) cos^{min(i, 2n-i)-j}(v/2) sin^j(v/2)

which covers both closed-form branches (``i <= n`` and its reflection for
``i > n``).  The other families are cyclic relabelings::

    G[i, j](u, v, w) = R[i, j](w, u, v)
    B[i, j](u, v, w) = R[i, j](v, w, u)

and the single central function is R[n, n].  In the subscript notation
r_{2n,k,j} used in the literature, ``k = 2n - i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from ._validation import (
    as_barycentric,
    check_alpha,
    check_index,
    check_order,
    check_parameter,
)
from .exceptions import BasisIndexError, DomainError

__all__ = [
    "FAMILIES",
    "EDGES",
    "DomainPoint",
    "BasisIndex",
    "TrivariateSystem",
    "delta",
    "index_list",
    "eval_R",
    "eval_family",
    "eval_system",
    "edge_point",
    "edge_indices",
    "restrict_boundary",
]

FAMILIES = ("R", "G", "B")
CENTER = "Center"
EDGES = ("v=0", "u=0", "w=0")

# argument permutation (positions into (u, v, w)) fed to the R formula
_PERM = {"R": (0, 1, 2), "G": (2, 0, 1), "B": (1, 2, 0)}


def delta(n: int) -> int:
    """Dimension 3n(n+1)+1 of the order-n system."""
    n = check_order(n, minimum=0)
    return 3 * n * (n + 1) + 1


@dataclass(frozen=True)
class DomainPoint:
    """Barycentric point (u, v, w) with u + v + w = alpha.

    Only u and v are taken from the caller; w is recomputed so the constraint
    holds exactly up to rounding.
    """

    u: float
    v: float
    w: float
    alpha: float

    @classmethod
    def from_uv(cls, u: float, v: float, alpha: float) -> "DomainPoint":
        alpha = check_alpha(alpha)
        (uu, vv, ww), = as_barycentric([[u, v]], alpha)
        return cls(float(uu), float(vv), float(ww), alpha)

    @classmethod
    def from_uvw(cls, u: float, v: float, w: float, alpha: float) -> "DomainPoint":
        alpha = check_alpha(alpha)
        if abs(u + v + w - alpha) > 1e-12 * max(alpha, 1.0) * 10:
            raise DomainError(f"u+v+w={u + v + w!r} differs from alpha={alpha!r}")
        return cls.from_uv(u, v, alpha)

    def as_array(self) -> np.ndarray:
        return np.array([self.u, self.v, self.w])


class BasisIndex(NamedTuple):
    family: str
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.family}[{self.i},{self.j}]"


def _check_basis_index(n: int, idx: BasisIndex) -> BasisIndex:
    family, i, j = idx
    if family == CENTER:
        if (i, j) != (n, n):
            raise BasisIndexError(f"the center function has i = j = n = {n}")
        return BasisIndex(CENTER, n, n)
    if family not in FAMILIES:
        raise BasisIndexError(f"unknown family {family!r}")
    j = check_index(j, 0, n - 1, "j")
    i = check_index(i, j, 2 * n - 1 - j, "i")
    return BasisIndex(family, i, j)


def index_list(n: int) -> list[BasisIndex]:
    """All delta(n) indices in canonical order: Center, then R, G, B by (j, i)."""
    n = check_order(n)
    out = [BasisIndex(CENTER, n, n)]
    for family in FAMILIES:
        for j in range(n):
            for i in range(j, 2 * n - j):
                out.append(BasisIndex(family, i, j))
    return out


def iter_family(n: int, family: str) -> Iterator[BasisIndex]:
    for j in range(n):
        for i in range(j, 2 * n - j):
            yield BasisIndex(family, i, j)


@dataclass(frozen=True)
class TrivariateSystem:
    """Descriptor of the joint system of order n for a fixed alpha."""

    order: int
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "order", check_order(self.order))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @property
    def dimension(self) -> int:
        return delta(self.order)

    @property
    def index_list(self) -> list[BasisIndex]:
        return index_list(self.order)

    def evaluate(self, points) -> np.ndarray:
        return eval_system(self.order, self.alpha, points)


def _r_formula(n: int, i: int, j: int, u, v, w) -> np.ndarray:
    su, sv, sw = np.sin(u / 2.0), np.sin(v / 2.0), np.sin(w / 2.0)
    cv = np.cos(v / 2.0)
    return su ** (2 * n - i) * sw**i * cv ** (min(i, 2 * n - i) - j) * sv**j


def _scalar_or_array(values: np.ndarray, single: bool):
    return float(values[0]) if single else values


def _single(points) -> bool:
    if isinstance(points, DomainPoint):
        return True
    if isinstance(points, (list, tuple)) and points and isinstance(points[0], DomainPoint):
        return False
    return np.ndim(points) == 1


def eval_R(n: int, alpha: float, i: int, j: int, p):
    """Unnormalized R-family function; accepts one point or an (N, 2|3) array.

    Unlike :func:`eval_family`, the level may reach ``j = n`` so that the
    central function R[n, n] is addressable directly.
    """
    n = check_order(n)
    alpha = check_alpha(alpha)
    j = check_index(j, 0, n, "j")
    i = check_index(i, j, 2 * n - j, "i")
    pts = as_barycentric(p, alpha)
    values = _r_formula(n, i, j, pts[:, 0], pts[:, 1], pts[:, 2])
    return _scalar_or_array(values, _single(p))


def _eval_index(n: int, idx: BasisIndex, pts: np.ndarray) -> np.ndarray:
    if idx.family == CENTER:
        return _r_formula(n, n, n, pts[:, 0], pts[:, 1], pts[:, 2])
    a, b, c = _PERM[idx.family]
    return _r_formula(n, idx.i, idx.j, pts[:, a], pts[:, b], pts[:, c])


def eval_family(n: int, alpha: float, idx, p):
    """Evaluate the function addressed by ``idx`` (any family, or Center)."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    idx = _check_basis_index(n, BasisIndex(*idx))
    pts = as_barycentric(p, alpha)
    return _scalar_or_array(_eval_index(n, idx, pts), _single(p))


def eval_system(n: int, alpha: float, points) -> np.ndarray:
    """Collocation matrix of shape (N, delta(n)) in canonical column order."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    pts = as_barycentric(points, alpha)
    return np.stack([_eval_index(n, idx, pts) for idx in index_list(n)], axis=1)


def edge_indices(n: int, edge: str) -> list[BasisIndex]:
    """The 2n+1 functions surviving on ``edge``, ordered like A_{2n,2n-i}, i=0..2n."""
    n = check_order(n)
    if edge not in EDGES:
        raise DomainError(f"edge must be one of {EDGES}, got {edge!r}")
    family = {"v=0": "R", "u=0": "G", "w=0": "B"}[edge]
    following = {"R": "G", "G": "B", "B": "R"}[family]
    return [BasisIndex(family, i, 0) for i in range(2 * n)] + [BasisIndex(following, 0, 0)]


def edge_point(edge: str, t, alpha: float) -> np.ndarray:
    """Barycentric points on ``edge`` for parameter values t in [0, alpha].

    The edge parameter is u on v=0, w on u=0 and v on w=0.
    """
    t = np.atleast_1d(check_parameter(t, alpha))
    zero = np.zeros_like(t)
    if edge == "v=0":
        cols = (t, zero, alpha - t)
    elif edge == "u=0":
        cols = (zero, alpha - t, t)
    elif edge == "w=0":
        cols = (alpha - t, t, zero)
    else:
        raise DomainError(f"edge must be one of {EDGES}, got {edge!r}")
    return np.stack(cols, axis=1)


def restrict_boundary(n: int, alpha: float, edge: str, t) -> np.ndarray:
    """Surviving basis values on an edge; shape (2n+1,) or (len(t), 2n+1).

    Entry k equals A_{2n,2n-k}(t) / c_{2n,2n-k}.
    """
    n = check_order(n)
    alpha = check_alpha(alpha)
    single = np.ndim(t) == 0
    pts = edge_point(edge, t, alpha)
    values = np.stack([_eval_index(n, idx, pts) for idx in edge_indices(n, edge)], axis=1)
    return values[0] if single else values
