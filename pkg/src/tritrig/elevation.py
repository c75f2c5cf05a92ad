"""Explicit special-case transformations between nets and tables.

* order elevation of an order-1 net to order 2,
* the quadratic relation producing the order-2 coefficient table from the
  order-1 one,
* conversion of order-2 and order-3 nets into the control nets of the
  quintic and octic Bezier triangles obtained as alpha -> 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ._validation import check_alpha
from .exceptions import ConfigurationError, DomainError, UnsupportedOrderError
from .normalization import NormalizationTable
from .patches import ControlNet
from .trivariate_basis import CENTER, FAMILIES, BasisIndex, index_list

__all__ = [
    "BezierTriangleNet",
    "elevation_matrix",
    "elevate_1_to_2",
    "coefficient_relation_1_to_2",
    "bezier_limit_weights",
    "to_bezier_limit",
    "eval_bezier",
]

_NEXT = {"R": "G", "G": "B", "B": "R"}
_PREV = {"R": "B", "G": "R", "B": "G"}


def elevation_matrix(alpha: float) -> np.ndarray:
    """(19, 7) matrix E with order-2 points = E @ order-1 points (canonical orders)."""
    alpha = check_alpha(alpha)
    c = math.cos(alpha / 2) ** 2
    s = math.sin(alpha / 2) ** 2
    col = {idx: k for k, idx in enumerate(index_list(1))}
    row = {idx: k for k, idx in enumerate(index_list(2))}
    center = BasisIndex(CENTER, 1, 1)
    E = np.zeros((len(row), len(col)))

    def put(target, source, weight):
        E[row[target], col[source]] += weight

    for f in FAMILIES:
        g, h = _NEXT[f], _PREV[f]
        p0, p1 = BasisIndex(f, 0, 0), BasisIndex(f, 1, 0)
        g0, g1 = BasisIndex(g, 0, 0), BasisIndex(g, 1, 0)
        h1 = BasisIndex(h, 1, 0)

        put(BasisIndex(f, 0, 0), p0, 1.0)

        put(BasisIndex(f, 1, 0), p0, 0.5)
        put(BasisIndex(f, 1, 0), p1, 0.5)

        q = BasisIndex(f, 2, 0)
        put(q, p0, 1 / (2 + 4 * c))
        put(q, p1, 2 * c / (1 + 2 * c))
        put(q, g0, 1 / (2 + 4 * c))

        put(BasisIndex(f, 3, 0), p1, 0.5)
        put(BasisIndex(f, 3, 0), g0, 0.5)

        q = BasisIndex(f, 1, 1)
        put(q, p0, 1 / (2 + 4 * c))
        put(q, p1, c / (1 + 2 * c))
        put(q, center, s / (2 + 4 * c))
        put(q, g1, c / (2 + 4 * c))
        put(q, h1, c / (1 + 2 * c))

        q = BasisIndex(f, 2, 1)
        put(q, p0, 1 / (8 + 4 * c))
        put(q, p1, (1 + c) / (4 + 2 * c))
        put(q, center, s / (4 + 2 * c))
        put(q, g0, 1 / (8 + 4 * c))
        put(q, g1, (1 + 2 * c) / (8 + 4 * c))
        put(q, h1, (1 + 2 * c) / (8 + 4 * c))

        put(BasisIndex(CENTER, 2, 2), p0, 1 / (5 + 10 * c))
        put(BasisIndex(CENTER, 2, 2), p1, 4 * c / (5 + 10 * c))
    put(BasisIndex(CENTER, 2, 2), center, 2 * s / (5 + 10 * c))
    return E


def elevate_1_to_2(net1: ControlNet, alpha: float) -> ControlNet:
    """Re-express an order-1 net in the order-2 basis; the surface is unchanged."""
    if net1.order != 1:
        raise UnsupportedOrderError(f"elevation is implemented for order 1 nets only, got {net1.order}")
    return ControlNet.from_array(2, elevation_matrix(alpha) @ net1.as_array())


def coefficient_relation_1_to_2(table1: NormalizationTable, alpha: float | None = None) -> NormalizationTable:
    """Order-2 coefficients from squaring the order-1 partition of unity."""
    if table1.order != 1:
        raise UnsupportedOrderError("the relation starts from an order-1 table")
    a = table1.alpha if alpha is None else check_alpha(alpha)
    if abs(a - table1.alpha) > 1e-15 * a:
        raise ConfigurationError("alpha does not match the order-1 table")
    # G and B share the R values at order 1
    r220 = g220 = b220 = table1.reduced[(0, 0)]
    r210 = g210 = b210 = table1.reduced[(1, 0)]
    r211 = table1.reduced[(1, 1)]
    sa, sh, th = math.sin(a), math.sin(a / 2), math.tan(a / 2)
    ch2 = math.cos(a / 2) ** 2
    red = {
        (0, 0): r220**2,
        (1, 0): 2 * r220 * r210,
        (2, 0): 2 * r220 * g220 + r210**2,
        (1, 1): 2 * r220 * r211
        + r220**2 * g210 * sa
        + 2 * (1 + r220 * ch2) * r210 * b210 * sh,
        (2, 1): 2 * r210 * r211
        + r220 * r210 * g210 * th
        + r210**2 * g210 * sh
        + r210 * b210**2 * sh
        + r210 * g220 * b210 * th,
        (2, 2): r211**2
        + 2 * (r220 * g220 + r220 * b220 + g220 * b220)
        + 2 * (r210 * g210 + r210 * b210 + g210 * b210),
    }
    return NormalizationTable(2, a, red, method="relation")


@dataclass(frozen=True)
class BezierTriangleNet:
    """Bezier triangle of degree m keyed by exponent triples (d, e, f)."""

    degree: int
    points: Mapping

    def __post_init__(self):
        m = self.degree
        expected = {(d, e, m - d - e) for d in range(m + 1) for e in range(m + 1 - d)}
        keys = {tuple(int(x) for x in k) for k in self.points}
        if keys != expected:
            raise ConfigurationError(f"a degree-{m} net needs all {len(expected)} triples")
        frozen = {
            tuple(int(x) for x in k): np.asarray(v, dtype=float) for k, v in self.points.items()
        }
        object.__setattr__(self, "points", MappingProxyType(dict(sorted(frozen.items(), reverse=True))))


def eval_bezier(net: BezierTriangleNet, xyz) -> np.ndarray:
    """Evaluate at simplex points (x, y, z) with x + y + z = 1; shape (N, 3)."""
    bary = np.atleast_2d(np.asarray(xyz, dtype=float))
    m = net.degree
    out = np.zeros((bary.shape[0], 3))
    for (d, e, f), p in net.points.items():
        coef = math.factorial(m) // (math.factorial(d) * math.factorial(e) * math.factorial(f))
        out += np.outer(coef * bary[:, 0] ** d * bary[:, 1] ** e * bary[:, 2] ** f, p)
    return out


# One symmetry sector of the conversion lists, written with the literature's
# subscripts (family letter, k, j) where k = 2n - i.
_F = Fraction
_SECTORS = {
    2: {
        (5, 0, 0): [(_F(1), "r", 4, 0)],
        (4, 0, 1): [(_F(1, 5), "r", 4, 0), (_F(4, 5), "r", 3, 0)],
        (3, 0, 2): [(_F(2, 5), "r", 3, 0), (_F(3, 5), "r", 2, 0)],
        (2, 0, 3): [(_F(3, 5), "r", 2, 0), (_F(2, 5), "r", 1, 0)],
        (1, 0, 4): [(_F(4, 5), "r", 1, 0), (_F(1, 5), "g", 4, 0)],
        (3, 1, 1): [(_F(1, 5), "r", 3, 0), (_F(3, 5), "r", 3, 1), (_F(1, 5), "b", 1, 0)],
        (2, 1, 2): [(_F(1, 5), "r", 2, 0), (_F(4, 5), "r", 2, 1)],
    },
    3: {
        (8, 0, 0): [(_F(1), "r", 6, 0)],
        (7, 0, 1): [(_F(1, 4), "r", 6, 0), (_F(3, 4), "r", 5, 0)],
        (6, 0, 2): [(_F(1, 28), "r", 6, 0), (_F(3, 7), "r", 5, 0), (_F(15, 28), "r", 4, 0)],
        (5, 0, 3): [(_F(3, 28), "r", 5, 0), (_F(15, 28), "r", 4, 0), (_F(5, 14), "r", 3, 0)],
        (4, 0, 4): [(_F(3, 14), "r", 4, 0), (_F(4, 7), "r", 3, 0), (_F(3, 14), "r", 2, 0)],
        (3, 0, 5): [(_F(5, 14), "r", 3, 0), (_F(15, 28), "r", 2, 0), (_F(3, 28), "r", 1, 0)],
        (2, 0, 6): [(_F(15, 28), "r", 2, 0), (_F(3, 7), "r", 1, 0), (_F(1, 28), "g", 6, 0)],
        (1, 0, 7): [(_F(3, 4), "r", 1, 0), (_F(1, 4), "g", 6, 0)],
        (6, 1, 1): [
            (_F(1, 28), "r", 6, 0), (_F(3, 14), "r", 5, 0),
            (_F(15, 28), "r", 5, 1), (_F(3, 14), "b", 1, 0),
        ],
        (5, 1, 2): [
            (_F(1, 14), "r", 5, 0), (_F(5, 28), "r", 4, 0), (_F(5, 28), "r", 5, 1),
            (_F(15, 28), "r", 4, 1), (_F(1, 28), "b", 1, 0),
        ],
        (4, 1, 3): [
            (_F(3, 28), "r", 4, 0), (_F(1, 7), "r", 3, 0),
            (_F(9, 28), "r", 4, 1), (_F(3, 7), "r", 3, 1),
        ],
        (3, 1, 4): [
            (_F(1, 7), "r", 3, 0), (_F(3, 28), "r", 2, 0),
            (_F(3, 7), "r", 3, 1), (_F(9, 28), "r", 2, 1),
        ],
        (2, 1, 5): [
            (_F(5, 28), "r", 2, 0), (_F(1, 14), "r", 1, 0), (_F(15, 28), "r", 2, 1),
            (_F(1, 28), "g", 5, 0), (_F(5, 28), "g", 5, 1),
        ],
        (1, 1, 6): [
            (_F(3, 14), "r", 1, 0), (_F(1, 28), "g", 6, 0),
            (_F(3, 14), "g", 5, 0), (_F(15, 28), "g", 5, 1),
        ],
        (4, 2, 2): [
            (_F(1, 28), "r", 4, 0), (_F(3, 14), "r", 4, 1), (_F(1, 28), "b", 2, 0),
            (_F(3, 14), "b", 2, 1), (_F(1, 2), "r", 4, 2),
        ],
        (3, 2, 3): [(_F(1, 28), "r", 3, 0), (_F(3, 14), "r", 3, 1), (_F(3, 4), "r", 3, 2)],
    },
}


def _to_index(n: int, letter: str, k: int, j: int) -> BasisIndex:
    return BasisIndex(letter.upper(), 2 * n - k, j)


def bezier_limit_weights(n: int) -> dict[tuple[int, int, int], dict[BasisIndex, Fraction]]:
    """Exact convex weights of every Bezier point of the limit net.

    The listed sector is completed by the cyclic relabeling R -> G -> B -> R
    combined with the rotation (d, e, f) -> (e, f, d).  Points reached twice
    must agree, which is checked.
    """
    if n not in _SECTORS:
        raise UnsupportedOrderError(f"Bezier limit nets are tabulated for n in (2, 3), got {n}")
    out: dict = {}
    for key, terms in _SECTORS[n].items():
        combo = {}
        for weight, letter, k, j in terms:
            idx = _to_index(n, letter, k, j)
            combo[idx] = combo.get(idx, 0) + weight
        for _ in range(3):
            previous = out.get(key)
            if previous is not None and previous != combo:
                raise AssertionError(f"inconsistent symmetric completion at {key}")
            out[key] = combo
            key = (key[1], key[2], key[0])
            combo = {BasisIndex(_NEXT[i.family], i.i, i.j): w for i, w in combo.items()}
    return dict(sorted(out.items(), reverse=True))


def to_bezier_limit(net: ControlNet) -> BezierTriangleNet:
    """Control net of the Bezier triangle the patch tends to as alpha -> 0."""
    weights = bezier_limit_weights(net.order)
    points = {
        key: sum(float(w) * net[idx] for idx, w in combo.items())
        for key, combo in weights.items()
    }
    return BezierTriangleNet(3 * net.order - 1, points)
