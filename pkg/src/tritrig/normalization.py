"""Normalizing coefficients turning the joint system into a partition of unity.

Only a reduced set of coefficients is stored: the entries ``(i, j)`` with
``0 <= j <= i <= n``.  Everything else follows from the mirror rule
``coef(i, j) = coef(2n - i, j)`` and from the fact that the G and B families
share the R values.  Level 0 always coincides with the univariate
coefficients, so only the ``n(n+1)/2`` entries with ``j >= 1`` are unknowns
when solving numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from ._linalg import lstsq_qr
from ._validation import as_barycentric, check_alpha, check_index, check_order
from .exceptions import ConditioningError, ConfigurationError, UnsupportedOrderError
from .trivariate_basis import (
    CENTER,
    BasisIndex,
    _check_basis_index,
    _eval_index,
    delta,
    eval_system,
    index_list,
)
from .univariate import univariate_coefficients

__all__ = [
    "NormalizationTable",
    "reduced_keys",
    "closed_form_table",
    "level1_closed_form",
    "collocation_lattice",
    "lattice_size",
    "solve_table",
    "make_table",
    "eval_blending",
    "blending_matrix",
    "nonnegativity_survey",
]

DEFAULT_TOL = 1e-9


def reduced_keys(n: int) -> list[tuple[int, int]]:
    """Keys of the reduced table ordered by level, then by i."""
    return [(i, j) for j in range(n + 1) for i in range(j, n + 1)]


@dataclass(frozen=True)
class NormalizationTable:
    """Reduced coefficient table for order ``order`` and shape ``alpha``.

    ``residual`` holds the achieved partition-of-unity residual when the
    table was computed numerically and is ``None`` for closed forms.
    """

    order: int
    alpha: float
    reduced: Mapping[tuple[int, int], float]
    method: str = "closed-form"
    residual: float | None = None
    diagnostics: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        expected = set(reduced_keys(self.order))
        if set(self.reduced) != expected:
            raise ConfigurationError(
                f"reduced table for n={self.order} needs keys {sorted(expected)}"
            )
        frozen = {k: float(self.reduced[k]) for k in reduced_keys(self.order)}
        object.__setattr__(self, "reduced", MappingProxyType(frozen))
        object.__setattr__(self, "diagnostics", MappingProxyType(dict(self.diagnostics)))

    def coefficient(self, idx) -> float:
        """Expanded coefficient belonging to a basis index."""
        n = self.order
        idx = _check_basis_index(n, BasisIndex(*idx))
        if idx.family == CENTER:
            return self.reduced[(n, n)]
        i = idx.i if idx.i <= n else 2 * n - idx.i
        return self.reduced[(i, idx.j)]

    def expanded(self) -> np.ndarray:
        """All delta(n) coefficients in canonical index order."""
        return np.array([self.coefficient(idx) for idx in index_list(self.order)])

    def rows(self):
        """Yield ``(j, i, value)`` rows of the reduced table."""
        for i, j in reduced_keys(self.order):
            yield j, i, self.reduced[(i, j)]


def _level0(n: int, alpha: float) -> dict[tuple[int, int], float]:
    c = univariate_coefficients(n, alpha)
    return {(i, 0): float(c[i]) for i in range(n + 1)}


def closed_form_table(n: int, alpha: float) -> NormalizationTable:
    """Tabulated closed-form coefficients for n = 1, 2, 3."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    s, c = math.sin(alpha / 2), math.cos(alpha / 2)
    if n == 1:
        red = {(0, 0): 1 / s**2, (1, 0): 2 * c / s**2, (1, 1): 2 / s}
    elif n == 2:
        red = {
            (0, 0): 1 / s**4,
            (1, 0): 4 * c / s**4,
            (2, 0): (2 + 4 * c**2) / s**4,
            (1, 1): (4 + 8 * c**2) / s**5,
            (2, 1): (16 * c + 8 * c**3) / s**5,
            (2, 2): (10 + 20 * c**2) / s**4,
        }
    elif n == 3:
        red = {
            (0, 0): 1 / s**6,
            (1, 0): 6 * c / s**6,
            (2, 0): (12 * c**2 + 3) / s**6,
            (3, 0): (8 * c**3 + 12 * c) / s**6,
            (1, 1): (24 * c**2 + 6) / s**7,
            (2, 1): (48 * c**3 + 42 * c) / s**7,
            (3, 1): (24 * c**4 + 84 * c**2 + 12) / s**7,
            (2, 2): (24 * c**4 + 162 * c**2 + 24) / s**8,
            (3, 2): (24 * c**5 + 252 * c**3 + 144 * c) / s**8,
            (3, 3): (-104 * c**6 - 276 * c**4 + 324 * c**2 + 56) / s**9,
        }
    else:
        raise UnsupportedOrderError(f"closed forms exist only for n in (1, 2, 3), got {n}")
    return NormalizationTable(n, alpha, red, method="closed-form")


def level1_closed_form(n: int, alpha: float, i: int) -> float:
    """Level-1 coefficient for loop index ``i`` (1..n) of an order n >= 2 system."""
    n = check_order(n, minimum=2)
    alpha = check_alpha(alpha)
    i = check_index(i, 1, n, "i")
    c = univariate_coefficients(n, alpha)
    s = math.sin(alpha / 2)
    if i == 1:
        return 2.0 / s * c[2 * n - 2]
    return i / s * c[2 * n - i] * math.cos(alpha / 2) + (i + 1) / s * c[2 * n - i - 1]


def collocation_lattice(alpha: float, m: int, shifted: bool = False) -> np.ndarray:
    """Interior barycentric lattice used for fitting and verification.

    With ``shifted=False`` the (u, v) points are alpha*(p, q)/(m+2) for
    p, q >= 1, p+q <= m+1 (m(m+1)/2 points).  With ``shifted=True`` they are
    alpha*(p+1/2, q+1/2)/(m+2) for p, q >= 0, p+q <= m ((m+1)(m+2)/2 points).
    """
    step = alpha / (m + 2)
    if shifted:
        pq = [(p + 0.5, q + 0.5) for p in range(m + 1) for q in range(m + 1 - p)]
    else:
        pq = [(p, q) for p in range(1, m + 1) for q in range(1, m + 2 - p)]
    uv = np.array(pq, dtype=float) * step
    return as_barycentric(uv, alpha)


def _orbit_count(m: int) -> int:
    """Number of symmetry orbits of the unshifted lattice of size m.

    The lattice is invariant under permutations of (u, v, w) and so are the
    symmetrized unknown columns, so only one point per orbit adds a row of
    new information.  Orbits correspond to partitions of m+2 into three
    positive parts.
    """
    total = m + 2
    return sum(
        1
        for a in range(1, total)
        for b in range(a, total)
        if total - a - b >= b
    )


def lattice_size(n_unknowns: int) -> int:
    """Smallest m whose lattice has at least 2*n_unknowns distinct orbits."""
    m = 1
    while _orbit_count(m) < 2 * n_unknowns:
        m += 1
    return m


def _unknown_design(n: int, alpha: float, pts: np.ndarray):
    """Columns for the j >= 1 unknowns and the fixed level-0 contribution."""
    keys = [k for k in reduced_keys(n) if k[1] >= 1]
    col = {k: c for c, k in enumerate(keys)}
    level0 = _level0(n, alpha)
    A = np.zeros((pts.shape[0], len(keys)))
    fixed = np.zeros(pts.shape[0])
    for idx in index_list(n):
        values = _eval_index(n, idx, pts)
        if idx.family == CENTER:
            key = (n, n)
        else:
            key = (idx.i if idx.i <= n else 2 * n - idx.i, idx.j)
        if key[1] == 0:
            fixed += level0[key] * values
        else:
            A[:, col[key]] += values
    return keys, A, fixed


def solve_table(n: int, alpha: float, tol: float = DEFAULT_TOL) -> NormalizationTable:
    """Solve for the normalizing coefficients by least-squares collocation."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    n_unknowns = n * (n + 1) // 2
    m = lattice_size(n_unknowns)
    pts = collocation_lattice(alpha, m)
    keys, A, fixed = _unknown_design(n, alpha, pts)
    x = lstsq_qr(A, 1.0 - fixed)
    reduced = _level0(n, alpha)
    reduced.update({k: float(v) for k, v in zip(keys, x)})

    fit_residual = float(np.max(np.abs(A @ x + fixed - 1.0)))
    check = collocation_lattice(alpha, m, shifted=True)
    _, A2, fixed2 = _unknown_design(n, alpha, check)
    check_residual = float(np.max(np.abs(A2 @ x + fixed2 - 1.0)))
    residual = max(fit_residual, check_residual)

    diagnostics = {"fit_residual": fit_residual, "check_residual": check_residual}
    if n >= 2:
        diagnostics["level1_deviation"] = max(
            abs(reduced[(i, 1)] - level1_closed_form(n, alpha, i))
            / abs(level1_closed_form(n, alpha, i))
            for i in range(1, n + 1)
        )
    if residual > tol:
        raise ConditioningError(
            f"collocation residual {residual:.3e} exceeds tol {tol:.1e} (n={n}, alpha={alpha})",
            residual=residual,
        )
    return NormalizationTable(
        n, alpha, reduced, method="collocation", residual=residual, diagnostics=diagnostics
    )


def make_table(n: int, alpha: float, tol: float = DEFAULT_TOL) -> NormalizationTable:
    """Closed form for n <= 3, collocation otherwise."""
    n = check_order(n)
    return closed_form_table(n, alpha) if n <= 3 else solve_table(n, alpha, tol)


def blending_matrix(table: NormalizationTable, points) -> np.ndarray:
    """Normalized blending values, shape (N, delta(n)), canonical column order."""
    return eval_system(table.order, table.alpha, points) * table.expanded()


def eval_blending(table: NormalizationTable, idx, p):
    """Value of one normalized blending function at p (point or array)."""
    n = table.order
    idx = _check_basis_index(n, BasisIndex(*idx))
    pts = as_barycentric(p, table.alpha)
    values = table.coefficient(idx) * _eval_index(n, idx, pts)
    single = not (np.ndim(p) == 2 or isinstance(p, (list, tuple)) and p and not np.isscalar(p[0]))
    return float(values[0]) if single and values.shape[0] == 1 else values


def nonnegativity_survey(table: NormalizationTable, grid: int = 50) -> dict:
    """Minimum blending value over a (grid x grid) barycentric lattice.

    The lattice covers the closed domain, boundary included.  The returned
    dict holds the minimum value, the offending index and the point.
    """
    a = table.alpha
    uv = [(a * p / grid, a * q / grid) for p in range(grid + 1) for q in range(grid + 1 - p)]
    pts = as_barycentric(np.array(uv), a)
    M = blending_matrix(table, pts)
    row, col = np.unravel_index(np.argmin(M), M.shape)
    return {
        "order": table.order,
        "alpha": a,
        "min_value": float(M[row, col]),
        "argmin_index": str(index_list(table.order)[col]),
        "argmin_point": pts[row].tolist(),
        "points": int(pts.shape[0]),
        "functions": delta(table.order),
    }
