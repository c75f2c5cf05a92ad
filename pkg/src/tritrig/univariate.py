"""Univariate normalized trigonometric B-basis of order n on [0, alpha].

The functions are

    A_{2n,i}(t) = c_{2n,i} sin^{2n-i}((alpha - t)/2) sin^i(t/2),   i = 0..2n,

and they form a partition of unity on [0, alpha].  As alpha -> 0 the
reparametrized functions A_{2n,i}(alpha s) tend to the Bernstein polynomials
of degree 2n.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_alpha, check_index, check_order, check_parameter
from .exceptions import ConditioningWarning

__all__ = [
    "UnivariateBasis",
    "make_univariate",
    "univariate_coefficients",
    "eval_A",
    "eval_all",
    "bernstein",
    "bernstein_limit_error",
]


def univariate_coefficients(n: int, alpha: float) -> np.ndarray:
    """Normalizing coefficients c_{2n,0..2n} of the univariate basis."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    s = math.sin(alpha / 2.0)
    two_c = 2.0 * math.cos(alpha / 2.0)
    scale = s ** (2 * n)
    if scale < 1e-300:
        warnings.warn(
            f"sin(alpha/2)^(2n) = {scale:.3e} underflows; coefficients are unreliable",
            ConditioningWarning,
            stacklevel=2,
        )
    coeffs = np.empty(2 * n + 1)
    for i in range(n + 1):
        total = 0.0
        for r in range(i // 2 + 1):
            total += math.comb(n, i - r) * math.comb(i - r, r) * two_c ** (i - 2 * r)
        coeffs[i] = total / scale if scale > 0.0 else math.inf
        coeffs[2 * n - i] = coeffs[i]
    return coeffs


@dataclass(frozen=True)
class UnivariateBasis:
    """Order-n univariate basis; immutable and safe to share."""

    order: int
    alpha: float
    coeffs: tuple

    @property
    def degree(self) -> int:
        return 2 * self.order

    def __call__(self, t) -> np.ndarray:
        return eval_all(self, t)


def make_univariate(n: int, alpha: float) -> UnivariateBasis:
    """Build the order-n univariate basis for the shape parameter ``alpha``."""
    n = check_order(n)
    alpha = check_alpha(alpha)
    coeffs = univariate_coefficients(n, alpha)
    return UnivariateBasis(order=n, alpha=alpha, coeffs=tuple(float(c) for c in coeffs))


def _sine_powers(x: np.ndarray, top: int) -> np.ndarray:
    """Running products sin(x)^k for k = 0..top, stacked on a new last axis."""
    s = np.sin(x)
    out = np.empty(x.shape + (top + 1,))
    out[..., 0] = 1.0
    for k in range(1, top + 1):
        out[..., k] = out[..., k - 1] * s
    return out


def eval_all(basis: UnivariateBasis, t) -> np.ndarray:
    """Values of all 2n+1 basis functions at ``t``; shape ``t.shape + (2n+1,)``."""
    t = check_parameter(t, basis.alpha)
    m = basis.degree
    left = _sine_powers((basis.alpha - t) / 2.0, m)
    right = _sine_powers(t / 2.0, m)
    idx = np.arange(m + 1)
    return np.asarray(basis.coeffs) * left[..., m - idx] * right[..., idx]


def eval_A(basis: UnivariateBasis, i: int, t):
    """Value of A_{2n,i}(t); scalar in, scalar out."""
    i = check_index(i, 0, basis.degree, "i")
    values = eval_all(basis, t)[..., i]
    return float(values) if np.ndim(values) == 0 else values


def bernstein(m: int, s) -> np.ndarray:
    """All Bernstein polynomials of degree m at s; shape ``s.shape + (m+1,)``."""
    s = np.asarray(s, dtype=float)
    idx = np.arange(m + 1)
    binom = np.array([math.comb(m, k) for k in idx], dtype=float)
    return binom * s[..., None] ** idx * (1.0 - s[..., None]) ** (m - idx)


def bernstein_limit_error(n: int, s, alpha_small: float) -> float:
    """max_i |A_{2n,i}(alpha s) - B_i^{2n}(s)| over the given s values."""
    basis = make_univariate(n, alpha_small)
    s = np.atleast_1d(np.asarray(s, dtype=float))
    check_parameter(s, 1.0, "s")
    s = np.clip(s, 0.0, 1.0)
    diff = eval_all(basis, basis.alpha * s) - bernstein(2 * n, s)
    return float(np.max(np.abs(diff)))
