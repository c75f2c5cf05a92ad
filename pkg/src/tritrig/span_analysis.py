"""Equivalence classes of frequency triples, the Fourier-type system V_n and
numerical span checks.

A triple (r, g, b) stands for the pair cos(ru + gv + bw), sin(ru + gv + bw).
Because u + v + w = alpha, adding (z, z, z) only shifts the phase, and
negating the triple only flips the sign of the sine, so both moves keep the
spanned space.  Triples related by such moves are called equivalent.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.stats import qmc

from ._linalg import lstsq_qr, numerical_rank
from ._validation import as_barycentric, check_alpha, check_order
from .exceptions import DomainError, SingularSystemError
from .normalization import NormalizationTable, blending_matrix, collocation_lattice
from .trivariate_basis import delta, eval_system

__all__ = [
    "CoeffTriple",
    "EquivClass",
    "SpanBasisV",
    "canonical",
    "equivalent",
    "build_V",
    "eval_V",
    "rank_points",
    "collocation_matrix",
    "independence_rank",
    "FitResult",
    "fit_points",
    "fit_in_span",
    "RANK_CAP",
]

#: default upper bound on the order accepted by independence_rank
RANK_CAP = 6


class CoeffTriple(NamedTuple):
    r: int
    g: int
    b: int

    def label(self) -> str:
        terms = [
            (f"{k}*{var}" if k != 1 else var)
            for k, var in zip(self, "uvw")
            if k != 0
        ]
        return " + ".join(terms) if terms else "0"


def canonical(t) -> CoeffTriple:
    """Canonical representative of the class of ``t``.

    Both the shifted triple t - min(t) and the reflected triple max(t) - t
    belong to the class and have a zero entry; the lexicographically smaller
    one is returned.
    """
    r, g, b = (int(x) for x in t)
    lo, hi = min(r, g, b), max(r, g, b)
    return CoeffTriple(*min((r - lo, g - lo, b - lo), (hi - r, hi - g, hi - b)))


def _check_triple(t, n: int) -> tuple[int, int, int]:
    if len(t) != 3 or any(int(x) != x or not 0 <= x <= n for x in t):
        raise DomainError(f"triple {t!r} must have integer entries in [0, {n}]")
    return tuple(int(x) for x in t)


def equivalent(t1, t2, n: int) -> bool:
    """True iff t1 + t2 or t2 - t1 equals (z, z, z) for some z in [-n, 2n]."""
    n = check_order(n, minimum=0)
    a = _check_triple(t1, n)
    b = _check_triple(t2, n)
    total = {x + y for x, y in zip(a, b)}
    diff = {y - x for x, y in zip(a, b)}
    return any(
        len(s) == 1 and -n <= next(iter(s)) <= 2 * n for s in (total, diff)
    )


@dataclass(frozen=True)
class EquivClass:
    """One non-trivial class; ``label`` is the triple used for evaluation."""

    label: CoeffTriple
    step: int

    @property
    def canonical(self) -> CoeffTriple:
        return canonical(self.label)

    def members(self, n: int) -> list[CoeffTriple]:
        """All triples in [0, n]^3 equivalent to the label."""
        return [
            CoeffTriple(*t)
            for t in itertools.product(range(n + 1), repeat=3)
            if equivalent(t, self.label, n)
        ]

    def __str__(self) -> str:
        return f"[{self.label.label()}]"


@dataclass(frozen=True)
class SpanBasisV:
    order: int
    classes: tuple

    @property
    def function_count(self) -> int:
        return 1 + 2 * len(self.classes)

    def new_classes(self, k: int) -> list[EquivClass]:
        return [c for c in self.classes if c.step == k]

    def function_names(self) -> list[str]:
        names = ["1"]
        for c in self.classes:
            arg = c.label.label()
            names += [f"cos({arg})", f"sin({arg})"]
        return names


def _step_classes(k: int) -> list[EquivClass]:
    triples = (
        [(0, g, k) for g in range(k)]
        + [(k, 0, b) for b in range(k)]
        + [(r, k, 0) for r in range(k)]
    )
    return [EquivClass(CoeffTriple(*t), k) for t in triples]


def build_V(n: int) -> SpanBasisV:
    """Recursively collect the classes spanning V_n (3k new ones at step k)."""
    n = check_order(n, minimum=0)
    classes: list[EquivClass] = []
    for k in range(1, n + 1):
        classes.extend(_step_classes(k))
    return SpanBasisV(n, tuple(classes))


def eval_V(n: int, alpha: float, points, centered: bool = True) -> np.ndarray:
    """Evaluate the delta(n) functions of V_n; shape (N, delta(n)).

    With ``centered=True`` each argument is shifted by (r+g+b)*alpha/3, i.e.
    measured from the domain centroid.  The shift is a phase change within
    each cos/sin pair, so the span is unchanged, but the columns become far
    better conditioned for small alpha.
    """
    n = check_order(n, minimum=0)
    alpha = check_alpha(alpha)
    pts = as_barycentric(points, alpha)
    cols = [np.ones(pts.shape[0])]
    for cls in build_V(n).classes:
        r, g, b = cls.label
        arg = pts @ np.array([r, g, b], dtype=float)
        if centered:
            arg = arg - (r + g + b) * alpha / 3.0
        cols += [np.cos(arg), np.sin(arg)]
    return np.stack(cols, axis=1)


def rank_points(n: int, alpha: float, extra: int = 20) -> np.ndarray:
    """Deterministic interior points (Halton sequence folded onto the triangle)."""
    count = delta(n) + extra
    h = qmc.Halton(d=2, scramble=False).random(count + 1)[1:]
    root = np.sqrt(h[:, 0])
    bary = np.stack([1.0 - root, root * (1.0 - h[:, 1]), root * h[:, 1]], axis=1)
    return as_barycentric(bary * alpha, alpha)


def collocation_matrix(n: int, alpha: float, system: str, points) -> np.ndarray:
    """Columns of T, V or both ("TV"), each scaled to unit Euclidean norm."""
    parts = []
    if system not in ("T", "V", "TV"):
        raise DomainError(f"system must be 'T', 'V' or 'TV', got {system!r}")
    if "T" in system:
        parts.append(eval_system(n, alpha, points))
    if "V" in system:
        parts.append(eval_V(n, alpha, points))
    M = np.hstack(parts)
    return M / np.linalg.norm(M, axis=0)


def independence_rank(
    n: int,
    alpha: float,
    system: str = "T",
    *,
    extra: int = 20,
    cap: int = RANK_CAP,
    strict: bool = False,
) -> int:
    """Numerical rank of the collocation matrix of T, V or the joint [T|V].

    Singular values above delta(n) * sigma_max * 1e-10 are counted.  With
    ``strict=True`` a rank below delta(n) raises SingularSystemError.
    """
    n = check_order(n)
    alpha = check_alpha(alpha)
    if n > cap:
        raise DomainError(f"order {n} exceeds the configured cap {cap}")
    dim = delta(n)
    M = collocation_matrix(n, alpha, system, rank_points(n, alpha, extra))
    rank = numerical_rank(M, dim * 1e-10)
    if strict and rank < dim:
        raise SingularSystemError(f"rank {rank} < {dim} for system {system} (n={n})")
    return rank


@dataclass(frozen=True)
class FitResult:
    coords: np.ndarray
    residual: float
    in_span: bool
    tol: float


def fit_points(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """(fit, check) point sets: half-shifted lattice and the plain lattice."""
    dim = delta(n)
    m = 1
    while (m + 1) * (m + 2) // 2 < 2 * dim:
        m += 1
    return collocation_lattice(alpha, m, shifted=True), collocation_lattice(alpha, m + 1)


def fit_in_span(
    n: int,
    alpha: float,
    f: Callable,
    table: NormalizationTable,
    tol: float = 1e-9,
) -> FitResult:
    """Least-squares coordinates of f in the normalized blending system.

    ``f(u, v, w)`` receives arrays and returns shape (N,) or (N, k).  The
    residual is the max deviation at a separate check lattice, divided by
    max(1, max|f|); membership is certified when it does not exceed tol.
    """
    n = check_order(n)
    alpha = check_alpha(alpha)
    if table.order != n or abs(table.alpha - alpha) > 1e-15 * alpha:
        raise DomainError("table order/alpha do not match the requested fit")
    fit, check = fit_points(n, alpha)
    y = np.asarray(f(*fit.T), dtype=float)
    coords = lstsq_qr(blending_matrix(table, fit), y)
    target = np.asarray(f(*check.T), dtype=float)
    approx = blending_matrix(table, check) @ coords
    scale = max(1.0, float(np.max(np.abs(target))))
    residual = float(np.max(np.abs(approx - target))) / scale
    return FitResult(coords=coords, residual=residual, in_span=residual <= tol, tol=tol)
