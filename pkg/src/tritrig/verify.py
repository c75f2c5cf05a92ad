"""Verification suites producing machine-readable pass/fail reports."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .elevation import (
    bezier_limit_weights,
    coefficient_relation_1_to_2,
    elevate_1_to_2,
    elevation_matrix,
    eval_bezier,
    to_bezier_limit,
)
from .exceptions import DomainError
from .geometries import (
    GOLDEN_RATIO,
    CyclideParams,
    TorusParams,
    cyclide_patch,
    cyclide_point,
    torus_net,
    torus_point,
)
from .normalization import blending_matrix, closed_form_table, make_table
from .patches import ControlNet, TrigPatch
from .span_analysis import build_V, independence_rank
from .trivariate_basis import delta, index_list, restrict_boundary
from .univariate import eval_all, make_univariate

__all__ = ["SUITES", "verify", "random_domain_points", "grid_points"]

SEED = 20240601


def random_domain_points(alpha: float, count: int, seed: int = SEED) -> np.ndarray:
    return np.random.default_rng(seed).dirichlet([1.0, 1.0, 1.0], count) * alpha


def grid_points(alpha: float, size: int) -> np.ndarray:
    """Barycentric lattice with ``size`` points per edge, boundary included."""
    k = size - 1
    uv = [(alpha * p / k, alpha * q / k) for p in range(size) for q in range(size - p)]
    return np.array(uv)


def _check(name: str, value: float, limit: float, **extra) -> dict:
    return {"check": name, "value": float(value), "limit": float(limit), "passed": bool(value <= limit), **extra}


def suite_unity(n: int = 3, alpha: float = 1.0) -> list[dict]:
    table = make_table(n, alpha)
    pts = random_domain_points(alpha, 1000)
    residual = np.max(np.abs(blending_matrix(table, pts).sum(axis=1) - 1.0))
    return [_check("partition-of-unity", residual, 1e-9, n=n, alpha=alpha, method=table.method)]


def suite_boundary(n: int = 3, alpha: float = 1.0) -> list[dict]:
    basis = make_univariate(n, alpha)
    t = np.linspace(0.0, alpha, 201)
    expected = (eval_all(basis, t) / np.asarray(basis.coeffs))[:, ::-1]
    out = []
    for edge in ("v=0", "u=0", "w=0"):
        err = np.max(np.abs(restrict_boundary(n, alpha, edge, t) - expected))
        out.append(_check(f"boundary {edge}", err, 1e-12, n=n, alpha=alpha))
    return out


def suite_dimension(n: int = 4, alpha: float = 3.0) -> list[dict]:
    dim = delta(n)
    out = [
        {"check": "index count", "delta": dim, "value": len(index_list(n)), "passed": len(index_list(n)) == dim},
        {"check": "V function count", "delta": dim, "value": build_V(n).function_count,
         "passed": build_V(n).function_count == dim},
    ]
    for system in ("T", "V", "TV"):
        rank = independence_rank(n, alpha, system)
        out.append({"check": f"rank {system}", "delta": dim, "value": rank, "alpha": alpha, "passed": rank == dim})
    return out


def suite_torus(n: int = 2, alpha: float = math.pi / 2) -> list[dict]:
    params = TorusParams(3 * GOLDEN_RATIO, 3.0)
    patch = TrigPatch(torus_net(params, alpha), make_table(2, alpha))
    uv = grid_points(alpha, 30)
    err = np.max(np.abs(patch.evaluate(uv) - torus_point(params, uv[:, 0], uv[:, 1])))
    return [_check("torus exactness", err, 1e-9, alpha=alpha)]


def suite_cyclide(n: int = 2, alpha: float = math.pi / 2) -> list[dict]:
    params = CyclideParams(6.0, 4.0 * math.sqrt(2.0), 2.0, 3.0)
    patch = cyclide_patch(params, alpha)
    pts = random_domain_points(alpha, 500)
    err = np.max(np.abs(patch.evaluate(pts) - cyclide_point(params, pts[:, 0], pts[:, 1])))
    return [
        _check("cyclide exactness", err, 1e-8, alpha=alpha),
        {"check": "cyclide weights positive", "value": float(patch.wnet.as_array().min()),
         "passed": bool(patch.wnet.as_array().min() > 0)},
    ]


def suite_elevation(n: int = 1, alpha: float = math.pi / 2) -> list[dict]:
    rng = np.random.default_rng(SEED)
    net1 = ControlNet.from_array(1, rng.normal(size=(7, 3)))
    pts = random_domain_points(alpha, 300)
    before = TrigPatch(net1, make_table(1, alpha)).evaluate(pts)
    after = TrigPatch(elevate_1_to_2(net1, alpha), make_table(2, alpha)).evaluate(pts)
    E = elevation_matrix(alpha)
    rel = coefficient_relation_1_to_2(closed_form_table(1, alpha))
    ref = closed_form_table(2, alpha)
    rel_err = max(abs(rel.reduced[k] - ref.reduced[k]) / abs(ref.reduced[k]) for k in ref.reduced)
    return [
        _check("surface invariance", np.max(np.abs(before - after)), 1e-12, alpha=alpha),
        _check("negative weight magnitude", max(0.0, -float(E.min())), 0.0, alpha=alpha),
        _check("row sum deviation", np.max(np.abs(E.sum(axis=1) - 1.0)), 1e-14, alpha=alpha),
        _check("coefficient relation", rel_err, 1e-12, alpha=alpha),
    ]


def bezier_convergence(n: int, alphas=(1e-2, 1e-3, 1e-4), seed: int = SEED) -> tuple[list[float], float]:
    """Deviation between trig patch and its Bezier limit, and the fitted order."""
    rng = np.random.default_rng(seed)
    net = ControlNet.from_array(n, rng.normal(size=(delta(n), 3)))
    bary = rng.dirichlet([1.0, 1.0, 1.0], 400)
    limit = eval_bezier(to_bezier_limit(net), bary)
    errors = [
        float(np.max(np.abs(TrigPatch(net, make_table(n, a)).evaluate(bary * a) - limit)))
        for a in alphas
    ]
    slope = float(np.polyfit(np.log(alphas), np.log(errors), 1)[0])
    return errors, slope


def suite_bezier_limit(n: int = 2, alpha: float | None = None) -> list[dict]:
    out = []
    for order in (2, 3):
        sums_exact = all(sum(c.values()) == 1 for c in bezier_limit_weights(order).values())
        out.append({"check": f"weights sum to one (n={order})", "value": sums_exact, "passed": sums_exact})
        errors, slope = bezier_convergence(order)
        out.append(_check(f"convergence order deviation (n={order})", abs(slope - 2.0), 0.1,
                          errors=errors, slope=slope))
    return out


SUITES: dict[str, Callable[..., list[dict]]] = {
    "unity": suite_unity,
    "boundary": suite_boundary,
    "dimension": suite_dimension,
    "torus": suite_torus,
    "cyclide": suite_cyclide,
    "elevation": suite_elevation,
    "bezier-limit": suite_bezier_limit,
}


def verify(suite: str, n: int | None = None, alpha: float | None = None) -> dict:
    """Run one suite (or "all") and return {"suite", "passed", "checks"}."""
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        kwargs = {}
        if n is not None and name in ("unity", "boundary", "dimension"):
            kwargs["n"] = n
        if alpha is not None and name != "bezier-limit":
            kwargs["alpha"] = alpha
        for item in SUITES[name](**kwargs):
            checks.append({"suite": name, **item})
    return {"suite": suite, "passed": all(c["passed"] for c in checks), "checks": checks}
