"""Small dense least-squares helpers built on Householder QR."""
from __future__ import annotations

import numpy as np
from scipy import linalg

from .exceptions import SingularSystemError

#: a pivot below this fraction of the largest one marks rank deficiency
RANK_RTOL = 1e-12


def lstsq_qr(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve min ||A x - b|| by column-scaled, column-pivoted QR.

    ``b`` may be a vector or a matrix of right-hand sides.  Raises
    SingularSystemError when the scaled matrix is numerically rank deficient.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    if A.shape[0] < A.shape[1]:
        raise SingularSystemError(
            f"underdetermined system: {A.shape[0]} equations for {A.shape[1]} unknowns"
        )
    scale = np.linalg.norm(A, axis=0)
    if np.any(scale == 0.0):
        raise SingularSystemError("collocation matrix has an identically zero column")
    q, r, perm = linalg.qr(A / scale, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag[-1] <= RANK_RTOL * diag[0]:
        rank = int(np.sum(diag > RANK_RTOL * diag[0]))
        raise SingularSystemError(f"rank {rank} < {A.shape[1]} unknowns")
    y = linalg.solve_triangular(r, q.T @ b)
    x = np.empty_like(y)
    x[perm] = y
    return x / (scale if x.ndim == 1 else scale[:, None])


def numerical_rank(A: np.ndarray, rtol: float) -> int:
    """Count singular values above ``rtol * sigma_max``."""
    sv = np.linalg.svd(np.asarray(A, dtype=float), compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rtol * sv[0]))
