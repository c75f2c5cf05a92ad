"""Triangulated barycentric lattice meshes and OBJ export."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .patches import finite_difference_normal

__all__ = ["Mesh", "lattice", "tessellate", "write_obj", "format_float"]


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray
    faces: np.ndarray
    normals: np.ndarray | None = None

    def __post_init__(self):
        if self.faces.size and (self.faces.min() < 0 or self.faces.max() >= len(self.vertices)):
            raise DomainError("face indices out of range")


def lattice(K: int):
    """(a, b) lattice with a + b <= K and its counterclockwise triangles."""
    if int(K) != K or K < 1:
        raise DomainError(f"subdivision must be a positive integer, got {K!r}")
    K = int(K)
    ab = [(a, b) for a in range(K + 1) for b in range(K + 1 - a)]
    pos = {p: k for k, p in enumerate(ab)}
    faces = []
    for a in range(K):
        for b in range(K - a):
            faces.append((pos[a, b], pos[a + 1, b], pos[a, b + 1]))
            if a + b + 2 <= K:
                faces.append((pos[a + 1, b], pos[a + 1, b + 1], pos[a, b + 1]))
    return np.array(ab, dtype=float), np.array(faces, dtype=int)


def tessellate(patch, K: int, normals: bool = False) -> Mesh:
    """Evaluate the patch on the lattice u = alpha a/K, v = alpha b/K."""
    ab, faces = lattice(K)
    uv = ab * (patch.alpha / K)
    vertices = patch.evaluate(uv)
    nrm = finite_difference_normal(patch, uv) if normals else None
    return Mesh(vertices, faces, nrm)


def format_float(x: float) -> str:
    """Shortest round-trip decimal representation."""
    return repr(float(x))


def write_obj(mesh: Mesh, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in mesh.vertices:
            fh.write("v " + " ".join(format_float(c) for c in v) + "\n")
        if mesh.normals is not None:
            for v in mesh.normals:
                fh.write("vn " + " ".join(format_float(c) for c in v) + "\n")
        for f in mesh.faces + 1:
            if mesh.normals is not None:
                fh.write("f " + " ".join(f"{k}//{k}" for k in f) + "\n")
            else:
                fh.write("f " + " ".join(str(k) for k in f) + "\n")
