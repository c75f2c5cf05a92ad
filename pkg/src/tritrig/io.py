"""JSON file formats for control nets and Bezier limit nets.

Control-net file::

    {"order": 2, "alpha": 1.5707963267948966,
     "points": [{"family": "R", "i": 0, "j": 0, "xyz": [x, y, z]}, ...],
     "weights": [{"family": "R", "i": 0, "j": 0, "w": 1.0}, ...],   # optional
     "center": [x, y, z]}                                          # optional

``family`` is one of "R", "G", "B", "Center" and ``i`` is the loop index
used throughout the library.  ``center`` is shorthand for the Center record
and may replace it.  Bezier files carry ``degree`` and records
``{"d", "e", "f", "xyz"}``.  Floats are written in shortest round-trip form.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .elevation import BezierTriangleNet
from .exceptions import ConfigurationError
from .patches import ControlNet, WeightNet
from .trivariate_basis import CENTER, BasisIndex

__all__ = ["net_to_dict", "net_from_dict", "read_net", "write_net", "bezier_to_dict", "read_bezier", "write_bezier"]


def _xyz(p) -> list[float]:
    return [float(x) for x in p]


def net_to_dict(net: ControlNet, alpha: float, weights: WeightNet | None = None) -> dict:
    doc = {
        "order": net.order,
        "alpha": float(alpha),
        "points": [
            {"family": idx.family, "i": idx.i, "j": idx.j, "xyz": _xyz(p)}
            for idx, p in net.points.items()
        ],
    }
    if weights is not None:
        doc["weights"] = [
            {"family": idx.family, "i": idx.i, "j": idx.j, "w": float(w)}
            for idx, w in weights.weights.items()
        ]
    return doc


def _key(record: dict) -> BasisIndex:
    try:
        return BasisIndex(str(record["family"]), int(record["i"]), int(record["j"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"malformed record {record!r}") from exc


def net_from_dict(doc: dict) -> tuple[ControlNet, float, WeightNet | None]:
    try:
        order = int(doc["order"])
        alpha = float(doc["alpha"])
        records = list(doc["points"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError("net file needs 'order', 'alpha' and 'points'") from exc
    points = {}
    for rec in records:
        key = _key(rec)
        if key in points:
            raise ConfigurationError(f"duplicate record for {key}")
        points[key] = rec.get("xyz")
    if "center" in doc:
        key = BasisIndex(CENTER, order, order)
        if key in points:
            raise ConfigurationError("center given both as shorthand and as a record")
        points[key] = doc["center"]
    net = ControlNet(order, points)
    weights = None
    if doc.get("weights") is not None:
        weights = WeightNet(order, {_key(rec): rec["w"] for rec in doc["weights"]})
    return net, alpha, weights


def read_net(path) -> tuple[ControlNet, float, WeightNet | None]:
    with open(Path(path), encoding="utf-8") as fh:
        return net_from_dict(json.load(fh))


def write_net(path, net: ControlNet, alpha: float, weights: WeightNet | None = None) -> None:
    with open(Path(path), "w", encoding="utf-8") as fh:
        json.dump(net_to_dict(net, alpha, weights), fh, indent=1)
        fh.write("\n")


def bezier_to_dict(net: BezierTriangleNet) -> dict:
    return {
        "degree": net.degree,
        "points": [
            {"d": d, "e": e, "f": f, "xyz": _xyz(p)} for (d, e, f), p in net.points.items()
        ],
    }


def read_bezier(path) -> BezierTriangleNet:
    with open(Path(path), encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        pts = {(int(r["d"]), int(r["e"]), int(r["f"])): np.asarray(r["xyz"], dtype=float) for r in doc["points"]}
        return BezierTriangleNet(int(doc["degree"]), pts)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError("malformed Bezier net file") from exc


def write_bezier(path, net: BezierTriangleNet) -> None:
    with open(Path(path), "w", encoding="utf-8") as fh:
        json.dump(bezier_to_dict(net), fh, indent=1)
        fh.write("\n")
