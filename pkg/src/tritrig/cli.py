"""Command line interface: ``tritrig <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import io
from .elevation import elevate_1_to_2, to_bezier_limit
from .exceptions import TritrigError
from .geometries import CyclideParams, TorusParams, cyclide_denominator, cyclide_patch, torus_net, torus_point
from .mesh import format_float, tessellate, write_obj
from .normalization import closed_form_table, make_table, solve_table
from .patches import RationalTrigPatch, TrigPatch
from .span_analysis import build_V, fit_in_span
from .trivariate_basis import delta, eval_system, index_list
from .univariate import eval_all, make_univariate
from .verify import SUITES, verify

__all__ = ["main", "build_parser", "FIT_TARGETS"]


def _f(x) -> str:
    return format_float(x)


def _point(text: str) -> tuple[float, float]:
    try:
        u, v = (float(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}") from exc
    return u, v


def _alpha(text: str) -> float:
    """Accept plain numbers and the shorthands 'pi', 'pi/2', '3pi/2', ..."""
    t = text.strip().lower()
    try:
        if "pi" in t:
            head, rest = t.split("pi", 1)
            value = math.pi * float(head or 1)
            return value / float(rest[1:]) if rest.startswith("/") else value * float(rest or 1)
        return float(t)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from exc


def _load_patch(path):
    net, alpha, weights = io.read_net(path)
    table = make_table(net.order, alpha)
    if weights is None:
        return TrigPatch(net, table)
    return RationalTrigPatch(net, table, weights)


def cmd_basis(args) -> int:
    basis = make_univariate(args.n, args.alpha)
    if args.t is None:
        print("i,c")
        for i, c in enumerate(basis.coeffs):
            print(f"{i},{_f(c)}")
    else:
        print("i,c,value")
        for i, (c, val) in enumerate(zip(basis.coeffs, eval_all(basis, args.t))):
            print(f"{i},{_f(c)},{_f(val)}")
    return 0


def cmd_eval_basis(args) -> int:
    values = eval_system(args.n, args.alpha, [args.point])[0]
    if args.normalized:
        values = values * make_table(args.n, args.alpha).expanded()
    print("family,i,j,value")
    for idx, val in zip(index_list(args.n), values):
        print(f"{idx.family},{idx.i},{idx.j},{_f(val)}")
    return 0


def cmd_coeffs(args) -> int:
    table = closed_form_table(args.n, args.alpha) if args.closed_form else (
        make_table(args.n, args.alpha, args.tol) if not args.solve else solve_table(args.n, args.alpha, args.tol)
    )
    if args.full:
        print("family,i,j,value")
        for idx, val in zip(index_list(args.n), table.expanded()):
            print(f"{idx.family},{idx.i},{idx.j},{_f(val)}")
    else:
        print("j,i,value")
        for j, i, val in table.rows():
            print(f"{j},{i},{_f(val)}")
    return 0


def cmd_dim(args) -> int:
    V = build_V(args.n)
    print(f"delta,{delta(args.n)}")
    print("step,class,canonical")
    for cls in V.classes:
        print(f"{cls.step},{cls.label.label()},{'/'.join(map(str, cls.canonical))}")
    return 0


def cmd_eval(args) -> int:
    patch = _load_patch(args.net)
    x, y, z = patch.evaluate([args.point])[0]
    print(f"{_f(x)},{_f(y)},{_f(z)}")
    return 0


def cmd_mesh(args) -> int:
    patch = _load_patch(args.net)
    mesh = tessellate(patch, args.subdiv, normals=args.normals)
    write_obj(mesh, args.out)
    print(f"vertices,{len(mesh.vertices)}")
    print(f"faces,{len(mesh.faces)}")
    return 0


def _fit_targets(args) -> dict:
    torus = TorusParams(args.rho, args.mu)
    return {
        "one": lambda u, v, w: np.ones_like(u),
        "cos-u": lambda u, v, w: np.cos(u),
        "sin-v": lambda u, v, w: np.sin(v),
        "cos-u-minus-v": lambda u, v, w: np.cos(u - v),
        "torus-x": lambda u, v, w: torus_point(torus, u, v)[:, 0],
        "torus-y": lambda u, v, w: torus_point(torus, u, v)[:, 1],
        "torus-z": lambda u, v, w: torus_point(torus, u, v)[:, 2],
        "cyclide-denominator": lambda u, v, w: cyclide_denominator(
            CyclideParams.from_abc(6.0, 2.0, 3.0), u, v
        ),
        "out-of-span": lambda u, v, w: np.cos(5 * u) * np.exp(v),
    }


FIT_TARGETS = (
    "one", "cos-u", "sin-v", "cos-u-minus-v", "torus-x", "torus-y", "torus-z",
    "cyclide-denominator", "out-of-span",
)


def cmd_fit(args) -> int:
    table = make_table(args.n, args.alpha)
    result = fit_in_span(args.n, args.alpha, _fit_targets(args)[args.target], table, args.tol)
    print("family,i,j,coordinate")
    for idx, c in zip(index_list(args.n), result.coords):
        print(f"{idx.family},{idx.i},{idx.j},{_f(c)}")
    print(f"residual,{_f(result.residual)}")
    print(f"in_span,{str(result.in_span).lower()}")
    return 0 if result.in_span else 1


def cmd_net(args) -> int:
    if args.kind == "torus":
        net = torus_net(TorusParams(args.rho, args.mu), args.alpha)
        io.write_net(args.out, net, args.alpha)
    else:
        b = args.b if args.b is not None else math.sqrt(args.a**2 - args.c**2)
        params = CyclideParams(args.a, b, args.c, args.mu, args.phi, args.psi)
        patch = cyclide_patch(params, args.alpha)
        io.write_net(args.out, patch.net, args.alpha, patch.wnet)
    print(f"wrote,{args.out}")
    return 0


def cmd_elevate(args) -> int:
    net, alpha, weights = io.read_net(args.net)
    if weights is not None:
        raise TritrigError("elevation is defined for non-rational nets only")
    io.write_net(args.out, elevate_1_to_2(net, alpha), alpha)
    print(f"wrote,{args.out}")
    return 0


def cmd_bezier_limit(args) -> int:
    net, _, weights = io.read_net(args.net)
    if weights is not None:
        raise TritrigError("the Bezier limit is defined for non-rational nets only")
    io.write_bezier(args.out, to_bezier_limit(net))
    print(f"wrote,{args.out}")
    return 0


def cmd_verify(args) -> int:
    report = verify(args.suite, n=args.n, alpha=args.alpha)
    print(json.dumps(report, indent=1, default=str))
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tritrig", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("basis", cmd_basis, "univariate coefficients and values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--t", type=float)

    p = add("eval-basis", cmd_eval_basis, "trivariate basis values at a point (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--point", type=_point, required=True)
    p.add_argument("--normalized", action="store_true", help="multiply by the normalizing coefficients")

    p = add("coeffs", cmd_coeffs, "normalizing coefficient table (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--closed-form", action="store_true")
    group.add_argument("--solve", action="store_true", help="force the collocation solver")
    p.add_argument("--full", action="store_true", help="emit all delta(n) coefficients")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("dim", cmd_dim, "dimension and equivalence classes")
    p.add_argument("--n", type=int, required=True)

    p = add("eval", cmd_eval, "evaluate a patch file at a point")
    p.add_argument("--net", required=True)
    p.add_argument("--point", type=_point, required=True)

    p = add("mesh", cmd_mesh, "tessellate a patch file into an OBJ mesh")
    p.add_argument("--net", required=True)
    p.add_argument("--subdiv", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--normals", action="store_true")

    p = add("fit", cmd_fit, "coordinates of a builtin function in the blending system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--target", choices=FIT_TARGETS, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--rho", type=float, default=4.0)
    p.add_argument("--mu", type=float, default=1.5)

    p = add("net", cmd_net, "write an exact control net file")
    p.add_argument("kind", choices=("torus", "cyclide"))
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--rho", type=float, default=3 * (1 + math.sqrt(5)) / 2)
    p.add_argument("--mu", type=float, default=3.0)
    p.add_argument("--a", type=float, default=6.0)
    p.add_argument("--b", type=float)
    p.add_argument("--c", type=float, default=2.0)
    p.add_argument("--phi", type=_alpha, default=0.0)
    p.add_argument("--psi", type=_alpha, default=0.0)

    p = add("elevate", cmd_elevate, "elevate an order-1 net to order 2")
    p.add_argument("--net", required=True)
    p.add_argument("--out", required=True)

    p = add("bezier-limit", cmd_bezier_limit, "Bezier net of the alpha -> 0 limit")
    p.add_argument("--net", required=True)
    p.add_argument("--out", required=True)

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=_alpha)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TritrigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
