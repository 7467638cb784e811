"""Command-line interface.

Subcommands:

* ``weil``   — evaluate E_k(a, W) by lattice summation and/or the
  integral representation.
* ``lerch``  — evaluate the Hurwitz-Lerch zeta by series and/or the
  integral representation.
* ``verify`` — run the seeded self-verification suites.
* ``grid``   — sample E_k over a rectangle of a-values as CSV.
* ``em2d``   — run the 2-D summation identity on a built-in test
  function and compare against brute force.

Exit codes: 0 success, 1 failed verification, 2 domain error,
3 convergence failure.  Every error prints a one-line JSON object
``{"error": <class>, "message": <text>}`` on stdout.

The environment variable LATZETA_PANEL_BUDGET overrides the quadrature
panel budget (see quadrature.panel_budget).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from .complexfmt import format_complex, parse_complex
from .em2d import (
    BRUTE_FORCE_POINT_BUDGET,
    Function2D,
    Rect,
    brute_force_sum_2d,
    em_sum_2d,
    integer_range,
)
from .errors import ConvergenceError, DomainError, PointOnLattice
from .lattice import lattice_coordinates, lattice_new
from .lerch import LerchParams, lerch_coffey, lerch_series
from .verify import SUITES, run_suite
from .weil import WeilParams, weil_direct, weil_integral

JSON_DIGITS = 17
CSV_DIGITS = 12

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sampling grid over the a-plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DomainError("grid bounds must satisfy min < max on both axes")
        if not (self.nx >= 1 and self.ny >= 1 and self.nx * self.ny <= 10**6):
            raise DomainError("grid size must satisfy 1 <= nx*ny <= 10^6")

    def points(self):
        """Row-major sample points, imaginary part as the outer index."""
        xs = np.linspace(self.re_min, self.re_max, self.nx)
        ys = np.linspace(self.im_min, self.im_max, self.ny)
        for y in ys:
            for x in xs:
                yield complex(x, y)


def _json_scalar(v) -> str:
    if isinstance(v, str):
        out = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), f".{JSON_DIGITS}g")
    if isinstance(v, complex):
        return _json_scalar(format_complex(v, JSON_DIGITS))
    raise TypeError(f"cannot serialize {type(v)}")


def _to_json(obj) -> str:
    """Tiny JSON serializer printing floats with 17 significant digits
    (the stdlib encoder offers no control over float formatting)."""
    if isinstance(obj, dict):
        items = ", ".join(f"{_json_scalar(str(k))}: {_to_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    return _json_scalar(obj)


def _emit_json(obj) -> None:
    print(_to_json(obj))


def _csv_num(x: float) -> str:
    return format(float(x), f".{CSV_DIGITS}g")


def _report_dict(rep, breakdown: bool) -> dict:
    d = {
        "value": rep.value,
        "method": rep.method,
        "err": rep.err,
    }
    if breakdown:
        d.update(
            {
                "j1": rep.j1,
                "j2": rep.j2,
                "j3": rep.j3,
                "row_correction": rep.row_correction,
                "eps_used": rep.eps_used,
            }
        )
    return d


def cmd_weil(args) -> int:
    lat = lattice_new(parse_complex(args.w1), parse_complex(args.w2))
    p = WeilParams(lat, parse_complex(args.a), args.k)
    out = {"w1": lat.w1, "w2": lat.w2, "a": p.a, "k": p.k}
    if args.method in ("direct", "both"):
        rep_d = weil_direct(p, tol=args.tol)
        out["direct"] = _report_dict(rep_d, False)
    if args.method in ("integral", "both"):
        rep_i = weil_integral(p, eps=args.eps, tol=args.tol)
        out["integral"] = _report_dict(rep_i, args.breakdown)
    if args.method == "both":
        out["difference"] = abs(rep_d.value - rep_i.value)
    if args.method == "direct":
        out["value"] = rep_d.value
    elif args.method == "integral":
        out["value"] = rep_i.value
    else:
        out["value"] = rep_d.value
    if args.csv:
        _emit_weil_csv(out, args)
    else:
        _emit_json(out)
    return EXIT_OK


def _emit_weil_csv(out: dict, args) -> None:
    w = csv.writer(sys.stdout)
    header = ["method", "re_value", "im_value", "err"]
    w.writerow(header)
    for method in ("direct", "integral"):
        if method in out:
            v = out[method]["value"]
            w.writerow([method, _csv_num(v.real), _csv_num(v.imag), _csv_num(out[method]["err"])])


def cmd_lerch(args) -> int:
    p = LerchParams(parse_complex(args.z), parse_complex(args.s), parse_complex(args.a))
    out = {"z": p.z, "s": p.s, "a": p.a}
    if args.method in ("series", "both"):
        v_s = lerch_series(p, tol=args.tol)
        out["series"] = v_s
    if args.method in ("coffey", "both"):
        v_c = lerch_coffey(p, tol=args.tol)
        out["coffey"] = v_c
    if args.method == "both":
        out["difference"] = abs(v_s - v_c)
        out["value"] = v_s
    else:
        out["value"] = v_s if args.method == "series" else v_c
    _emit_json(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, tol=args.tol)
    ok = all(c.passed for c in results)
    if args.json:
        _emit_json(
            {
                "suite": args.suite,
                "seed": args.seed,
                "tol": args.tol,
                "passed": ok,
                "checks": [
                    {
                        "suite": c.suite,
                        "name": c.name,
                        "error": c.error,
                        "tol": c.tol,
                        "passed": c.passed,
                    }
                    for c in results
                ],
            }
        )
    else:
        for c in results:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status}  {c.suite:6s} {c.name:40s} error={c.error:.3e}  tol={c.tol:.1e}")
        print(f"{'OK' if ok else 'FAILED'}: {sum(c.passed for c in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_grid(args) -> int:
    lat = lattice_new(parse_complex(args.w1), parse_complex(args.w2))
    spec = GridSpec(args.re_min, args.re_max, args.im_min, args.im_max, args.nx, args.ny)
    w = csv.writer(sys.stdout)
    w.writerow(["re_a", "im_a", "re_E", "im_E", "abs_E"])
    for a in spec.points():
        row = [_csv_num(a.real), _csv_num(a.imag)]
        try:
            p = WeilParams(lat, a, args.k)
        except PointOnLattice:
            w.writerow(row + ["", "", ""])
            continue
        v = weil_direct(p, tol=args.tol).value
        w.writerow(row + [_csv_num(v.real), _csv_num(v.imag), _csv_num(abs(v))])
    return EXIT_OK


def _registry() -> dict[str, Function2D]:
    """Built-in test functions with exact partial derivatives for the
    em2d subcommand."""

    def mk_poly():
        return Function2D(
            lambda x, y: x * x + y * y,
            lambda x, y: 2.0 * x,
            lambda x, y: 2.0 * y,
            lambda x, y: 0.0 * x * y,
        )

    def mk_wave():
        u, v = 1.0 / 3.0, 0.25
        return Function2D(
            lambda x, y: np.cos(u * x) * np.sin(v * y),
            lambda x, y: -u * np.sin(u * x) * np.sin(v * y),
            lambda x, y: v * np.cos(u * x) * np.cos(v * y),
            lambda x, y: -u * v * np.sin(u * x) * np.cos(v * y),
        )

    def mk_gauss():
        s = 1.0 / 64.0
        g = lambda x, y: np.exp(-s * (x * x + y * y))
        return Function2D(
            g,
            lambda x, y: -2.0 * s * x * g(x, y),
            lambda x, y: -2.0 * s * y * g(x, y),
            lambda x, y: 4.0 * s * s * x * y * g(x, y),
        )

    def mk_invcube():
        a0 = 0.5 + 0.3j
        b = lambda x, y: a0 + x + 1j * y
        return Function2D(
            lambda x, y: b(x, y) ** -3,
            lambda x, y: -3.0 * b(x, y) ** -4,
            lambda x, y: -3.0j * b(x, y) ** -4,
            lambda x, y: 12.0j * b(x, y) ** -5,
        )

    return {"poly": mk_poly(), "wave": mk_wave(), "gauss": mk_gauss(), "invcube": mk_invcube()}


def cmd_em2d(args) -> int:
    reg = _registry()
    if args.phi not in reg:
        raise DomainError(f"unknown test function {args.phi!r}; choose from {sorted(reg)}")
    f = reg[args.phi]
    r = Rect(args.alpha1, args.beta1, args.alpha2, args.beta2)
    br = em_sum_2d(f, r, tol=args.tol)
    out = {
        "phi": args.phi,
        "rect": [r.alpha1, r.beta1, r.alpha2, r.beta2],
        "i1": br.i1,
        "i2": br.i2,
        "i3": br.i3,
        "i4": br.i4,
        "total": br.total,
        "err": br.err,
    }
    n_points = len(integer_range(r.alpha1, r.beta1)) * len(integer_range(r.alpha2, r.beta2))
    if n_points <= BRUTE_FORCE_POINT_BUDGET:
        bf = brute_force_sum_2d(f.phi, r)
        out["brute_force"] = bf
        out["difference"] = abs(br.total - bf)
    _emit_json(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latzeta", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    pw = sub.add_parser("weil", help="evaluate E_k(a, W)")
    pw.add_argument("--w1", required=True, help='first lattice generator, "a+bi"')
    pw.add_argument("--w2", required=True, help='second lattice generator, "a+bi"')
    pw.add_argument("--a", required=True, help='evaluation point, "a+bi"')
    pw.add_argument("--k", type=int, required=True, help="exponent, integer >= 1")
    pw.add_argument("--method", choices=("direct", "integral", "both"), default="direct")
    pw.add_argument("--eps", type=float, default=0.25, help="band half-width for the integral path")
    pw.add_argument("--tol", type=float, default=1e-8)
    pw.add_argument("--breakdown", action="store_true", help="include J1, J2, J3, row_correction")
    fmt = pw.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true", default=False)
    pw.set_defaults(func=cmd_weil)

    pl = sub.add_parser("lerch", help="evaluate the Hurwitz-Lerch zeta")
    pl.add_argument("--z", required=True)
    pl.add_argument("--s", required=True)
    pl.add_argument("--a", required=True)
    pl.add_argument("--method", choices=("series", "coffey", "both"), default="series")
    pl.add_argument("--tol", type=float, default=1e-8)
    pl.set_defaults(func=cmd_lerch)

    pv = sub.add_parser("verify", help="run self-verification suites")
    pv.add_argument("--suite", choices=SUITES + ("all",), default="all")
    pv.add_argument("--seed", type=int, default=42)
    pv.add_argument("--tol", type=float, default=1e-8)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("grid", help="sample E_k over a grid of a-values (CSV)")
    pg.add_argument("--w1", required=True)
    pg.add_argument("--w2", required=True)
    pg.add_argument("--k", type=int, required=True)
    pg.add_argument("--re-min", type=float, required=True, dest="re_min")
    pg.add_argument("--re-max", type=float, required=True, dest="re_max")
    pg.add_argument("--im-min", type=float, required=True, dest="im_min")
    pg.add_argument("--im-max", type=float, required=True, dest="im_max")
    pg.add_argument("--nx", type=int, required=True)
    pg.add_argument("--ny", type=int, required=True)
    pg.add_argument("--tol", type=float, default=1e-8)
    pg.set_defaults(func=cmd_grid)

    pe = sub.add_parser("em2d", help="run the 2-D summation identity on a test function")
    pe.add_argument("--phi", required=True, help="registry name: poly, wave, gauss, invcube")
    pe.add_argument("--alpha1", type=float, required=True)
    pe.add_argument("--beta1", type=float, required=True)
    pe.add_argument("--alpha2", type=float, required=True)
    pe.add_argument("--beta2", type=float, required=True)
    pe.add_argument("--tol", type=float, default=1e-9)
    pe.set_defaults(func=cmd_em2d)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        _emit_json({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        _emit_json({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_CONVERGENCE
    except ValueError as exc:
        _emit_json({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
