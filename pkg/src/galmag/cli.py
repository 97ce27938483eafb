"""Command-line surface: solve, verify and inspect trajectories.

Sample data goes to stdout (or --output); diagnostics go to stderr so
pipelines stay clean.  Exit codes: 0 success, 1 verification failed,
2 invalid input (with a one-line ``error: <reason>`` on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import nullcontext
from functools import partial

import numpy as np

from galmag import frenet
from galmag.errors import GalmagError, IncompatibleIC, NonFiniteState, ZeroCurvature
from galmag.galilean import norm
from galmag.magnetic import (
    KillingField,
    MagneticIC,
    NMagneticIC,
    helix_decomposition,
    lorentz_residual,
    magnetic_rhs,
    n_magnetic_residual,
    n_magnetic_rhs,
    solve_magnetic,
    solve_n_magnetic,
)
from galmag.oracle import IntegratorConfig, _grid_points, integrate, max_deviation

DEFAULT_TOLERANCE = 1e-9
DEFAULT_RK4_STEP = 1e-3
DEFAULT_SAMPLES = 201
VERIFY_SAMPLES = 1000

_MAGNETIC_KEYS = ("y0", "Y0", "z0", "Z0")
_NMAGNETIC_KEYS = ("y0", "Y0", "T0", "z0", "Z0", "U0")


class _CliError(Exception):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        self.detail = detail
        super().__init__(reason)

    def line(self) -> str:
        if self.detail:
            return f"error: {self.reason} ({self.detail})"
        return f"error: {self.reason}"


class _Parser(argparse.ArgumentParser):
    # one-line machine-readable reason instead of argparse's usage dump
    def error(self, message):
        print(f"error: invalid-flags ({message})", file=sys.stderr)
        raise SystemExit(2)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _build_parser() -> _Parser:
    parser = _Parser(prog="galmag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--mode", choices=("magnetic", "nmagnetic"), required=True)
        p.add_argument("--v", help="field coefficients v1,v2,v3 (default 0,0,0)")
        p.add_argument("--v1", type=float, help="override first field coefficient")
        p.add_argument("--v2", type=float, help="override second field coefficient")
        p.add_argument("--v3", type=float, help="override third field coefficient")
        p.add_argument(
            "--ic",
            default="",
            help="initial data as key=value list, e.g. y0=1,Y0=5,z0=4,Z0=3 "
            "(nmagnetic adds T0,U0; missing keys default to 0)",
        )
        p.add_argument(
            "--range",
            required=True,
            dest="srange",
            help="parameter window start:end[:step]",
        )

    def add_output(p):
        p.add_argument("--samples", type=int, help="sample count (alternative to a range step)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="output path (default stdout)")

    p_solve = sub.add_parser("solve", help="emit closed-form trajectory samples")
    add_common(p_solve)
    add_output(p_solve)

    p_verify = sub.add_parser("verify", help="cross-check the closed form against RK4")
    add_common(p_verify)
    p_verify.add_argument(
        "--step", type=float, default=DEFAULT_RK4_STEP, help="RK4 step (default 1e-3)"
    )
    p_verify.add_argument(
        "--tolerance",
        type=float,
        help="pass threshold for every reported metric "
        "(default $GALMAG_TOL or 1e-9)",
    )

    p_frenet = sub.add_parser("frenet", help="emit per-sample Frenet frame data")
    add_common(p_frenet)
    add_output(p_frenet)
    return parser


def _parse_field(args) -> KillingField:
    v = [0.0, 0.0, 0.0]
    if args.v is not None:
        parts = args.v.split(",")
        if len(parts) != 3:
            raise _CliError("invalid-field", f"--v expects v1,v2,v3, got {args.v!r}")
        try:
            v = [float(p) for p in parts]
        except ValueError:
            raise _CliError("invalid-field", f"non-numeric component in {args.v!r}")
    for i, override in enumerate((args.v1, args.v2, args.v3)):
        if override is not None:
            v[i] = override
    return KillingField(*v)


def _parse_ic(args):
    keys = _MAGNETIC_KEYS if args.mode == "magnetic" else _NMAGNETIC_KEYS
    values = {k: 0.0 for k in keys}
    text = args.ic.strip()
    if text:
        for item in text.split(","):
            if "=" not in item:
                raise _CliError("invalid-ic", f"expected key=value, got {item!r}")
            key, _, raw = item.partition("=")
            key = key.strip()
            if key not in values:
                raise _CliError("invalid-ic", f"unknown key {key!r} for mode {args.mode}")
            try:
                values[key] = float(raw)
            except ValueError:
                raise _CliError("invalid-ic", f"non-numeric value in {item!r}")
    if args.mode == "magnetic":
        return MagneticIC(**values)
    return NMagneticIC(**values)


def _parse_range(args) -> tuple[float, float, float | None]:
    parts = args.srange.split(":")
    if len(parts) not in (2, 3):
        raise _CliError("invalid-range", f"expected start:end[:step], got {args.srange!r}")
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise _CliError("invalid-range", f"non-numeric component in {args.srange!r}")
    s_start, s_end = numbers[0], numbers[1]
    step = numbers[2] if len(parts) == 3 else None
    if not s_end > s_start:
        raise _CliError("invalid-range", "end must exceed start")
    if step is not None and not step > 0.0:
        raise _CliError("invalid-range", "step must be positive")
    return s_start, s_end, step


def _sample_grid(args) -> np.ndarray:
    s_start, s_end, step = _parse_range(args)
    samples = getattr(args, "samples", None)
    if step is not None and samples is not None:
        raise _CliError("invalid-flags", "give either a range step or --samples, not both")
    if step is not None:
        return np.asarray(_grid_points(IntegratorConfig(s_start, s_end, step)))
    if samples is None:
        samples = DEFAULT_SAMPLES
    if samples < 2:
        raise _CliError("invalid-flags", "--samples must be at least 2")
    return np.linspace(s_start, s_end, samples)


def _solve_curve(args):
    field = _parse_field(args)
    ic = _parse_ic(args)
    if args.mode == "magnetic":
        return solve_magnetic(field, ic)
    return solve_n_magnetic(field, ic)


def _curve_tau(curve, s: float) -> float | None:
    if curve.kappa0 == 0.0:
        return None
    return frenet.torsion(curve, s)


def _diagnostics(curve, s0: float) -> list[str]:
    tau = _curve_tau(curve, s0)
    lines = [
        f"case: {curve.case.value}",
        f"kappa: {_fmt(curve.kappa0)}",
        f"tau: {'nan' if tau is None else _fmt(tau)}",
    ]
    if curve.case.is_helix:
        helix = helix_decomposition(curve)
        lines.append(f"helix radius: {_fmt(helix.r)}")
        lines.append(
            f"helix axis: y = {_fmt(helix.a)}*s + {_fmt(helix.b)}, "
            f"z = {_fmt(helix.c)}*s + {_fmt(helix.d)}"
        )
    return lines


def _open_output(args):
    if getattr(args, "output", None):
        return open(args.output, "w")
    return nullcontext(sys.stdout)


def _cmd_solve(args) -> int:
    curve = _solve_curve(args)
    grid = _sample_grid(args)
    for line in _diagnostics(curve, float(grid[0])):
        print(line, file=sys.stderr)
    rows = [
        (s, s, curve.y.eval(s, 0), curve.z.eval(s, 0)) for s in (float(g) for g in grid)
    ]
    with _open_output(args) as out:
        if args.format == "csv":
            out.write("s,x,y,z\n")
            for row in rows:
                out.write(",".join(_fmt(v) for v in row) + "\n")
        else:
            tau = _curve_tau(curve, float(grid[0]))
            helix = None
            if curve.case.is_helix:
                h = helix_decomposition(curve)
                helix = {"r": h.r, "line": {"a": h.a, "b": h.b, "c": h.c, "d": h.d}}
            doc = {
                "case": curve.case.value,
                "kappa": curve.kappa0,
                "tau": tau,
                "helix": helix,
                "samples": [list(row) for row in rows],
            }
            json.dump(doc, out)
            out.write("\n")
    return 0


def _cmd_frenet(args) -> int:
    curve = _solve_curve(args)
    grid = _sample_grid(args)
    for s in grid:
        if frenet.curvature(curve, float(s)) == 0.0:
            raise _CliError("zero-curvature", f"kappa vanishes at s = {_fmt(s)}")
    frames = [(float(s), frenet.frenet_frame(curve, float(s))) for s in grid]
    with _open_output(args) as out:
        if args.format == "csv":
            out.write("s,t1,t2,t3,n1,n2,n3,b1,b2,b3,kappa,tau\n")
            for s, f in frames:
                row = (s, *f.T.as_tuple(), *f.N.as_tuple(), *f.B.as_tuple(), f.kappa, f.tau)
                out.write(",".join(_fmt(v) for v in row) + "\n")
        else:
            doc = {
                "case": curve.case.value,
                "samples": [
                    {
                        "s": s,
                        "T": list(f.T.as_tuple()),
                        "N": list(f.N.as_tuple()),
                        "B": list(f.B.as_tuple()),
                        "kappa": f.kappa,
                        "tau": f.tau,
                    }
                    for s, f in frames
                ],
            }
            json.dump(doc, out)
            out.write("\n")
    return 0


def _verify_tolerance(args) -> float:
    if args.tolerance is not None:
        tol = args.tolerance
    else:
        raw = os.environ.get("GALMAG_TOL")
        if raw is None:
            tol = DEFAULT_TOLERANCE
        else:
            try:
                tol = float(raw)
            except ValueError:
                raise _CliError("invalid-tolerance", f"GALMAG_TOL = {raw!r} is not a number")
    if tol < 0.0:
        raise _CliError("invalid-tolerance", "tolerance must be non-negative")
    return tol


def _cmd_verify(args) -> int:
    tol = _verify_tolerance(args)
    curve = _solve_curve(args)
    s_start, s_end, _ = _parse_range(args)
    ic = curve.ic
    if args.mode == "magnetic":
        rhs = partial(magnetic_rhs, curve.field)
        initial = (ic.y0, ic.z0, ic.Y0, ic.Z0)
        residual_at = partial(lorentz_residual, curve)
    else:
        rhs = partial(n_magnetic_rhs, curve.field, ic.kappa0)
        initial = (ic.y0, ic.z0, ic.Y0, ic.Z0, ic.T0, ic.U0)
        residual_at = partial(n_magnetic_residual, curve)

    sampled = integrate(rhs, initial, IntegratorConfig(s_start, s_end, args.step))
    deviation = max_deviation(curve, sampled)

    probes = np.linspace(s_start, s_end, VERIFY_SAMPLES)
    residual = max(residual_at(float(s)) for s in probes)
    kappas = [frenet.curvature(curve, float(s)) for s in probes]
    curvature_spread = max(kappas) - min(kappas)

    metrics = {
        "deviation": deviation,
        "residual": residual,
        "curvature_spread": curvature_spread,
    }
    lines = [
        f"case = {curve.case.value}",
        f"kappa = {_fmt(curve.kappa0)}",
    ]
    tau = _curve_tau(curve, s_start)
    lines.append(f"tau = {'nan' if tau is None else _fmt(tau)}")
    if curve.case.is_helix:
        helix = helix_decomposition(curve)
        spread = max(
            abs(norm(curve.eval(float(s), 0) - helix.point(float(s))) - helix.r)
            for s in probes
        )
        metrics["helix_spread"] = spread
        lines.append(f"helix_r = {_fmt(helix.r)}")
    for key, value in metrics.items():
        lines.append(f"{key} = {_fmt(value)}")
    ok = all(value < tol for value in metrics.values())
    lines.append(f"tolerance = {_fmt(tol)}")
    lines.append(f"status = {'pass' if ok else 'fail'}")
    print("\n".join(lines))
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_frenet(args)
    except _CliError as exc:
        print(exc.line(), file=sys.stderr)
        return 2
    except IncompatibleIC as exc:
        print(f"error: incompatible-ic ({exc})", file=sys.stderr)
        return 2
    except ZeroCurvature as exc:
        print(f"error: zero-curvature ({exc})", file=sys.stderr)
        return 2
    except NonFiniteState as exc:
        print(f"error: nonfinite-state ({exc})", file=sys.stderr)
        return 2
    except GalmagError as exc:
        print(f"error: invalid-input ({exc})", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid-input ({exc})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
