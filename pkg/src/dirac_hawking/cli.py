"""Command-line front end.

Exit codes: 0 success, 2 invalid arguments, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

import numpy as np

from . import analysis, sweep
from .channel import HawkingParams, hawking_channel
from .states import MAXIMAL_ALPHA, WernerParams, werner_state

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE = 0, 1, 2

BASIS_LABELS = ("|00>", "|01>", "|10>", "|11>")


class UsageError(Exception):
    pass


def _add_temperature(parser: argparse.ArgumentParser, default: float | None) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("-T", "--temperature", type=float, default=None,
                       help=f"Hawking temperature (default {default})" if default is not None
                       else "Hawking temperature")
    group.add_argument("-M", "--mass", type=float, default=None,
                       help="black-hole mass; T = 1/(8 pi M)")
    parser.set_defaults(default_temperature=default)


def _temperature(args) -> float | None:
    if args.temperature is not None or args.mass is not None:
        return args.temperature
    if args.default_temperature is None:
        raise UsageError("one of --temperature or --mass is required")
    return args.default_temperature


def point_report(F: float, alpha: float, p: HawkingParams) -> dict:
    """Everything ``point`` prints, as plain Python values."""
    rho = hawking_channel(werner_state(WernerParams(F, alpha)), p)
    numeric = analysis.pt_spectrum_numeric(rho)
    closed = sorted(analysis.pt_eigs_generic(F, alpha, p.omega, p.temperature))
    threshold = analysis.threshold_closed_form(p.omega, p.temperature)
    report = {
        "F": F,
        "alpha": alpha,
        "omega": p.omega,
        "T": p.temperature,
        "M": p.mass,
        "rho_AI": np.real_if_close(rho.data).real.tolist(),
        "pt_eigenvalues_numeric": list(numeric.eigenvalues),
        "pt_eigenvalues_closed_form": closed,
        "min_pt_eigenvalue": numeric.min_eigenvalue,
        "log_negativity": numeric.negativity_log2,
        "tau": threshold.tau,
        "entangled": numeric.entangled,
    }
    if alpha == MAXIMAL_ALPHA:
        report["pt_eigenvalues_closed_form_maximal"] = sorted(
            analysis.pt_eigs_maximal(F, p.omega, p.temperature)
        )
    return report


def _print_report(r: dict, out) -> None:
    fmt = sweep.NUMBER_FORMAT
    mass = "" if r["M"] is None else f" (M={r['M']:g})"
    out.write(f"F={r['F']:g} alpha={r['alpha']:g} omega={r['omega']:g} T={r['T']:g}{mass}\n")
    out.write("rho_AI in basis " + " ".join(BASIS_LABELS) + ":\n")
    for row in r["rho_AI"]:
        out.write("  " + "  ".join(fmt % v for v in row) + "\n")
    out.write("PT eigenvalues, numeric:     " + "  ".join(fmt % v for v in r["pt_eigenvalues_numeric"]) + "\n")
    out.write("PT eigenvalues, closed form: " + "  ".join(fmt % v for v in r["pt_eigenvalues_closed_form"]) + "\n")
    out.write(f"log negativity: {fmt % r['log_negativity']}\n")
    out.write(f"threshold tau:  {fmt % r['tau']}\n")
    out.write(f"verdict: {'entangled' if r['entangled'] else 'separable'}\n")


def cmd_point(args, out) -> None:
    p = HawkingParams(args.omega, temperature=_temperature(args), mass=args.mass)
    report = point_report(args.F, args.alpha, p)
    if args.json:
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        _print_report(report, out)


def _single_axis(args, default: sweep.Axis) -> sweep.Axis:
    if not args.grid:
        return default
    if len(args.grid) > 1:
        raise UsageError("this command takes a single --grid")
    return sweep.parse_axis(args.grid[0], default.name)


def cmd_fig1(args, out) -> None:
    sweep.write_csv(sweep.fig1_grid(_single_axis(args, sweep.FIG1_AXIS), args.omega), out)


def cmd_fig2(args, out) -> None:
    sweep.write_csv(sweep.fig2_grid(
        _single_axis(args, sweep.FIG2_AXIS), _temperature(args), args.mass
    ), out)


def cmd_fig3(args, out) -> None:
    axes = {a.name: a for a in sweep.FIG3_AXES}
    for text in args.grid or ():
        a = sweep.parse_axis(text)
        axes[a.name] = a
    grid = sweep.fig3_grid(list(axes.values()), args.omega, _temperature(args), args.mass)
    sweep.write_csv(grid, out)


def _parse_assignment(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise UsageError(f"--set expects NAME=VALUE, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise UsageError(f"--set {name}: {value!r} is not a number") from None


def cmd_sweep(args, out) -> None:
    if not args.grid:
        raise UsageError("sweep needs at least one --grid NAME=start:stop:count")
    axes = [sweep.parse_axis(text) for text in args.grid]
    fixed = dict(_parse_assignment(t) for t in args.set or ())
    outputs = [o.strip() for o in args.outputs.split(",") if o.strip()]
    sweep.write_csv(sweep.SweepGrid(axes, fixed, outputs), out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-hawking",
        description="Hawking-effect degradation of Werner-state entanglement for Dirac fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_out(p):
        p.add_argument("--out", default="-", help="output path (default: standard output)")
        return p

    p = with_out(sub.add_parser("point", help="report a single parameter point"))
    p.add_argument("--F", type=float, required=True, help="Werner weight in [0, 1]")
    p.add_argument("--alpha", type=float, default=MAXIMAL_ALPHA, help="Bell amplitude in (0, 1)")
    p.add_argument("--omega", type=float, required=True, help="mode frequency")
    _add_temperature(p, None)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_point)

    grid_help = "axis as start:stop:count[:log]"
    p = with_out(sub.add_parser("fig1", help="threshold vs temperature CSV"))
    p.add_argument("--grid", action="append", help=f"temperature {grid_help}")
    p.add_argument("--omega", type=float, default=1.0)
    p.set_defaults(func=cmd_fig1)

    p = with_out(sub.add_parser("fig2", help="threshold vs frequency CSV"))
    p.add_argument("--grid", action="append", help=f"frequency {grid_help}")
    _add_temperature(p, 1.0)
    p.set_defaults(func=cmd_fig2)

    p = with_out(sub.add_parser("fig3", help="log negativity over (F, alpha) CSV"))
    p.add_argument("--grid", action="append", help=f"F=... or alpha=... {grid_help}")
    p.add_argument("--omega", type=float, default=sweep.FIG3_RATIO)
    _add_temperature(p, 1.0)
    p.set_defaults(func=cmd_fig3)

    p = with_out(sub.add_parser("sweep", help="general 1- or 2-axis sweep CSV"))
    p.add_argument("--grid", action="append", help=f"NAME={grid_help}; NAME in {sweep.PARAMETERS}")
    p.add_argument("--set", action="append", metavar="NAME=VALUE", help="fixed parameter")
    p.add_argument("--outputs", default="tau", help=f"comma list from {sweep.OUTPUTS}")
    p.set_defaults(func=cmd_sweep)
    return parser


def _emit(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        buf = io.StringIO()
        args.func(args, buf)
        _emit(buf.getvalue(), args.out)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, RuntimeError) as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
