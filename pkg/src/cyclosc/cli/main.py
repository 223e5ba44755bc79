"""
Command-line entry point.

    cyclosc analyze --preset example7 --methods all --out report.json
    cyclosc simulate --preset counterexample --t-end 100 --out traj.csv
    cyclosc sweep --preset hes7_wild --x t_p:0.1:60:200:log
        --y t_r:0.5:30:200:log --out grid.csv --boundary boundary.csv
    cyclosc nyquist --preset counterexample --out curve.csv
    cyclosc boundary --N 3 --Q 0.8 --tau-tilde 1 --L 1.2 --out curve.csv
    cyclosc presets list

analyze exits with 0 when oscillations are guaranteed, 1 when the
equilibrium is locally stable and 2 when the tests are inconclusive.
Other failures use the sysexits codes 64 (usage), 65 (invalid data),
66 (unreadable input), 70 (numerical or internal failure) and 73
(output not writable).
"""

__all__ = ["build_parser", "main", "run"]

import argparse
import json
import logging
import re
import sys

import numpy
import pandas

from cyclosc.cli.output import sidecar_path, write_csv, write_json
from cyclosc.cli.report import build_report, parse_methods, version
from cyclosc.ddesim.history import HistorySpec
from cyclosc.ddesim.integrator import integrate
from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.errors import (
    ConvergenceError,
    DomainError,
    InputFileError,
    IntegrationError,
    OutputFileError,
)
from cyclosc.linearization.reduction import eigenvalue_ring
from cyclosc.network.network_model import load_spec
from cyclosc.network.presets import list_presets, load_preset
from cyclosc.regions.axes import parse_axis
from cyclosc.regions.scan import scan, trace_boundary
from cyclosc.stability.analytic import boundary_samples
from cyclosc.stability.controls import (
    create_analysis_controls,
    scale_controls,
    update_controls,
)
from cyclosc.stability.nyquist import nyquist_curve
from cyclosc.stability.verdict import (
    INCONCLUSIVE,
    LOCALLY_STABLE,
    OSCILLATIONS,
)

log = logging.getLogger("cyclosc-logger")

EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66
EX_SOFTWARE = 70
EX_CANTCREAT = 73

EXIT_BY_OUTCOME = {OSCILLATIONS: 0, LOCALLY_STABLE: 1, INCONCLUSIVE: 2}

_EQUILIBRIUM_HISTORY = re.compile(r"equilibrium(?:\+([0-9.eE+-]+)%)?")
_HANDLER = logging.StreamHandler(sys.stderr)
_HANDLER.setFormatter(logging.Formatter("%(levelname)s %(message)s"))


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EX_USAGE"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _configure_logging(verbosity):
    if _HANDLER not in log.handlers:
        log.addHandler(_HANDLER)
    levels = {0: logging.WARNING, 1: logging.INFO}
    log.setLevel(levels.get(verbosity, logging.DEBUG))


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError) as err:
        raise InputFileError(f"Cannot read {path}: {err}") from err


def _network(path, preset):
    if path is None:
        return load_preset(preset)
    try:
        return load_spec(path)
    except DomainError:
        raise
    except (OSError, ValueError, KeyError, TypeError) as err:
        raise InputFileError(f"Cannot read network {path}: {err}") from err


def _controls(args):
    controls = create_analysis_controls()
    if args.tol is not None:
        controls = scale_controls(controls, args.tol)
    if args.config is not None:
        controls = update_controls(controls, _read_json(args.config))
    return controls


def _history(text, spec):
    if text.startswith("const:"):
        try:
            values = [float(item) for item in text[6:].split(",")]
        except ValueError as err:
            raise DomainError(f"Bad constant history {text!r}") from err
        return HistorySpec.constant(values)
    match = _EQUILIBRIUM_HISTORY.fullmatch(text)
    if match:
        rel = float(match.group(1) or 0.0) / 100.0
        return HistorySpec.at_equilibrium(solve_equilibrium(spec), rel)
    try:
        return HistorySpec.from_csv(text)
    except DomainError:
        raise
    except (OSError, ValueError) as err:
        raise InputFileError(f"Cannot read history {text}: {err}") from err


def _analyze(args):
    spec = _network(args.spec, args.preset)
    report = build_report(spec, parse_methods(args.methods), _controls(args))
    if args.out:
        write_json(report.to_dict(), args.out)
    for verdict in report.verdicts:
        margin = "n/a" if verdict.margin is None else f"{verdict.margin:.6g}"
        print(f"{verdict.method}: {verdict.outcome} (margin {margin})")
    print(f"outcome: {report.outcome}")
    return EXIT_BY_OUTCOME[report.outcome]


def _simulate(args):
    spec = _network(args.spec, args.preset)
    history = _history(args.history, spec)
    traj = integrate(spec, history, args.t_end, args.dt)
    write_csv(traj.trajectory_acc.to_dataframe(args.stride), args.out)
    print(traj.trajectory_acc.classification)
    return 0


def _sweep(args):
    template = _network(args.template, args.preset)
    controls = _controls(args)
    x_axis = parse_axis(args.x)
    y_axis = parse_axis(args.y)
    grid = scan(template, x_axis, y_axis, controls)
    write_csv(grid.region_acc.to_dataframe(), args.out)
    write_json(
        {
            "x_axis": x_axis.to_dict(),
            "y_axis": y_axis.to_dict(),
            "template": template.to_dict(),
        },
        sidecar_path(args.out, ""),
    )
    if args.boundary:
        frame = trace_boundary(grid, template, controls)
        write_csv(frame, args.boundary)
    print(
        f"{OSCILLATIONS}: {grid.region_acc.count(OSCILLATIONS)}, "
        f"{LOCALLY_STABLE}: {grid.region_acc.count(LOCALLY_STABLE)} cells"
    )
    return 0


def _nyquist(args):
    spec = _network(args.spec, args.preset)
    controls = _controls(args)
    curve = nyquist_curve(
        spec,
        solve_equilibrium(spec, controls["equilibrium_tol"]),
        omega_max=args.omega_max,
        n=args.n or controls["nyquist_n"],
        gain_floor=controls["nyquist_gain_floor"],
        max_refine=controls["nyquist_max_refine"],
    )
    omega, values = curve.full_contour()
    write_csv(
        pandas.DataFrame(
            {"omega": omega, "re": values.real, "im": values.imag}
        ),
        args.out,
    )
    winding = "unresolved" if curve.winding is None else curve.winding
    print(f"winding: {winding}")
    return 0


def _boundary(args):
    if args.N < 1:
        raise DomainError(f"boundary: N must be >= 1, got {args.N}")
    omega, points = boundary_samples(
        args.Q, args.tau_tilde, args.omega_max, args.n
    )
    write_csv(
        pandas.DataFrame(
            {"omega_tilde": omega, "re": points.real, "im": points.imag}
        ),
        args.out,
    )
    if args.L is not None:
        ring = eigenvalue_ring(args.N, args.L)
        write_csv(
            pandas.DataFrame(
                {
                    "k": numpy.arange(1, args.N + 1),
                    "re": ring.real,
                    "im": ring.imag,
                }
            ),
            sidecar_path(args.out, "_ring.csv"),
        )
    return 0


def _presets(args):
    if args.action == "list":
        for name, description in list_presets():
            print(f"{name:18s} {description}")
        return 0
    if args.name is None:
        raise DomainError("presets show: A preset name is required")
    print(load_preset(args.name).to_json())
    return 0


def _add_network_source(parser, flag="--spec"):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(flag, help="network JSON file")
    group.add_argument("--preset", help="preset name, see presets list")


def build_parser():
    """
    Create the argument parser.

    :return: argparse.ArgumentParser
    """
    parser = _Parser(
        prog="cyclosc",
        description="Oscillation analysis of cyclic gene networks with "
        "delays",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="more log output (repeat for debug)",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {version()}"
    )
    tolerances = _Parser(add_help=False)
    tolerances.add_argument(
        "--tol", type=float, help="scale all numerical tolerances"
    )
    tolerances.add_argument("--config", help="JSON file of control values")
    commands = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )

    analyze = commands.add_parser(
        "analyze", parents=[tolerances], help="stability verdicts"
    )
    _add_network_source(analyze)
    analyze.add_argument(
        "--methods",
        default="analytic,graphical",
        help="comma separated subset of analytic, graphical, ratio, roots, "
        "nyquist, or all",
    )
    analyze.add_argument("--out", help="report JSON file")
    analyze.set_defaults(handler=_analyze)

    simulate = commands.add_parser("simulate", help="integrate the network")
    _add_network_source(simulate)
    simulate.add_argument("--t-end", type=float, required=True)
    simulate.add_argument("--dt", type=float)
    simulate.add_argument(
        "--history",
        default="equilibrium+1%",
        help="const:v1,...,v2N | FILE.csv | equilibrium[+EPS%%]",
    )
    simulate.add_argument("--stride", type=int, default=1)
    simulate.add_argument("--out", required=True, help="trajectory CSV")
    simulate.set_defaults(handler=_simulate)

    sweep = commands.add_parser(
        "sweep", parents=[tolerances], help="oscillation region grid"
    )
    _add_network_source(sweep, "--template")
    sweep.add_argument("--x", required=True, help="param:lo:hi:n[:log]")
    sweep.add_argument("--y", required=True, help="param:lo:hi:n[:log]")
    sweep.add_argument("--out", required=True, help="grid CSV")
    sweep.add_argument("--boundary", help="boundary CSV")
    sweep.set_defaults(handler=_sweep)

    nyquist = commands.add_parser(
        "nyquist", parents=[tolerances], help="loop transfer samples"
    )
    _add_network_source(nyquist)
    nyquist.add_argument("--omega-max", type=float)
    nyquist.add_argument("--n", type=int)
    nyquist.add_argument("--out", required=True, help="curve CSV")
    nyquist.set_defaults(handler=_nyquist)

    boundary = commands.add_parser(
        "boundary", help="instability region boundary samples"
    )
    boundary.add_argument("--N", type=int, required=True)
    boundary.add_argument("--Q", type=float, required=True)
    boundary.add_argument("--tau-tilde", type=float, default=0.0)
    boundary.add_argument("--omega-max", type=float, default=10.0)
    boundary.add_argument("--n", type=int, default=2001)
    boundary.add_argument("--L", type=float, help="also write the ring")
    boundary.add_argument("--out", required=True, help="curve CSV")
    boundary.set_defaults(handler=_boundary)

    presets = commands.add_parser("presets", help="preset catalogue")
    presets.add_argument("action", choices=("list", "show"))
    presets.add_argument("name", nargs="?")
    presets.set_defaults(handler=_presets)
    return parser


def run(argv=None):
    """
    Run the command line.

    :param argv: arguments without the program name; sys.argv when None
    :return: exit status
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except InputFileError as err:
        log.error("%s", err)
        return EX_NOINPUT
    except DomainError as err:
        log.error("%s", err)
        return EX_DATAERR
    except OutputFileError as err:
        log.error("%s", err)
        return EX_CANTCREAT
    except (ConvergenceError, IntegrationError) as err:
        log.error("numerical failure: %s", err)
        return EX_SOFTWARE
    except Exception:  # pylint: disable=broad-exception-caught
        log.exception("%s: internal error", args.command)
        return EX_SOFTWARE


def main():
    """Console script"""
    sys.exit(run())
