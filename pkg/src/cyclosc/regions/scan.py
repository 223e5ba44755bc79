"""
Two-parameter sweeps of the analytic oscillation test.

Every grid cell instantiates the template with its axis values, solves
the equilibrium, reduces and compares L with L_bar. Rows are evaluated
independently, in worker processes when more than one worker is
available; the grid is assembled by row index so the result does not
depend on completion order.
"""

__all__ = [
    "evaluate_cell",
    "scan",
    "sweep_workers",
    "trace_boundary",
]

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor

import numpy
from scipy import optimize, sparse
from scipy.sparse import csgraph

from cyclosc.ddesim.trajectory_model import UNDETERMINED
from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.errors import CycloscError
from cyclosc.linearization.reduction import reduce
from cyclosc.network.network_model import NetworkSpec, validate
from cyclosc.regions.axes import apply_axes
from cyclosc.regions.region_model import RegionGrid
from cyclosc.stability.analytic import test_analytic
from cyclosc.stability.controls import create_analysis_controls

log = logging.getLogger("cyclosc-logger")

THREADS_VARIABLE = "CYCLOSC_THREADS"


def sweep_workers(workers=None):
    """
    Number of worker processes for a sweep.

    :param workers: explicit count; CYCLOSC_THREADS or the CPU count
                    when None
    :return: count >= 1
    """
    if workers is None:
        workers = os.environ.get(THREADS_VARIABLE) or os.cpu_count() or 1
    return max(int(workers), 1)


def evaluate_cell(template, settings, controls=None):
    """
    Analytic verdict for one grid point.

    :param template: NetworkSpec
    :param settings: sequence of (axis parameter, value)
    :param controls: analysis controls
    :return: (outcome, L, L_bar, margin); Undetermined with NaNs when
             the cell cannot be evaluated
    """
    if controls is None:
        controls = create_analysis_controls()
    try:
        spec = validate(apply_axes(template, settings))
        eq = solve_equilibrium(spec, controls["equilibrium_tol"])
        rm = reduce(spec, eq, homogeneity_tol=controls["homogeneity_tol"])
        verdict = test_analytic(
            rm, controls["scalar_tol"], controls["tie_band"]
        )
    except CycloscError as err:
        log.debug("evaluate_cell: %s failed, %s", settings, err)
        return UNDETERMINED, math.nan, math.nan, math.nan
    return verdict.outcome, verdict.L, verdict.L_bar, verdict.margin


def _evaluate_row(template, x_parameter, x_values, y_setting, controls):
    return [
        evaluate_cell(template, [(x_parameter, x), y_setting], controls)
        for x in x_values
    ]


def scan(template, x_axis, y_axis, controls=None, workers=None):
    """
    Evaluate the analytic test over a grid.

    :param template: validated NetworkSpec
    :param x_axis: AxisSpec of the columns
    :param y_axis: AxisSpec of the rows
    :param controls: analysis controls
    :param workers: worker processes; see sweep_workers
    :return: RegionGrid with an empty boundary
    """
    validate(template)
    if controls is None:
        controls = create_analysis_controls()
    x_values = x_axis.values()
    y_values = y_axis.values()
    workers = min(sweep_workers(workers), y_axis.n)
    log.info(
        "scan: %d x %d cells of (%s, %s) on %d workers",
        x_axis.n,
        y_axis.n,
        x_axis.parameter,
        y_axis.parameter,
        workers,
    )

    jobs = [
        (template, x_axis.parameter, x_values, (y_axis.parameter, y), controls)
        for y in y_values
    ]
    if workers == 1:
        rows = [_evaluate_row(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_evaluate_row, *zip(*jobs)))

    cells = numpy.array(rows, dtype=object)
    grid = RegionGrid.constructor(
        x_axis,
        y_axis,
        cells[:, :, 0],
        cells[:, :, 1].astype(float),
        cells[:, :, 2].astype(float),
        cells[:, :, 3].astype(float),
        template.to_json(indent=None),
    )
    log.info(
        "scan: %d undetermined cells",
        grid.region_acc.count(UNDETERMINED),
    )
    return grid


def _to_search(value, is_log):
    return math.log10(value) if is_log else value


def _from_search(value, is_log):
    return 10.0**value if is_log else value


def _refine(margin_at, lower, upper, is_log, tol):
    """Root of the margin between two coordinates, or None"""

    def _margin(u):
        value = margin_at(_from_search(u, is_log))
        if not math.isfinite(value):
            raise ValueError("margin not finite")
        return value

    try:
        root = optimize.brentq(
            _margin,
            _to_search(lower, is_log),
            _to_search(upper, is_log),
            xtol=min(tol, 2e-12),
            maxiter=200,
        )
    except (ValueError, RuntimeError) as err:
        log.debug("trace_boundary: Refinement skipped, %s", err)
        return None
    coordinate = _from_search(root, is_log)
    if abs(margin_at(coordinate)) > tol:
        log.warning(
            "trace_boundary: |margin| above %g at %.10g", tol, coordinate
        )
    return coordinate


def _sign_changes(margin):
    """Index pairs (j, j+1) along the last axis with opposite margins"""
    finite = numpy.isfinite(margin[..., :-1]) & numpy.isfinite(
        margin[..., 1:]
    )
    flips = finite & (
        numpy.sign(margin[..., :-1]) * numpy.sign(margin[..., 1:]) < 0.0
    )
    return numpy.argwhere(flips)


def _chain_labels(points):
    """Connected component of each boundary point, linked by grid squares"""
    owner = {}
    rows, cols = [], []
    for k, point in enumerate(points):
        for square in point[4]:
            if square in owner:
                rows.append(k)
                cols.append(owner[square])
            else:
                owner[square] = k
    size = len(points)
    if size == 0:
        return numpy.zeros(0, dtype=int)
    links = sparse.coo_matrix(
        (numpy.ones(len(rows)), (rows, cols)), shape=(size, size)
    )
    _, labels = csgraph.connected_components(links, directed=False)
    return labels


def _order_segment(members, index_coords):
    """Greedy nearest-neighbour walk from the outermost point"""
    points = index_coords[members]
    centre = points.mean(axis=0)
    current = int(numpy.argmax(numpy.hypot(*(points - centre).T)))
    remaining = set(range(len(members))) - {current}
    order = [current]
    while remaining:
        candidates = sorted(remaining)
        distance = numpy.hypot(*(points[candidates] - points[current]).T)
        current = candidates[int(numpy.argmin(distance))]
        remaining.remove(current)
        order.append(current)
    return [members[k] for k in order]


def trace_boundary(
    grid, template=None, controls=None, tol=1e-9
):  # pylint: disable=too-many-locals
    """
    Refine the margin sign changes of a grid into boundary polylines.

    Each row and column with opposite margins in neighbouring cells is
    searched by Brent's method (in log10 coordinates on log axes).
    Points on edges of a common grid square are chained into one
    segment.

    :param grid: RegionGrid from scan
    :param template: NetworkSpec; read from the grid when None
    :param controls: analysis controls
    :param tol: target |margin| at the refined points
    :return: pandas.DataFrame with columns segment, x, y; also stored
             on the grid
    """
    if template is None:
        template = NetworkSpec.from_json(grid.attrs["template"])
    if controls is None:
        controls = create_analysis_controls()
    x_axis = grid.region_acc.x_axis
    y_axis = grid.region_acc.y_axis
    x_log = x_axis["scale"] == "log10"
    y_log = y_axis["scale"] == "log10"
    x_values = grid["x"].values
    y_values = grid["y"].values
    margin = grid["margin"].values

    def _margin(x, y):
        return evaluate_cell(
            template,
            [(x_axis["parameter"], x), (y_axis["parameter"], y)],
            controls,
        )[3]

    # entries: (x, y, u, v, squares) with u, v in grid index units
    points = []
    for i, j in _sign_changes(margin):
        y = y_values[i]
        x = _refine(
            lambda value, y=y: _margin(value, y),
            x_values[j],
            x_values[j + 1],
            x_log,
            tol,
        )
        if x is not None:
            frac = (_to_search(x, x_log) - _to_search(x_values[j], x_log)) / (
                _to_search(x_values[j + 1], x_log)
                - _to_search(x_values[j], x_log)
            )
            points.append((x, y, j + frac, i, {(i - 1, j), (i, j)}))
    for j, i in _sign_changes(margin.T):
        x = x_values[j]
        y = _refine(
            lambda value, x=x: _margin(x, value),
            y_values[i],
            y_values[i + 1],
            y_log,
            tol,
        )
        if y is not None:
            frac = (_to_search(y, y_log) - _to_search(y_values[i], y_log)) / (
                _to_search(y_values[i + 1], y_log)
                - _to_search(y_values[i], y_log)
            )
            points.append((x, y, j, i + frac, {(i, j - 1), (i, j)}))

    groups = {}
    for k, label in enumerate(_chain_labels(points)):
        groups.setdefault(int(label), []).append(k)
    index_coords = numpy.array([(p[2], p[3]) for p in points]).reshape(-1, 2)
    segment_ids, xs, ys = [], [], []
    for segment, members in enumerate(
        sorted(groups.values(), key=lambda group: min(group))
    ):
        for k in _order_segment(members, index_coords):
            segment_ids.append(segment)
            xs.append(points[k][0])
            ys.append(points[k][1])

    grid.region_acc.set_boundary(segment_ids, xs, ys)
    log.info(
        "trace_boundary: %d points in %d segments", len(xs), len(groups)
    )
    return grid.region_acc.boundary_dataframe()
