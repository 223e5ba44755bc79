"""
Fixed-step integration of the delayed network by the method of steps.

The solution is stored on a uniform grid that starts with the history
nodes. Each step is classical fourth-order Runge-Kutta; delayed values
between grid nodes come from cubic Hermite interpolation using the
stored node derivatives (the first RK stage of each step). Because the
step never exceeds the smallest positive delay, every delayed lookup
falls into the already computed past.
"""

__all__ = ["default_step", "integrate", "network_timescale"]

import logging
import math

import numba
import numpy

from cyclosc.ddesim.classification import classify
from cyclosc.ddesim.trajectory_model import UNDETERMINED, Trajectory
from cyclosc.errors import DomainError, IntegrationError
from cyclosc.network.network_model import validate

log = logging.getLogger("cyclosc-logger")


def network_timescale(spec):
    """
    Longest characteristic time of a network, max(T_r, T_p, tau).

    :param spec: NetworkSpec
    :return: time
    """
    return max(
        float(numpy.max(1.0 / spec.column("a"))),
        float(numpy.max(1.0 / spec.column("b"))),
        max(gene.delay for gene in spec.genes),
    )


def default_step(spec, t_end):
    """
    min(smallest positive delay / 20, smallest time constant / 20,
    t_end / 1e5).

    :param spec: NetworkSpec
    :param t_end: integration horizon
    :return: step
    """
    rates = numpy.concatenate([spec.column("a"), spec.column("b")])
    candidates = [float(1.0 / rates.max()) / 20.0, t_end / 1e5]
    delays = numpy.concatenate([spec.column("tau_r"), spec.column("tau_p")])
    positive = delays[delays > 0.0]
    if positive.size:
        candidates.append(float(positive.min()) / 20.0)
    return min(candidates)


@numba.njit(cache=True)
def _hill(p_level, p0, nu, sign):
    x = max(p_level, 0.0) / p0
    x_nu = x**nu
    if sign < 0:
        return 1.0 / (1.0 + x_nu)
    if x_nu > 1.0:
        return 1.0 / (1.0 + 1.0 / x_nu)
    return x_nu / (1.0 + x_nu)


@numba.njit(cache=True)
def _delayed(y, f, dleft, start, n, offset, lag, col, dt):
    """Hermite lookup of column col at grid position n + offset - lag"""
    pos = n + offset - lag
    j = int(math.floor(pos))
    theta = pos - j
    if j >= n:
        return y[n, col]
    if theta <= 0.0:
        return y[j, col]
    m0 = f[j, col]
    if j + 1 == start:
        m1 = dleft[col]
    else:
        m1 = f[j + 1, col]
    t2 = theta * theta
    t3 = t2 * theta
    return (
        (2.0 * t3 - 3.0 * t2 + 1.0) * y[j, col]
        + (t3 - 2.0 * t2 + theta) * dt * m0
        + (-2.0 * t3 + 3.0 * t2) * y[j + 1, col]
        + (t3 - t2) * dt * m1
    )


@numba.njit(cache=True)
def _rhs(stage, out, y, f, dleft, start, n, offset, dt, params, lags):
    # pylint: disable=too-many-arguments,too-many-locals
    n_genes = lags.shape[0]
    nu = params[0, 7]
    for k in range(n_genes):
        prev = k - 1 if k > 0 else n_genes - 1
        if lags[k, 0] > 0.0:
            p_in = _delayed(
                y, f, dleft, start, n, offset, lags[k, 0], 2 * prev + 1, dt
            )
        else:
            p_in = stage[2 * prev + 1]
        if lags[k, 1] > 0.0:
            r_in = _delayed(
                y, f, dleft, start, n, offset, lags[k, 1], 2 * k, dt
            )
        else:
            r_in = stage[2 * k]
        hill = _hill(p_in, params[k, 5], nu, params[k, 6])
        out[2 * k] = (
            -params[k, 0] * stage[2 * k] + params[k, 3] * hill + params[k, 4]
        )
        out[2 * k + 1] = (
            -params[k, 1] * stage[2 * k + 1] + params[k, 2] * r_in
        )


@numba.njit(cache=True)
def _rk4_kernel(y, f, dleft, start, n_steps, dt, params, lags):
    """Advance n_steps; returns the index of the last finite node"""
    # pylint: disable=too-many-arguments,too-many-locals
    width = y.shape[1]
    k1 = numpy.empty(width)
    k2 = numpy.empty(width)
    k3 = numpy.empty(width)
    k4 = numpy.empty(width)
    stage = numpy.empty(width)
    for n in range(start, start + n_steps):
        _rhs(y[n], k1, y, f, dleft, start, n, 0.0, dt, params, lags)
        f[n, :] = k1
        for i in range(width):
            stage[i] = y[n, i] + 0.5 * dt * k1[i]
        _rhs(stage, k2, y, f, dleft, start, n, 0.5, dt, params, lags)
        for i in range(width):
            stage[i] = y[n, i] + 0.5 * dt * k2[i]
        _rhs(stage, k3, y, f, dleft, start, n, 0.5, dt, params, lags)
        for i in range(width):
            stage[i] = y[n, i] + dt * k3[i]
        _rhs(stage, k4, y, f, dleft, start, n, 1.0, dt, params, lags)
        finite = True
        for i in range(width):
            increment = k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]
            y[n + 1, i] = y[n, i] + dt / 6.0 * increment
            if not math.isfinite(y[n + 1, i]):
                finite = False
        if not finite:
            return n
    last = start + n_steps
    _rhs(y[last], k1, y, f, dleft, start, last, 0.0, dt, params, lags)
    f[last, :] = k1
    return last


def _parameter_table(spec):
    """Columns a, b, c, beta, alpha0, p0, sign, nu"""
    return numpy.column_stack(
        [
            spec.column("a"),
            spec.column("b"),
            spec.column("c"),
            spec.column("beta"),
            spec.column("alpha0"),
            spec.column("p0"),
            numpy.array([float(gene.sign) for gene in spec.genes]),
            numpy.full(spec.N, spec.nu),
        ]
    )


def integrate(
    spec, history, t_end, dt=None, controls=None
):  # pylint: disable=too-many-locals
    """
    Integrate the delayed network from a history.

    :param spec: NetworkSpec
    :param history: HistorySpec covering [-max delay, 0]
    :param t_end: horizon, > 0
    :param dt: step; default_step when None
    :param controls: classification controls passed to classify
    :return: Trajectory on [0, t_end], classified when long enough
    """
    validate(spec)
    if not t_end > 0.0:
        raise DomainError(f"integrate: t_end must be > 0, got {t_end}")
    if dt is None:
        dt = default_step(spec, t_end)
    if not dt > 0.0:
        raise DomainError(f"integrate: Step must be > 0, got {dt}")
    delays = numpy.concatenate([spec.column("tau_r"), spec.column("tau_p")])
    positive = delays[delays > 0.0]
    if positive.size and dt > positive.min():
        raise DomainError(
            f"integrate: Step {dt} exceeds the smallest delay "
            f"{positive.min()}"
        )
    max_delay = float(delays.max())
    history.check(spec.N, max_delay)

    n_steps = int(math.ceil(t_end / dt - 1e-9))
    start = int(math.ceil(max_delay / dt - 1e-9)) + 1
    width = 2 * spec.N
    y = numpy.zeros((start + n_steps + 1, width))
    f = numpy.zeros_like(y)
    past = (numpy.arange(start + 1) - start) * dt
    y[: start + 1], f[: start + 1] = history.evaluate(past)
    dleft = f[start].copy()

    # gene k reads protein k-1 delayed by tau_p of gene k-1
    lags = numpy.column_stack(
        [numpy.roll(spec.column("tau_p"), 1), spec.column("tau_r")]
    ) / dt

    log.debug(
        "integrate: %d steps of %.4g with %d history nodes",
        n_steps,
        dt,
        start,
    )
    last = _rk4_kernel(
        y,
        f,
        dleft,
        start,
        n_steps,
        float(dt),
        _parameter_table(spec),
        lags,
    )
    if last < start + n_steps:
        raise IntegrationError(
            "integrate: State became non-finite after "
            f"t = {(last - start) * dt}",
            last_valid_time=(last - start) * dt,
        )

    states = y[start:]
    time = numpy.arange(n_steps + 1) * dt
    traj = Trajectory.constructor(
        time,
        states[:, 0::2],
        states[:, 1::2],
        dt,
        network_timescale(spec),
        spec.to_json(indent=None),
    )
    try:
        classify(traj, controls)
    except DomainError as err:
        log.debug("integrate: Not classified, %s", err)
        traj.attrs["classification"] = UNDETERMINED
    return traj
