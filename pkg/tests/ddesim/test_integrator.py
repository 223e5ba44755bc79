"""
Unit tests for the delayed network integrator
"""
import numpy
import pytest

from cyclosc.ddesim.history import HistorySpec
from cyclosc.ddesim.integrator import (
    default_step,
    integrate,
    network_timescale,
)
from cyclosc.ddesim.trajectory_model import (
    CONVERGED,
    OSCILLATING,
    UNDETERMINED,
)
from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.errors import DomainError, IntegrationError
from cyclosc.linearization.reduction import reduce
from cyclosc.network.network_model import NetworkSpec
from cyclosc.stability import analytic


def test_counterexample_oscillates(counterexample, counterexample_eq):
    """A small asymmetric kick grows into sustained oscillations"""
    history = HistorySpec.at_equilibrium(counterexample_eq, 0.01)
    traj = integrate(counterexample, history, 200.0, dt=0.05)
    assert traj.trajectory_acc.classification == OSCILLATING
    assert traj.attrs["period"] > 0.0
    assert numpy.all(traj["p"].values >= 0.0)


def test_example7_nodelay_converges(example7_nodelay):
    """Without delays the seven-gene ring returns to equilibrium"""
    eq = solve_equilibrium(example7_nodelay)
    history = HistorySpec.at_equilibrium(eq, 0.01)
    traj = integrate(example7_nodelay, history, 1200.0, dt=0.02)
    assert traj.trajectory_acc.classification == CONVERGED



def test_counterexample_from_offset_history(counterexample):
    """The near-equilibrium start grows into regular peaks by t = 100"""
    history = HistorySpec.constant(
        [0.699, 1.224, 0.698, 1.226, 0.697, 1.225]
    )
    traj = integrate(counterexample, history, 100.0, dt=0.05)
    assert traj.trajectory_acc.classification == OSCILLATING
    numpy.testing.assert_allclose(traj.attrs["period"], 17.3, atol=0.5)


def test_example7_oscillates(example7, example7_eq):
    """Unit normalised delay destabilises the seven-gene ring"""
    history = HistorySpec.at_equilibrium(example7_eq, 0.01)
    traj = integrate(example7, history, 300.0, dt=0.01)
    assert traj.trajectory_acc.classification == OSCILLATING
    numpy.testing.assert_allclose(traj.attrs["period"], 21.7, atol=1.5)


@pytest.mark.parametrize(
    "preset, t_end, dt, expected",
    [
        ("hes7_wild", 2000.0, 0.1, OSCILLATING),
        ("hes7_mutant", 10000.0, 0.2, CONVERGED),
        ("repressilator", 1000.0, 0.02, OSCILLATING),
    ],
)
def test_simulation_matches_verdict(request, preset, t_end, dt, expected):
    """Simulations from a 1% kick agree with the analytic verdict"""
    spec = request.getfixturevalue(preset)
    eq = solve_equilibrium(spec)
    oscillating = analytic.test_analytic(reduce(spec, eq)).oscillating
    assert oscillating == (expected == OSCILLATING)
    history = HistorySpec.at_equilibrium(eq, 0.01)
    traj = integrate(spec, history, t_end, dt=dt)
    assert traj.trajectory_acc.classification == expected

def test_equilibrium_history_stays(counterexample, counterexample_eq):
    """Starting on the fixed point the state does not move"""
    history = HistorySpec.at_equilibrium(counterexample_eq)
    traj = integrate(counterexample, history, 20.0, dt=0.05)
    numpy.testing.assert_allclose(
        traj["p"].values, counterexample_eq.p_star[None, :], atol=1e-6
    )
    assert traj.trajectory_acc.classification in (CONVERGED, UNDETERMINED)


def test_fourth_order_convergence(counterexample, counterexample_eq):
    """Halving the step shrinks the error about sixteen times"""
    history = HistorySpec.at_equilibrium(counterexample_eq, 0.2)
    finals = [
        integrate(counterexample, history, 5.0, dt=dt)["p"].values[-1]
        for dt in (0.01, 0.005, 0.0025)
    ]
    coarse = numpy.max(numpy.abs(finals[0] - finals[1]))
    fine = numpy.max(numpy.abs(finals[1] - finals[2]))
    assert 10.0 < coarse / fine < 22.0


def test_sampled_history_matches_constant(counterexample, counterexample_eq):
    """A flat sampled history behaves like the constant one"""
    constant = HistorySpec.at_equilibrium(counterexample_eq, 0.05)
    sampled = HistorySpec.sampled(
        [-1.0, 0.0], numpy.vstack([constant.values, constant.values])
    )
    first = integrate(counterexample, constant, 10.0, dt=0.05)
    second = integrate(counterexample, sampled, 10.0, dt=0.05)
    numpy.testing.assert_allclose(first["r"].values, second["r"].values)


def test_default_step(counterexample):
    """Step resolves delays, time constants and the horizon"""
    assert default_step(counterexample, 10.0) == pytest.approx(1e-4)
    assert default_step(counterexample, 1000.0) == pytest.approx(0.01)
    assert default_step(counterexample, 1e4) == pytest.approx(0.025)
    assert network_timescale(counterexample) == 1.0


def test_blow_up_raises():
    """An unstable explicit step overflows and is reported"""
    spec = NetworkSpec.homogeneous(2, 2.0, a=100.0, b=100.0, c=1.0, beta=1.0)
    spec = spec.replace_genes(regulation=["activate", "repress"])
    history = HistorySpec.constant([0.1, 0.1, 0.1, 0.1])
    with pytest.raises(IntegrationError) as err:
        integrate(spec, history, 1000.0, dt=1.0)
    assert err.value.last_valid_time < 1000.0


def test_bad_arguments(counterexample, counterexample_eq):
    """Steps above the shortest delay and bad horizons are rejected"""
    history = HistorySpec.at_equilibrium(counterexample_eq)
    with pytest.raises(DomainError):
        integrate(counterexample, history, 10.0, dt=1.0)
    with pytest.raises(DomainError):
        integrate(counterexample, history, 0.0)
    with pytest.raises(DomainError):
        integrate(counterexample, HistorySpec.constant([1.0, 1.0]), 10.0)
