"""
Unit tests for sweep axes
"""
import math

import numpy
import pytest

from cyclosc.errors import DomainError
from cyclosc.linearization.reduction import reduce
from cyclosc.regions.axes import (
    AxisSpec,
    apply_axes,
    apply_axis,
    parse_axis,
)


def test_parse_axis():
    """Linear and log axes with aliases"""
    axis = parse_axis("tau_tilde:0:2:5")
    assert axis.parameter == "tau"
    numpy.testing.assert_allclose(axis.values(), [0.0, 0.5, 1.0, 1.5, 2.0])
    axis = parse_axis("R-uniform-scale:1:100:3:log")
    assert axis.parameter == "R"
    assert axis.is_log
    numpy.testing.assert_allclose(axis.values(), [1.0, 10.0, 100.0])
    assert axis.to_dict() == {
        "parameter": "R",
        "lo": 1.0,
        "hi": 100.0,
        "n": 3,
        "scale": "log10",
    }


@pytest.mark.parametrize(
    "text",
    [
        "R:1:2",
        "R:2:1:3",
        "R:1:2:1",
        "R:0:1:3:log",
        "R:1:2:3:lin",
        "R:a:2:3",
        "speed:0:1:3",
    ],
)
def test_parse_axis_rejects(text):
    """Malformed axes raise"""
    with pytest.raises(DomainError):
        parse_axis(text)


def test_apply_hill_and_rates(repressilator):
    """nu, alpha, gamma_inv, alpha0 and half-lives set their fields"""
    assert apply_axis(repressilator, "nu", 3.0).nu == 3.0
    spec = apply_axis(repressilator, "alpha", 100.0)
    numpy.testing.assert_allclose(spec.column("beta"), 100.0)
    spec = apply_axis(repressilator, "gamma_inv", 4.0)
    numpy.testing.assert_allclose(spec.column("b"), 0.25)
    numpy.testing.assert_allclose(spec.column("c"), 0.25)
    spec = apply_axis(repressilator, "alpha0", 0.5)
    numpy.testing.assert_allclose(spec.column("alpha0"), 0.5)
    spec = apply_axis(repressilator, "t_r-halflife", 3.0)
    numpy.testing.assert_allclose(spec.column("a"), math.log(2.0) / 3.0)
    spec = apply_axis(repressilator, "t_p", 20.0)
    numpy.testing.assert_allclose(spec.column("b"), math.log(2.0) / 20.0)
    with pytest.raises(DomainError):
        apply_axis(repressilator, "speed", 1.0)


def test_apply_loop_ratio(example7):
    """R rescales every c so the loop ratio hits the target"""
    spec = apply_axis(example7, "R", 2.4)
    numpy.testing.assert_allclose(reduce(spec).R, 2.4)
    numpy.testing.assert_allclose(
        spec.column("c") / example7.column("c"), 4.0
    )


def test_apply_delay(counterexample, example7, example7_nodelay):
    """tau sets the normalised mean delay, keeping delay proportions"""
    spec = apply_axis(counterexample, "tau", 2.0)
    numpy.testing.assert_allclose(spec.column("tau_r"), 1.0)
    numpy.testing.assert_allclose(reduce(spec).tau_tilde, 2.0)
    spec = apply_axis(example7, "tau", 0.5)
    numpy.testing.assert_allclose(reduce(spec).tau_tilde, 0.5)
    ratios = spec.column("tau_p") / example7.column("tau_p")
    numpy.testing.assert_allclose(ratios, ratios[0])
    spec = apply_axis(example7_nodelay, "tau", 1.0)
    numpy.testing.assert_allclose(spec.column("tau_r"), spec.column("tau_p"))
    numpy.testing.assert_allclose(reduce(spec).tau_tilde, 1.0)
    assert apply_axis(counterexample, "tau", 0.0).total_delay == 0.0


def test_apply_axes_rescales_delay_last(counterexample):
    """Delay rescaling sees the final degradation rates"""
    spec = apply_axes(counterexample, [("tau", 1.5), ("t_p", 0.2)])
    numpy.testing.assert_allclose(spec.column("b"), math.log(2.0) / 0.2)
    numpy.testing.assert_allclose(reduce(spec).tau_tilde, 1.5)


def test_axis_spec_validation():
    """Constructor checks the same constraints as the parser"""
    with pytest.raises(DomainError):
        AxisSpec("nu", 2.0, 1.0, 3)
    with pytest.raises(DomainError):
        AxisSpec("nu", 1.0, 2.0, 3, scale="ln")
