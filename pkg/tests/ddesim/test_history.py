"""
Unit tests for integration histories
"""
import numpy
import pandas
import pytest

from cyclosc.ddesim.history import HistorySpec
from cyclosc.errors import DomainError


def test_constant_history():
    """Constant histories have zero slope"""
    history = HistorySpec.constant([1.0, 2.0, 3.0, 4.0]).check(2, 1.0)
    values, slopes = history.evaluate(numpy.array([-1.0, -0.5, 0.0]))
    numpy.testing.assert_array_equal(values[1], [1.0, 2.0, 3.0, 4.0])
    numpy.testing.assert_array_equal(slopes, 0.0)
    with pytest.raises(DomainError):
        HistorySpec.constant([1.0, -2.0])
    with pytest.raises(DomainError):
        history.check(3, 1.0)


def test_sampled_history():
    """Linear interpolation between samples with piecewise slopes"""
    t = numpy.array([-2.0, -1.0, 0.0])
    table = numpy.array([[0.0, 4.0], [1.0, 2.0], [3.0, 2.0]])
    history = HistorySpec.sampled(t, table).check(1, 2.0)
    values, slopes = history.evaluate(numpy.array([-1.5, -0.5, 0.0]))
    numpy.testing.assert_allclose(values, [[0.5, 3.0], [2.0, 2.0], [3.0, 2.0]])
    numpy.testing.assert_allclose(
        slopes, [[1.0, -2.0], [2.0, 0.0], [2.0, 0.0]]
    )
    with pytest.raises(DomainError):
        history.check(1, 3.0)
    with pytest.raises(DomainError):
        HistorySpec.sampled([0.0, 0.0], table[:2])


def test_at_equilibrium(counterexample_eq):
    """Neighbouring genes are perturbed in opposite directions"""
    history = HistorySpec.at_equilibrium(counterexample_eq, 0.1)
    values = history.values.reshape(3, 2)
    numpy.testing.assert_allclose(
        values[:, 1] / counterexample_eq.p_star, [1.1, 0.9, 1.1]
    )
    numpy.testing.assert_allclose(
        values[:, 0] / counterexample_eq.r_star, [1.1, 0.9, 1.1]
    )


def test_from_csv(tmp_path):
    """Histories read from a table with a time column"""
    path = tmp_path / "history.csv"
    pandas.DataFrame(
        {"t": [-1.0, 0.0], "r1": [1.0, 1.0], "p1": [2.0, 3.0]}
    ).to_csv(path, index=False)
    history = HistorySpec.from_csv(path)
    assert history.width == 2
    numpy.testing.assert_allclose(history.evaluate([-0.5])[0], [[1.0, 2.5]])
    pandas.DataFrame({"r1": [1.0]}).to_csv(path, index=False)
    with pytest.raises(DomainError):
        HistorySpec.from_csv(path)
