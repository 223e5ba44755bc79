"""
Pytest fixtures
"""
import pytest

from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.network.presets import load_preset


@pytest.fixture(scope="package", name="example7")
def example7_fixture():
    """Seven-gene ring with delays, tau_tilde close to 1"""
    return load_preset("example7")


@pytest.fixture(scope="package", name="example7_nodelay")
def example7_nodelay_fixture():
    """Seven-gene ring without delays"""
    return load_preset("example7_nodelay")


@pytest.fixture(scope="package", name="counterexample")
def counterexample_fixture():
    """Three-gene ring with unit rates and unit total delay"""
    return load_preset("counterexample")


@pytest.fixture(scope="package", name="repressilator")
def repressilator_fixture():
    """Leaky three-gene Repressilator"""
    return load_preset("repressilator")


@pytest.fixture(scope="package", name="hes7_wild")
def hes7_wild_fixture():
    """Hes7 self-repression, wild type"""
    return load_preset("hes7_wild")


@pytest.fixture(scope="package", name="hes7_mutant")
def hes7_mutant_fixture():
    """Hes7 self-repression with slower protein decay"""
    return load_preset("hes7_mutant")


@pytest.fixture(scope="package", name="counterexample_eq")
def counterexample_eq_fixture(counterexample):
    """Equilibrium of the counterexample ring"""
    return solve_equilibrium(counterexample)


@pytest.fixture(scope="package", name="example7_eq")
def example7_eq_fixture(example7):
    """Equilibrium of the seven-gene ring"""
    return solve_equilibrium(example7)
