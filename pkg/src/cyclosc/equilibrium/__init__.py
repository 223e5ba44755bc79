# flake8: noqa
"""
Equilibrium point and linearised gains.
"""
from .solvers import *
