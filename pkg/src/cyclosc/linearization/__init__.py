# flake8: noqa
"""
Linearisation around the equilibrium and reduction to dimensionless form.
"""
from .reduction import *
