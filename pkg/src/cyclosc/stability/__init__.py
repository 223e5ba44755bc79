# flake8: noqa
"""
Local stability of the equilibrium: analytic and graphical criteria,
characteristic roots, Nyquist winding and worst-case robustness.
"""
from .analytic import *
from .controls import *
from .nyquist import *
from .robustness import *
from .roots import *
from .verdict import *
