# flake8: noqa
"""
Simulation of the delayed network, classification of trajectories and
the monotone cyclic form check.
"""
from .classification import *
from .history import *
from .integrator import *
from .mps_form import *
from .trajectory_model import *
