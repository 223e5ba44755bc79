# flake8: noqa
"""
Network specifications, Hill nonlinearities and preset networks.
"""
from .hill import *
from .network_model import *
from .presets import *
