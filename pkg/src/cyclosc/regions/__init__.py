# flake8: noqa
"""
Parameter regions in which oscillations are guaranteed.
"""
from .axes import *
from .region_model import *
from .scan import *
