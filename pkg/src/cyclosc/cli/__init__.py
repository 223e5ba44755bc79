# flake8: noqa
"""
Command-line interface and report writers.
"""
from .main import *
from .output import *
from .report import *
