"""
Oscillation analysis of cyclic gene regulatory networks with time delay.
"""
