"""
fraccauchy - heat, time-fractional and distributed-order Cauchy problems on boxes

Two independent engines, eigenfunction series and Monte-Carlo simulation of
time-changed killed Brownian motion, plus the checks that compare them.
"""

__version__ = "1.0.0"
