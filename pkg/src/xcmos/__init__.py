"""Analytical benchmarking of beyond-CMOS logic devices."""

__version__ = "0.1.0"
