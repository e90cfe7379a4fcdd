"""Locally repairable codes with unequal (r, delta)-locality."""

__version__ = "0.1.0"
