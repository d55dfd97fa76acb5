"""Toolkit for the one-sided balancing game on +-1 vector families:
exact critical thresholds, constructive Chooser strategies, brute-force
game solving on small windows, translate witnesses on V-closed sets,
and balanced Red/Blue set colorings."""

__version__ = "0.1.0"
