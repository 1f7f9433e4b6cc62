"""Skew PBW extensions over a field: classification, PBW bases, Koszulity, PBW deformations."""

__version__ = "0.1.0"
