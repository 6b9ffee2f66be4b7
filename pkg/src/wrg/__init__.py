"""Witness rectangle graphs: construction, analysis, recognition and drawing."""

__version__ = "0.1.0"
