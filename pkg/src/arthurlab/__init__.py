"""Computational toolkit for endoscopic bookkeeping on odd special orthogonal groups."""

__version__ = "0.1.0"
