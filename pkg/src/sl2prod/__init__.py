"""Exact verification toolkit for a tensor product of categorified sl2 representations."""

__version__ = "0.1.0"
