"""Enumeration of compatibly split prime ideals over prime fields."""

__version__ = "0.1.0"
