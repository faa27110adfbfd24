"""Exact Walsh-Hadamard-type matrix families and the character/descent bridge."""

__version__ = "0.1.0"
