"""Quantum cohomology of minuscule spaces and the quantum Satake correspondence."""

__version__ = "0.1.0"
