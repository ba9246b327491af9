"""Multiplicity-free checks for representations of Lie superalgebras."""

__version__ = "0.1.0"
