"""Exact construction, validation and decomposition of split 3-Lie-Rinehart color algebras."""

__version__ = "0.1.0"
