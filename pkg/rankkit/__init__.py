"""Exact factorization ranks of band matrices over four semirings."""

__version__ = "0.1.0"
