"""Permutation idempotent Yang-Baxter solutions and their quadratic algebras."""

__version__ = "0.1.0"
