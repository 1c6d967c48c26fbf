"""Exact diameter-bound sequences, bound catalog, verifiers and ground-truth oracles."""

__version__ = "0.1.0"
