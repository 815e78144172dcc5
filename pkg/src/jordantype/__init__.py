"""Exact Jordan-type invariants of Artinian algebras."""

from .kernels import BACKEND

__version__ = "0.1.0"
