"""Kernel backend selection.

The quadratic similarity refinement and the bisimulation partition
refinement exist twice: a Cython extension (built at install time) and a
pure-Python fallback. The compiled module is preferred when importable;
setting SIMLTS_PURE=1 forces the fallback.
"""

from __future__ import annotations

import os
from typing import Optional

import numpy as np

from ..errors import InputError
from . import pure

try:
    from . import _speedups
except ImportError:
    _speedups = None


def has_compiled() -> bool:
    return _speedups is not None


def default_backend() -> str:
    if os.environ.get("SIMLTS_PURE"):
        return "pure"
    return "compiled" if _speedups is not None else "pure"


def _module(backend: Optional[str]):
    name = backend or default_backend()
    if name == "compiled":
        if _speedups is None:
            raise RuntimeError("compiled kernels are not available; build the extension or use backend='pure'")
        return _speedups
    if name == "pure":
        return pure
    raise InputError(f"unknown backend {name!r} (expected 'compiled' or 'pure')")


def similarity_matrix(
    n: int,
    nlabels: int,
    src: np.ndarray,
    lab: np.ndarray,
    dst: np.ndarray,
    backend: Optional[str] = None,
) -> np.ndarray:
    """n-by-n uint8 table of the largest simulation relation.

    Entry [s, t] is 1 when t simulates s.
    """
    return _module(backend).similarity_matrix(n, nlabels, src, lab, dst)


def bisim_labels(
    n: int,
    nlabels: int,
    src: np.ndarray,
    lab: np.ndarray,
    dst: np.ndarray,
    backend: Optional[str] = None,
) -> np.ndarray:
    """Block identifier per state for the coarsest bisimulation partition."""
    return _module(backend).bisim_labels(n, nlabels, src, lab, dst)
