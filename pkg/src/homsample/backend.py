"""Kernel backend selection: numba JIT or pure numpy.

The hot inner loops (edge-membership queries inside the sampling loop,
Bloom filter construction, brute-force enumeration) exist twice with
bit-identical integer semantics:

* ``homsample._kernels_numba``: @njit loops, the default when numba
  imports cleanly.
* ``homsample._kernels_numpy``: vectorized numpy, always available.

Set ``HOMSAMPLE_BACKEND=numpy`` (or ``numba``) to force one; anything
else raises. ``benchmarks/backend_bench.py`` compares the two.
"""

from __future__ import annotations

import os

_VALID = ("numba", "numpy")
_active: str | None = None
_modules: dict = {}


def _numba_usable() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _default_backend() -> str:
    env = os.environ.get("HOMSAMPLE_BACKEND", "").strip().lower()
    if env:
        if env not in _VALID:
            raise ValueError(f"HOMSAMPLE_BACKEND must be one of {_VALID}, got {env!r}")
        if env == "numba" and not _numba_usable():
            raise ImportError("HOMSAMPLE_BACKEND=numba but numba is not importable")
        return env
    return "numba" if _numba_usable() else "numpy"


def active_backend() -> str:
    global _active
    if _active is None:
        _active = _default_backend()
    return _active


def set_backend(name: str) -> None:
    """Override the backend (mainly for tests and benchmarks)."""
    global _active
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not _numba_usable():
        raise ImportError("numba backend requested but numba is not importable")
    _active = name


def kernels():
    """The active kernel module; resolved per call so tests can switch."""
    name = active_backend()
    mod = _modules.get(name)
    if mod is None:
        if name == "numba":
            from . import _kernels_numba as mod
        else:
            from . import _kernels_numpy as mod
        _modules[name] = mod
    return mod
