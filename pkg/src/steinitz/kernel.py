"""Closure-kernel backend selection.

The compiled extension is preferred when built; the pure-Python kernel is
the fallback.  Set STEINITZ_KERNEL=python (or =c) to force a backend, or
call :func:`select` at runtime (the benchmark does).
"""

from __future__ import annotations

import os

from . import _pykernel

__all__ = ["available", "backend", "backend_name", "select"]

_backends = {"python": _pykernel}
try:
    from . import _ckernel

    _backends["c"] = _ckernel
except ImportError:
    pass

_active = os.environ.get("STEINITZ_KERNEL") or ("c" if "c" in _backends else "python")
if _active not in _backends:
    raise ImportError(
        f"STEINITZ_KERNEL={_active!r} is not available; choices: {sorted(_backends)}"
    )


def available() -> tuple[str, ...]:
    return tuple(sorted(_backends))


def backend_name() -> str:
    return _active


def backend():
    return _backends[_active]


def select(name: str) -> None:
    """Switch the active backend for subsequent kernel calls."""
    global _active
    if name not in _backends:
        raise ValueError(f"unknown kernel {name!r}; choices: {sorted(_backends)}")
    _active = name
