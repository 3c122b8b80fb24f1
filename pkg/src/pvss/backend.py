"""Kernel backend selection.

The hot loops (subset enumeration, pixel encoding) exist twice: a compiled
Cython extension and a pure-Python fallback with identical outputs.  The
compiled one is preferred when importable; set PVSS_BACKEND=python or
PVSS_BACKEND=cython to force a choice (forcing cython fails loudly if the
extension is missing).
"""

from __future__ import annotations

import os

from . import _pykernels

AVAILABLE = {"python": _pykernels}
try:
    from . import _kernels

    AVAILABLE["cython"] = _kernels
except ImportError:
    _kernels = None


def get_backend(name: str | None = None):
    """Resolve a kernel module by name, or the active default."""
    if name is None:
        name = os.environ.get("PVSS_BACKEND") or (
            "cython" if "cython" in AVAILABLE else "python"
        )
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} not available; have {sorted(AVAILABLE)}"
        ) from None


def backend_name() -> str:
    return get_backend().NAME
