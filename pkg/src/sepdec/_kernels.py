"""Backend selection for the hot kernels.

The compiled extension ``sepdec._fastcore`` is preferred when importable;
``sepdec._pycore`` is the pure-Python fallback with identical semantics.
Set ``SEPDEC_BACKEND=python`` (or ``c``) to force one, or call
``set_backend`` at runtime (used by the backend benchmark and tests).
"""

from __future__ import annotations

import os

from . import _pycore
from .errors import InputError

try:
    from . import _fastcore
except ImportError:
    _fastcore = None

_IMPLS = {"python": _pycore}
if _fastcore is not None:
    _IMPLS["c"] = _fastcore

_active_name = "python"
_active = _pycore


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


def backend_name() -> str:
    return _active_name


def set_backend(name: str) -> str:
    """Switch kernel backend; returns the previously active name."""
    global _active_name, _active
    if name not in _IMPLS:
        raise InputError(f"backend {name!r} not available (have {available_backends()})")
    previous = _active_name
    _active_name = name
    _active = _IMPLS[name]
    return previous


_env = os.environ.get("SEPDEC_BACKEND", "auto")
if _env == "auto":
    set_backend("c" if "c" in _IMPLS else "python")
else:
    set_backend(_env)


def mcs_order(n, indptr, indices):
    return _active.mcs_order(n, indptr, indices)


def peo_ok(n, indptr, indices, order):
    return _active.peo_ok(n, indptr, indices, order)


def mcs_m(n, indptr, indices):
    return _active.mcs_m(n, indptr, indices)


def umw_select(n, ei, ej, ew):
    return _active.umw_select(n, ei, ej, ew)
