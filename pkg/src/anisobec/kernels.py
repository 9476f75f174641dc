"""Kernel backend selection.

The compiled extension is preferred when built; the NumPy fallback has
identical signatures and semantics.  ANISOBEC_KERNELS=python|cython
overrides the choice at import time.
"""

import os

from . import _lattice_py
from .errors import DomainError

try:
    from . import _lattice as _compiled
except ImportError:
    _compiled = None

_BACKENDS = {"python": _lattice_py}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled


def available_backends() -> dict:
    return dict(_BACKENDS)


def get_backend(name: str | None = None):
    if name is None:
        name = os.environ.get("ANISOBEC_KERNELS")
    if name is None:
        name = "cython" if _compiled is not None else "python"
    if name not in _BACKENDS:
        raise DomainError(
            f"unknown kernel backend {name!r}; available: {sorted(_BACKENDS)}"
        )
    return _BACKENDS[name]


_active = get_backend()
backend_name = "cython" if _active is _compiled else "python"
lattice_octants = _active.lattice_octants
bose_series = _active.bose_series
