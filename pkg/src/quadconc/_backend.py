"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback.  ``QUADCONC_BACKEND=pure`` (or ``compiled``)
forces a choice, and :func:`use` switches at runtime, which the benchmark
and the backend-parity tests rely on.
"""

from __future__ import annotations

import os

from . import _purekernel

_BACKENDS: dict[str, object] = {"pure": _purekernel}

try:
    from . import _fastkernel  # type: ignore[attr-defined]

    _BACKENDS["compiled"] = _fastkernel
except ImportError:
    pass


def available() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use(name: str) -> None:
    """Switch the active kernel backend."""
    global _impl, active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available()}")
    _impl = _BACKENDS[name]
    active = name
    global reduce3, cross3, det3, dot3
    reduce3 = _impl.reduce3
    cross3 = _impl.cross3
    det3 = _impl.det3
    dot3 = _impl.dot3


_requested = os.environ.get("QUADCONC_BACKEND", "")
if _requested:
    use(_requested)
else:
    use("compiled" if "compiled" in _BACKENDS else "pure")
