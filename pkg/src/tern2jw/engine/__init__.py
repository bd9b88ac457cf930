"""Batch conjugation engine with a compiled kernel and a numpy fallback.

Both backends implement the same in-place contract (see _fallback) and are
selected at import: the Cython kernel when its extension built, else numpy.
Set TERN2JW_ENGINE=kernel|fallback to force one; forcing a missing kernel
raises at first use. force_backend() switches at runtime (used by tests and
the benchmark).
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback
from .tables import GATE_CODES, N_SINGLE

try:
    from . import _kernel
except ImportError:
    _kernel = None

_BACKENDS = {"fallback": _fallback.conjugate_inplace}
if _kernel is not None:
    _BACKENDS["kernel"] = _kernel.conjugate_inplace


def _pick_default() -> str:
    forced = os.environ.get("TERN2JW_ENGINE")
    if forced:
        if forced not in ("kernel", "fallback"):
            raise ValueError(f"TERN2JW_ENGINE must be kernel or fallback, got {forced!r}")
        if forced not in _BACKENDS:
            raise ImportError("TERN2JW_ENGINE=kernel but the compiled kernel is not built")
        return forced
    return "kernel" if "kernel" in _BACKENDS else "fallback"


_active = _pick_default()


def backend_name() -> str:
    """Name of the active backend: 'kernel' or 'fallback'."""
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def force_backend(name: str) -> None:
    """Switch the active backend; raises if the requested one is unavailable."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    _active = name


def encode_gates(gates, num_qubits: int) -> np.ndarray:
    """Encode (kind, targets) gate pairs as the int32 (L, 3) op array."""
    ops = np.zeros((len(gates), 3), dtype=np.int32)
    for i, (kind, targets) in enumerate(gates):
        code = GATE_CODES[kind]
        ops[i, 0] = code
        ops[i, 1] = targets[0] - 1
        ops[i, 2] = targets[1] - 1 if code >= N_SINGLE else 0
    return ops


def conjugate_inplace(letters: np.ndarray, phases: np.ndarray, ops: np.ndarray) -> None:
    """Conjugate the letter batch through the encoded ops, in place."""
    _BACKENDS[_active](letters, phases, ops)
