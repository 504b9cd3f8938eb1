"""ctypes access to the C-ABI shared library.

The shared object is compiled from envelope_ffi.c (see build.py); this
module only locates and loads it. Status codes cross the boundary as
plain integers, indices as 64-bit unsigned.
"""
from __future__ import annotations

import ctypes
import os
from pathlib import Path

import numpy as np

ENV_OK = 0
ENV_NULL_ARG = 1
ENV_EMPTY = 2
ENV_SILENT = 3
ENV_ONE_SIDED = 4
ENV_INTERNAL = 5

LIBRARY_ENV_VAR = "ENVELOPE_LIBRARY"
_LIBRARY_NAME = "libenvelope.so"

_u64p = ctypes.POINTER(ctypes.c_uint64)
_f64p = ctypes.POINTER(ctypes.c_double)


def find_library() -> Path | None:
    """Locate the shared library: env var override, then package dir."""
    override = os.environ.get(LIBRARY_ENV_VAR)
    if override:
        return Path(override)
    candidate = Path(__file__).with_name(_LIBRARY_NAME)
    if candidate.exists():
        return candidate
    return None


def ensure_library(path=None) -> Path:
    """Return a usable library path, compiling it if necessary."""
    if path is not None:
        return Path(path)
    found = find_library()
    if found is not None and found.exists():
        return found
    from .build import build_library

    return build_library()


class EnvelopeLibrary:
    """Thin ctypes wrapper over the three exports.

    alpha=None (or <= 0) selects automatic radius estimation, matching
    the wire convention.
    """

    def __init__(self, path=None):
        self.path = ensure_library(path)
        lib = ctypes.CDLL(str(self.path))
        lib.env_frontiers.restype = ctypes.c_int32
        lib.env_frontiers.argtypes = [
            _f64p, ctypes.c_uint64, ctypes.c_double,
            _u64p, _u64p, _u64p, _u64p,
        ]
        lib.env_envelope.restype = ctypes.c_int32
        lib.env_envelope.argtypes = [
            _f64p, ctypes.c_uint64, ctypes.c_double, _u64p, _u64p,
        ]
        lib.env_version.restype = ctypes.c_int32
        lib.env_version.argtypes = [ctypes.c_char_p, ctypes.c_uint64]
        self._lib = lib

    @staticmethod
    def _as_buffer(samples):
        arr = np.ascontiguousarray(samples, dtype=np.float64)
        return arr, arr.ctypes.data_as(_f64p)

    def frontiers(self, samples, alpha=None):
        """Returns (status, upper indices, lower indices)."""
        arr, ptr = self._as_buffer(samples)
        n = arr.size
        upper = np.zeros(max(n, 1), dtype=np.uint64)
        lower = np.zeros(max(n, 1), dtype=np.uint64)
        upper_len = ctypes.c_uint64(0)
        lower_len = ctypes.c_uint64(0)
        status = self._lib.env_frontiers(
            ptr, n, -1.0 if alpha is None else float(alpha),
            upper.ctypes.data_as(_u64p), ctypes.byref(upper_len),
            lower.ctypes.data_as(_u64p), ctypes.byref(lower_len),
        )
        return (
            int(status),
            upper[: upper_len.value].astype(np.int64),
            lower[: lower_len.value].astype(np.int64),
        )

    def envelope(self, samples, alpha=None):
        """Returns (status, envelope indices)."""
        arr, ptr = self._as_buffer(samples)
        n = arr.size
        out = np.zeros(max(n, 1), dtype=np.uint64)
        out_len = ctypes.c_uint64(0)
        status = self._lib.env_envelope(
            ptr, n, -1.0 if alpha is None else float(alpha),
            out.ctypes.data_as(_u64p), ctypes.byref(out_len),
        )
        return int(status), out[: out_len.value].astype(np.int64)

    def version(self, capacity: int = 32):
        """Returns (status, version string)."""
        buf = ctypes.create_string_buffer(capacity)
        status = self._lib.env_version(buf, capacity)
        return int(status), buf.value.decode("ascii")
