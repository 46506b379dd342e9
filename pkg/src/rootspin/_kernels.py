"""Enumeration kernels behind the exact counters.

Two interchangeable backends compute identical values:

* ``numba`` (default when importable): JIT-compiled Gray-code walks.  One
  sign flips per step, so a full 2^r enumeration costs 2^r scalar updates.
* ``numpy``: vectorised doubling tables plus blocked prefix x suffix scans.

Select with ``ROOTSPIN_BACKEND=auto|numba|numpy`` (or the ``backend=``
argument; see ``benchmarks/bench_kernels.py`` for a side-by-side timing).

Whenever the coordinate box fits, a signed sum vector is packed into a
single int64 key: coordinate c gets radix ``2*B_c + 1`` where
``B_c = sum_i |a_ic|``, so a root contributes a fixed key delta and the
zero vector is exactly key 0.  Systems whose box exceeds 62 bits fall back
to unpacked vector kernels.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .errors import ResourceLimitError, RootspinError

_ENV_BACKEND = os.environ.get("ROOTSPIN_BACKEND", "auto").strip().lower()
if _ENV_BACKEND not in ("auto", "numba", "numpy"):
    raise RootspinError(f"ROOTSPIN_BACKEND must be auto, numba or numpy, got {_ENV_BACKEND!r}")

try:
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a hard dependency
    numba = None
    NUMBA_AVAILABLE = False
    if _ENV_BACKEND == "numba":
        raise

DEFAULT_BACKEND = "numba" if (NUMBA_AVAILABLE and _ENV_BACKEND != "numpy") else "numpy"

# int64 key budget: strictly below 2^62 so the +-2*delta walk never wraps.
_KEY_BITS = 62


def resolve_backend(backend: str | None = None) -> str:
    b = (backend or DEFAULT_BACKEND).lower()
    if b == "auto":
        b = DEFAULT_BACKEND
    if b not in ("numba", "numpy"):
        raise RootspinError(f"unknown backend {b!r}")
    if b == "numba" and not NUMBA_AVAILABLE:
        raise RootspinError("numba backend requested but numba is not importable")
    return b


def set_threads(n: int) -> None:
    """Pin the numba thread pool.  Kernel outputs never depend on it."""
    if NUMBA_AVAILABLE:
        numba.set_num_threads(max(1, min(n, numba.config.NUMBA_NUM_THREADS)))


def key_packing(roots: np.ndarray) -> np.ndarray | None:
    """Per-root int64 key deltas, or None when the box exceeds the key budget."""
    bounds = [int(b) for b in np.abs(roots.astype(object)).sum(axis=0)]
    capacity = math.prod(2 * b + 1 for b in bounds)
    if capacity >= (1 << _KEY_BITS):
        return None
    strides = []
    s = 1
    for b in bounds:
        strides.append(s)
        s *= 2 * b + 1
    deltas = [sum(int(x) * st for x, st in zip(row, strides)) for row in roots.tolist()]
    return np.array(deltas, dtype=np.int64)


def check_vector_bounds(roots: np.ndarray) -> None:
    """Unpacked kernels run on int64 sums; refuse inputs that could wrap."""
    bound = max((int(b) for b in np.abs(roots.astype(object)).sum(axis=0)), default=0)
    if bound >= (1 << _KEY_BITS):
        raise ResourceLimitError("coordinate magnitudes too large for exact int64 enumeration")


# --------------------------------------------------------------------------
# numpy backend
# --------------------------------------------------------------------------


def _keys_np(deltas: np.ndarray) -> np.ndarray:
    """All 2^h signed-sum keys; index bit t set means sign of root t is -1."""
    keys = np.zeros(1, dtype=np.int64)
    for d in deltas:
        keys = np.concatenate((keys + d, keys - d))
    return keys


def _table_np(roots: np.ndarray) -> np.ndarray:
    """All 2^h signed-sum vectors, same index convention as ``_keys_np``."""
    sums = np.zeros((1, roots.shape[1]), dtype=np.int64)
    for row in roots:
        sums = np.concatenate((sums + row, sums - row))
    return sums


def _count_zero_keys_np(deltas: np.ndarray, block_bits: int = 22) -> int:
    # Blocked full enumeration: every (prefix, suffix) sign combination is
    # inspected exactly once, so the work is genuinely Theta(2^r).
    r = deltas.shape[0]
    q = min(r, block_bits)
    suffix = _keys_np(deltas[r - q:])
    prefix = _keys_np(deltas[: r - q])
    total = 0
    for kp in prefix:
        total += int(np.count_nonzero(suffix == -kp))
    return total


def _count_zero_vec_np(roots: np.ndarray, block_bits: int = 18) -> int:
    r = roots.shape[0]
    q = min(r, block_bits)
    suffix = _table_np(roots[r - q:])
    prefix = _table_np(roots[: r - q])
    total = 0
    for sp in prefix:
        total += int(np.count_nonzero(np.all(suffix == -sp, axis=1)))
    return total


# --------------------------------------------------------------------------
# numba backend
# --------------------------------------------------------------------------

if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _count_zero_keys_nb(deltas):  # pragma: no cover - compiled
        r = deltas.shape[0]
        key = np.int64(0)
        for t in range(r):
            key += deltas[t]
        count = 0
        if key == 0:
            count = 1
        mask = np.int64(0)
        n = np.int64(1) << r
        for step in range(1, n):
            s = step
            t = 0
            while s & 1 == 0:
                s >>= 1
                t += 1
            bit = np.int64(1) << t
            mask ^= bit
            if mask & bit:
                key -= deltas[t] << 1
            else:
                key += deltas[t] << 1
            if key == 0:
                count += 1
        return count

    @numba.njit(cache=True)
    def _count_zero_vec_nb(roots):  # pragma: no cover - compiled
        r, m = roots.shape
        cur = np.zeros(m, dtype=np.int64)
        for i in range(r):
            for c in range(m):
                cur[c] += roots[i, c]
        count = 0
        nz = 0
        for c in range(m):
            if cur[c] != 0:
                nz += 1
        if nz == 0:
            count = 1
        mask = np.int64(0)
        n = np.int64(1) << r
        for step in range(1, n):
            s = step
            t = 0
            while s & 1 == 0:
                s >>= 1
                t += 1
            bit = np.int64(1) << t
            mask ^= bit
            if mask & bit:
                for c in range(m):
                    cur[c] -= roots[t, c] << 1
            else:
                for c in range(m):
                    cur[c] += roots[t, c] << 1
            nz = 0
            for c in range(m):
                if cur[c] != 0:
                    nz += 1
                    break
            if nz == 0:
                count += 1
        return count

    @numba.njit(cache=True)
    def _keys_nb(deltas):  # pragma: no cover - compiled
        h = deltas.shape[0]
        n = np.int64(1) << h
        out = np.empty(n, dtype=np.int64)
        key = np.int64(0)
        for t in range(h):
            key += deltas[t]
        out[0] = key
        mask = np.int64(0)
        for step in range(1, n):
            s = step
            t = 0
            while s & 1 == 0:
                s >>= 1
                t += 1
            bit = np.int64(1) << t
            mask ^= bit
            if mask & bit:
                key -= deltas[t] << 1
            else:
                key += deltas[t] << 1
            out[mask] = key
        return out


# --------------------------------------------------------------------------
# public dispatch
# --------------------------------------------------------------------------


def count_zero_full(roots: np.ndarray, backend: str | None = None) -> int:
    """Exact number of sign vectors with zero signed sum, by full 2^r enumeration."""
    b = resolve_backend(backend)
    deltas = key_packing(roots)
    if deltas is not None:
        if b == "numba":
            return int(_count_zero_keys_nb(deltas))
        return _count_zero_keys_np(deltas)
    check_vector_bounds(roots)
    if b == "numba":
        return int(_count_zero_vec_nb(np.ascontiguousarray(roots)))
    return _count_zero_vec_np(roots)


def signed_sum_keys(deltas: np.ndarray, backend: str | None = None) -> np.ndarray:
    """All 2^h packed signed-sum keys, indexed by sign mask (bit t set = root t negative)."""
    b = resolve_backend(backend)
    if b == "numba":
        return _keys_nb(deltas)
    return _keys_np(deltas)


def signed_sum_table(roots: np.ndarray) -> np.ndarray:
    """Unpacked (2^h, m) signed-sum table, same index convention."""
    check_vector_bounds(roots)
    return _table_np(roots)


def warm_up(backend: str | None = None) -> None:
    """Trigger JIT compilation so first measured calls run at full speed."""
    if resolve_backend(backend) == "numba":
        one = np.array([1], dtype=np.int64)
        _count_zero_keys_nb(one)
        _count_zero_vec_nb(np.array([[1]], dtype=np.int64))
        _keys_nb(one)
