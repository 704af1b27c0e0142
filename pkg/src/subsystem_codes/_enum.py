"""Exhaustive span enumeration kernels.

Given k generator rows over F_p whose columns are grouped into ``n_groups``
blocks of ``group_size`` prime-field digits, these kernels scan counters in
[lo, hi) of the mixed-radix odometer over F_p^k and report the minimum
block weight (number of nonzero digit groups) together with the counter of
a minimizing element.

Two interchangeable backends exist:

* ``numba`` -- an @njit odometer loop (default when numba imports).
* ``numpy`` -- blockwise vectorized evaluation, used as fallback.

Selection: the ``SUBSYS_ENUM_BACKEND`` environment variable (``numba`` or
``numpy``) wins; otherwise numba is used when available.  Results are
bit-identical across backends and across any partitioning of the counter
range (``benchmarks/bench_enum.py`` compares the two).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Tuple

import numpy as np

__all__ = ["min_weight_range", "weight_distribution", "available_backends",
           "resolve_backend"]

_ENV_VAR = "SUBSYS_ENUM_BACKEND"

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency
    _HAVE_NUMBA = False


def available_backends() -> Tuple[str, ...]:
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def resolve_backend(backend: Optional[str] = None) -> str:
    if backend is None:
        backend = os.environ.get(_ENV_VAR)
    if backend is None:
        return "numba" if _HAVE_NUMBA else "numpy"
    backend = backend.lower()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown enumeration backend {backend!r}")
    if backend == "numba" and not _HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable")
    return backend


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _min_weight_range_numba(gens, p, n_groups, group_size, lo, hi, stop_at):
        k, ncols = gens.shape
        # seed vector for counter lo
        v = np.zeros(ncols, dtype=np.int64)
        digits = np.zeros(k, dtype=np.int64)
        t = lo
        for j in range(k):
            d = t % p
            digits[j] = d
            t //= p
            if d:
                for c in range(ncols):
                    v[c] = (v[c] + d * gens[j, c]) % p
        best = n_groups + 1
        best_t = np.int64(-1)
        cur = lo
        while cur < hi:
            # block weight of v
            w = 0
            for g in range(n_groups):
                base = g * group_size
                for c in range(group_size):
                    if v[base + c] != 0:
                        w += 1
                        break
            if w < best:
                best = w
                best_t = cur
                if best <= stop_at:
                    break
            # odometer increment: add generator j once per changed digit
            cur += 1
            if cur >= hi:
                break
            j = 0
            while True:
                digits[j] += 1
                for c in range(ncols):
                    v[c] = (v[c] + gens[j, c]) % p
                if digits[j] < p:
                    break
                digits[j] = 0
                j += 1
        return best, best_t

    @njit(cache=True, nogil=True)
    def _weight_distribution_numba(gens, p, n_groups, group_size, lo, hi):
        k, ncols = gens.shape
        v = np.zeros(ncols, dtype=np.int64)
        digits = np.zeros(k, dtype=np.int64)
        t = lo
        for j in range(k):
            d = t % p
            digits[j] = d
            t //= p
            if d:
                for c in range(ncols):
                    v[c] = (v[c] + d * gens[j, c]) % p
        dist = np.zeros(n_groups + 1, dtype=np.int64)
        cur = lo
        while cur < hi:
            w = 0
            for g in range(n_groups):
                base = g * group_size
                for c in range(group_size):
                    if v[base + c] != 0:
                        w += 1
                        break
            dist[w] += 1
            cur += 1
            if cur >= hi:
                break
            j = 0
            while True:
                digits[j] += 1
                for c in range(ncols):
                    v[c] = (v[c] + gens[j, c]) % p
                if digits[j] < p:
                    break
                digits[j] = 0
                j += 1
        return dist


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

_NUMPY_BLOCK = 1 << 15


def _numpy_block_weights(gens, p, n_groups, group_size, ts):
    k = gens.shape[0]
    powers = p ** np.arange(k, dtype=np.int64)
    digits = (ts[:, None] // powers) % p
    vecs = (digits @ gens) % p
    nz = vecs.reshape(len(ts), n_groups, group_size).any(axis=2)
    return nz.sum(axis=1)


def _min_weight_range_numpy(gens, p, n_groups, group_size, lo, hi, stop_at):
    best = n_groups + 1
    best_t = -1
    for start in range(lo, hi, _NUMPY_BLOCK):
        ts = np.arange(start, min(hi, start + _NUMPY_BLOCK), dtype=np.int64)
        wts = _numpy_block_weights(gens, p, n_groups, group_size, ts)
        i = int(np.argmin(wts))
        if wts[i] < best:
            best = int(wts[i])
            # earliest counter achieving the block minimum, for determinism
            first = int(np.nonzero(wts == wts[i])[0][0])
            best_t = int(ts[first])
            if best <= stop_at:
                break
    return best, best_t


def _weight_distribution_numpy(gens, p, n_groups, group_size, lo, hi):
    dist = np.zeros(n_groups + 1, dtype=np.int64)
    for start in range(lo, hi, _NUMPY_BLOCK):
        ts = np.arange(start, min(hi, start + _NUMPY_BLOCK), dtype=np.int64)
        wts = _numpy_block_weights(gens, p, n_groups, group_size, ts)
        dist += np.bincount(wts, minlength=n_groups + 1)
    return dist


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def _chunk_ranges(lo: int, hi: int, parts: int):
    span = hi - lo
    step = (span + parts - 1) // parts
    return [(lo + i * step, min(hi, lo + (i + 1) * step))
            for i in range(parts) if lo + i * step < hi]


def min_weight_range(gens: np.ndarray, p: int, n_groups: int, group_size: int,
                     lo: int, hi: int, stop_at: int = 0, workers: int = 1,
                     backend: Optional[str] = None) -> Tuple[int, int]:
    """Minimum block weight over span counters in [lo, hi).

    Returns ``(weight, counter)`` where ``counter`` identifies a minimizing
    span element (the earliest one unless an early stop at ``stop_at``
    triggers).  The result weight does not depend on partitioning.
    """
    if lo >= hi:
        raise ValueError("empty enumeration range")
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    backend = resolve_backend(backend)
    kern = (_min_weight_range_numba if backend == "numba"
            else _min_weight_range_numpy)
    if workers <= 1 or hi - lo < 4 * _NUMPY_BLOCK:
        return tuple(int(x) for x in
                     kern(gens, p, n_groups, group_size, lo, hi, stop_at))
    ranges = _chunk_ranges(lo, hi, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(
            lambda r: kern(gens, p, n_groups, group_size, r[0], r[1], stop_at),
            ranges))
    best, best_t = n_groups + 1, -1
    for w, t in results:
        if w < best:
            best, best_t = int(w), int(t)
    return best, best_t


def weight_distribution(gens: np.ndarray, p: int, n_groups: int,
                        group_size: int, lo: int, hi: int,
                        backend: Optional[str] = None) -> np.ndarray:
    """Histogram of block weights over span counters in [lo, hi)."""
    if lo >= hi:
        return np.zeros(n_groups + 1, dtype=np.int64)
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    backend = resolve_backend(backend)
    if backend == "numba":
        return np.asarray(
            _weight_distribution_numba(gens, p, n_groups, group_size, lo, hi))
    return _weight_distribution_numpy(gens, p, n_groups, group_size, lo, hi)
