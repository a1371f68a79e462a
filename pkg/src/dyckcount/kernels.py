"""Word-level kernels for exhaustive path enumeration.

A lattice path of length ``L = m + n`` is packed into an int64 mask with
step ``i`` (0-based) stored at bit ``L - 1 - i`` and a set bit meaning a
y-step. With this layout integer order equals lexicographic order of the
words (x < y), and the cyclic shift ``P_s`` is a left rotation by ``s``.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version that loops over step positions instead of words. The numba path
is used when numba imports and ``DYCK_USE_NUMBA`` is not ``0``; pass
``backend=`` explicitly to pin one.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .exceptions import PreconditionError

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("DYCK_USE_NUMBA", "1").strip() not in ("0", "false", "no")
BACKEND = "numba" if USE_NUMBA else "numpy"
BACKENDS = ("numba", "numpy") if NUMBA_AVAILABLE else ("numpy",)

MAX_MASK_BITS = 62


def word_to_mask(word: str) -> int:
    out = 0
    for ch in word:
        out = (out << 1) | (ch == "y")
    return out


def mask_to_word(mask: int, length: int) -> str:
    return "".join("y" if (mask >> (length - 1 - i)) & 1 else "x" for i in range(length))


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------

@njit(cache=True)
def _enumerate_nb(n, count):
    out = np.empty(count, dtype=np.int64)
    v = (np.int64(1) << n) - 1
    for idx in range(count):
        out[idx] = v
        if idx + 1 < count:
            # Gosper's hack: next larger integer with the same popcount
            c = v & -v
            r = v + c
            v = (((r ^ v) >> 2) // c) | r
    return out


@njit(cache=True)
def _scan_nb(masks, m, n):
    L = m + n
    N = masks.shape[0]
    dyck = np.empty(N, dtype=np.bool_)
    shift = np.empty(N, dtype=np.int64)
    for k in range(N):
        w = masks[k]
        ht = 0
        lo = 0
        arg = 0
        for i in range(L):
            if (w >> (L - 1 - i)) & 1:
                ht -= m
            else:
                ht += n
            if ht < lo:
                lo = ht
                arg = i + 1
        dyck[k] = lo >= 0
        shift[k] = arg
    return dyck, shift


@njit(cache=True)
def _periods_nb(masks, L):
    full = (np.int64(1) << L) - 1
    N = masks.shape[0]
    out = np.empty(N, dtype=np.int64)
    for k in range(N):
        w = masks[k]
        for r in range(1, L + 1):
            rot = ((w << r) & full) | (w >> (L - r))
            if rot == w:
                out[k] = r
                break
    return out


@njit(cache=True)
def _class_ids_nb(masks, L):
    full = (np.int64(1) << L) - 1
    N = masks.shape[0]
    out = np.empty(N, dtype=np.int64)
    for k in range(N):
        w = masks[k]
        best = w
        for r in range(1, L):
            rot = ((w << r) & full) | (w >> (L - r))
            if rot < best:
                best = rot
        out[k] = best
    return out


@njit(cache=True)
def _rotate_nb(masks, shifts, L):
    full = (np.int64(1) << L) - 1
    N = masks.shape[0]
    out = np.empty(N, dtype=np.int64)
    for k in range(N):
        w = masks[k]
        r = shifts[k] % L
        if r == 0:
            out[k] = w
        else:
            out[k] = ((w << r) & full) | (w >> (L - r))
    return out


@njit(cache=True)
def _types_nb(masks, m, n, d):
    L = m + n
    block = L // d
    N = masks.shape[0]
    out = np.zeros((N, d), dtype=np.int64)
    for k in range(N):
        w = masks[k]
        ht = 0
        last = 0
        for i in range(L):
            if (w >> (L - 1 - i)) & 1:
                ht -= m
            else:
                ht += n
            if ht == 0:
                kk = (i + 1) // block
                out[k, kk - last - 1] += 1
                last = kk
    return out


# ---------------------------------------------------------------------------
# numpy kernels
# ---------------------------------------------------------------------------

def _enumerate_np(m, n):
    # table[j] holds the sorted masks of words with (i x's, j y's) for the current i
    table = [np.zeros(1, dtype=np.int64)] + [None] * n
    for j in range(1, n + 1):
        table[j] = table[j - 1] | (np.int64(1) << (j - 1))
    for i in range(1, m + 1):
        new = [np.zeros(1, dtype=np.int64)] + [None] * n
        for j in range(1, n + 1):
            # first step x keeps the value; first step y sets the top bit
            new[j] = np.concatenate([table[j], new[j - 1] | (np.int64(1) << (i + j - 1))])
        table = new
    return table[n]


def _bits_np(masks, L, i):
    return (masks >> (L - 1 - i)) & 1


def _scan_np(masks, m, n):
    L = m + n
    ht = np.zeros(masks.shape[0], dtype=np.int64)
    lo = np.zeros_like(ht)
    arg = np.zeros_like(ht)
    for i in range(L):
        ht += np.where(_bits_np(masks, L, i) == 1, -m, n)
        better = ht < lo
        lo = np.where(better, ht, lo)
        arg = np.where(better, i + 1, arg)
    return lo >= 0, arg


def _rot_np(masks, r, L, full):
    return ((masks << r) & full) | (masks >> (L - r))


def _periods_np(masks, L):
    full = (np.int64(1) << L) - 1
    out = np.zeros(masks.shape[0], dtype=np.int64)
    for r in range(1, L + 1):
        hit = (out == 0) & (_rot_np(masks, r, L, full) == masks)
        out[hit] = r
    return out


def _class_ids_np(masks, L):
    full = (np.int64(1) << L) - 1
    best = masks.copy()
    for r in range(1, L):
        np.minimum(best, _rot_np(masks, r, L, full), out=best)
    return best


def _rotate_np(masks, shifts, L):
    full = (np.int64(1) << L) - 1
    r = shifts % L
    rot = ((masks << r) & full) | (masks >> (L - r))
    return np.where(r == 0, masks, rot)


def _types_np(masks, m, n, d):
    L = m + n
    block = L // d
    N = masks.shape[0]
    out = np.zeros((N, d), dtype=np.int64)
    rows = np.arange(N)
    ht = np.zeros(N, dtype=np.int64)
    last = np.zeros(N, dtype=np.int64)
    for i in range(L):
        ht += np.where(_bits_np(masks, L, i) == 1, -m, n)
        touch = ht == 0
        if touch.any():
            kk = (i + 1) // block
            np.add.at(out, (rows[touch], kk - last[touch] - 1), 1)
            last[touch] = kk
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _pick(backend):
    backend = backend or BACKEND
    if backend not in BACKENDS:
        raise PreconditionError(f"unknown or unavailable backend {backend!r}; have {BACKENDS}")
    return backend == "numba"


def _check_length(L):
    if L < 1 or L > MAX_MASK_BITS:
        raise PreconditionError(f"word length must be in 1..{MAX_MASK_BITS}, got {L}")


def enumerate_masks(m: int, n: int, backend: str | None = None) -> np.ndarray:
    """All masks with m x-steps and n y-steps, in lexicographic word order."""
    if m < 0 or n < 0:
        raise PreconditionError(f"step counts must be non-negative, got ({m}, {n})")
    _check_length(m + n)
    if _pick(backend):
        return _enumerate_nb(n, math.comb(m + n, n))
    return _enumerate_np(m, n)


def scan_heights(masks: np.ndarray, m: int, n: int, backend: str | None = None):
    """Return ``(is_dyck, shift)`` per word.

    ``shift`` is the smallest prefix length at which the height
    ``n * #x - m * #y`` attains its minimum (0 when the word is Dyck).
    """
    _check_length(m + n)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _pick(backend):
        return _scan_nb(masks, m, n)
    return _scan_np(masks, m, n)


def periods(masks: np.ndarray, length: int, backend: str | None = None) -> np.ndarray:
    """Smallest r in 1..length with ``rotate(w, r) == w``."""
    _check_length(length)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _pick(backend):
        return _periods_nb(masks, length)
    return _periods_np(masks, length)


def class_ids(masks: np.ndarray, length: int, backend: str | None = None) -> np.ndarray:
    """Least rotation of each mask; equal ids mean equal rotation classes."""
    _check_length(length)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _pick(backend):
        return _class_ids_nb(masks, length)
    return _class_ids_np(masks, length)


def rotate_masks(masks: np.ndarray, shifts: np.ndarray, length: int, backend: str | None = None) -> np.ndarray:
    _check_length(length)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    shifts = np.ascontiguousarray(np.broadcast_to(shifts, masks.shape), dtype=np.int64)
    if _pick(backend):
        return _rotate_nb(masks, shifts, length)
    return _rotate_np(masks, shifts, length)


def type_matrix(masks: np.ndarray, m: int, n: int, backend: str | None = None) -> np.ndarray:
    """Row k holds ``(a_1, ..., a_d)``, the type of Dyck word ``masks[k]``.

    Input words must all be Dyck; ``d = gcd(m, n)``.
    """
    _check_length(m + n)
    d = math.gcd(m, n)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if _pick(backend):
        return _types_nb(masks, m, n, d)
    return _types_np(masks, m, n, d)
