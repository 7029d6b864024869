"""Hot kernels for window hashing, collision search and tuple enumeration.

Every kernel exists twice: a numba ``@njit`` version and a vectorised numpy
version.  The numba path is used when numba imports cleanly and the
environment variable ``ORIENTSEQ_DISABLE_NUMBA`` is unset (or ``0``).  Both
paths return identical results; ``tests/test_accel.py`` checks that.

Window codes are base-``q`` integers with the first window entry most
significant, so ``code(w) == code(v)`` iff ``w == v``.  Callers must ensure
``q**n`` fits in int64 (see :func:`codes_fit`).
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("ORIENTSEQ_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by ORIENTSEQ_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

_CODE_LIMIT = 2**62


def codes_fit(q: int, n: int) -> bool:
    return q**n < _CODE_LIMIT


# --------------------------------------------------------------------------
# numpy implementations

def _np_window_codes(terms, q, n, mode):
    # mode 0: forward, 1: reversed, 2: reversed negative
    m = terms.shape[0]
    idx = np.arange(m, dtype=np.int64)
    codes = np.zeros(m, dtype=np.int64)
    src = terms if mode != 2 else (q - terms) % q
    order = range(n) if mode == 0 else range(n - 1, -1, -1)
    for k in order:
        codes = codes * q + src[(idx + k) % m]
    return codes


def _np_first_repeat(codes):
    m = codes.shape[0]
    if m < 2:
        return -1, -1
    order = np.argsort(codes, kind="stable")
    s = codes[order]
    dup = s[1:] == s[:-1]
    if not dup.any():
        return -1, -1
    # first element of every run of equal codes that has a successor
    starts = np.flatnonzero(dup & np.concatenate(([True], ~dup[:-1])))
    firsts = order[starts]
    k = int(np.argmin(firsts))
    return int(firsts[k]), int(order[starts[k] + 1])


def _np_first_match(a, b):
    hit = np.isin(a, b)
    if not hit.any():
        return -1, -1
    i = int(np.argmax(hit))
    j = int(np.argmax(b == a[i]))
    return i, j


def _np_classify(q, n, start, stop):
    codes = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((n, codes.shape[0]), dtype=np.int64)
    rest = codes.copy()
    for k in range(n - 1, -1, -1):
        digits[k] = rest % q
        rest //= q
    neg = (q - digits) % q
    pal = np.all(digits == digits[::-1], axis=0)
    anti = np.all(digits == neg[::-1], axis=0)
    selfneg = np.all(digits == neg, axis=0)
    out = np.zeros(5, dtype=np.int64)
    out[0] = np.count_nonzero(pal & anti)
    out[1] = np.count_nonzero(selfneg & ~pal)
    out[2] = np.count_nonzero(pal & ~anti)
    out[3] = np.count_nonzero(anti & ~pal)
    out[4] = np.count_nonzero(~pal & ~anti & ~selfneg)
    return out


# --------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:
    # 2**64 / golden ratio, as a wrapped int64 multiplier
    _GOLDEN = np.int64(-7046029254386353131)

    @njit(cache=True)
    def _nb_window_codes(terms, q, n, mode):
        m = terms.shape[0]
        codes = np.zeros(m, dtype=np.int64)
        for i in range(m):
            c = 0
            for k in range(n):
                if mode == 0:
                    v = terms[(i + k) % m]
                else:
                    v = terms[(i + n - 1 - k) % m]
                    if mode == 2:
                        v = (q - v) % q
                c = c * q + v
            codes[i] = c
        return codes

    @njit(cache=True)
    def _nb_table(values):
        # open addressing: slot -> smallest index holding that value, -1 if empty
        size = 1
        while size < 2 * values.shape[0]:
            size *= 2
        return np.full(size, -1, dtype=np.int64), size - 1

    @njit(cache=True)
    def _nb_slot(table, mask, values, v):
        h = (v * _GOLDEN) & mask
        while table[h] >= 0 and values[table[h]] != v:
            h = (h + 1) & mask
        return h

    @njit(cache=True)
    def _nb_first_repeat(codes):
        m = codes.shape[0]
        table, mask = _nb_table(codes)
        best_i = -1
        best_j = -1
        for j in range(m):
            h = _nb_slot(table, mask, codes, codes[j])
            f = table[h]
            if f < 0:
                table[h] = j
            elif best_i < 0 or f < best_i:
                # first hit for this f has the smallest j
                best_i = f
                best_j = j
        return best_i, best_j

    @njit(cache=True)
    def _nb_first_match(a, b):
        table, mask = _nb_table(b)
        for j in range(b.shape[0]):
            h = _nb_slot(table, mask, b, b[j])
            if table[h] < 0:
                table[h] = j
        for i in range(a.shape[0]):
            h = _nb_slot(table, mask, b, a[i])
            if table[h] >= 0:
                return i, table[h]
        return -1, -1

    @njit(cache=True)
    def _nb_classify(q, n, start, stop):
        out = np.zeros(5, dtype=np.int64)
        digits = np.empty(n, dtype=np.int64)
        for code in range(start, stop):
            rest = code
            for k in range(n - 1, -1, -1):
                digits[k] = rest % q
                rest //= q
            pal = True
            anti = True
            selfneg = True
            for k in range(n):
                d = digits[k]
                r = digits[n - 1 - k]
                if d != r:
                    pal = False
                if d != (q - r) % q:
                    anti = False
                if d != (q - d) % q:
                    selfneg = False
            if pal and anti:
                out[0] += 1
            elif selfneg and not pal:
                out[1] += 1
            elif pal:
                out[2] += 1
            elif anti:
                out[3] += 1
            else:
                out[4] += 1
        return out


# --------------------------------------------------------------------------
# dispatch

def window_codes(terms: np.ndarray, q: int, n: int, mode: int = 0, backend: str | None = None) -> np.ndarray:
    """Codes of all ``m`` cyclic ``n``-windows (mode 0), their reverses (1) or reversed negatives (2)."""
    terms = np.ascontiguousarray(terms, dtype=np.int64)
    if _use_numba(backend):
        return _nb_window_codes(terms, q, n, mode)
    return _np_window_codes(terms, q, n, mode)


def first_repeat(codes: np.ndarray, backend: str | None = None) -> tuple[int, int]:
    """Lexicographically first ``(i, j)``, ``i < j``, with ``codes[i] == codes[j]``; ``(-1, -1)`` if none."""
    if _use_numba(backend):
        i, j = _nb_first_repeat(codes)
    else:
        i, j = _np_first_repeat(codes)
    return int(i), int(j)


def first_match(a: np.ndarray, b: np.ndarray, backend: str | None = None) -> tuple[int, int]:
    """Lexicographically first ``(i, j)`` with ``a[i] == b[j]``; ``(-1, -1)`` if none."""
    if _use_numba(backend):
        i, j = _nb_first_match(a, b)
    else:
        i, j = _np_first_match(a, b)
    return int(i), int(j)


def classify_tuples(q: int, n: int, backend: str | None = None, chunk: int = 1 << 20) -> np.ndarray:
    """Counts ``[fixed_both, negself, palindromic, antipalindromic, free]`` over all ``q**n`` tuples."""
    total = q**n
    out = np.zeros(5, dtype=np.int64)
    nb = _use_numba(backend)
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        out += _nb_classify(q, n, start, stop) if nb else _np_classify(q, n, start, stop)
    return out


def _use_numba(backend):
    if backend is None:
        return HAVE_NUMBA
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return True
    if backend == "numpy":
        return False
    raise ValueError(f"unknown backend {backend!r}")
