"""Exhaustive histogram kernels over all matchings of 1..2n.

Two interchangeable backends compute the same int64 histogram:

* ``numba``: iterative depth-first walk compiled with ``@njit(nogil=True)``,
  so split branches can run on separate threads.
* ``numpy``: level-by-level expansion of a block of partial partner arrays,
  chunked to bound memory.

``CHORDLAB_DISABLE_NUMBA=1`` (or a missing numba install) selects numpy.
"""
import os

import numpy as np

FILTER_ALL = 0
FILTER_MINLEN = 1
FILTER_NONCROSSING = 2
FILTER_NONNESTING = 3

STAT_NONE = 0
STAT_SC = 1
STAT_LR = 2

# Rows per block in the numpy expansion; ~2M rows of int8 partners is tens of MB.
NUMPY_BLOCK_ROWS = 1 << 21


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False


def _walk(n, filt, fk, stat, sk, lo, hi, out):
    """Depth-first walk; point 1 is paired only with partners in [lo, hi]."""
    size = 2 * n
    if n == 0:
        out[0] += 1
        return
    partner = np.zeros(size + 2, np.int64)
    opener = np.zeros(n, np.int64)
    cand = np.zeros(n, np.int64)
    opener[0] = 1
    cand[0] = 1
    depth = 0
    while depth >= 0:
        i = opener[depth]
        j = cand[depth]
        if j > i:
            partner[i] = 0
            partner[j] = 0
        j += 1
        if depth == 0 and j < lo:
            j = lo
        top = hi if depth == 0 else size
        while j <= top:
            if partner[j] == 0:
                ok = True
                if filt == 1:
                    ok = j - i >= fk
                elif filt == 2:
                    for p in range(i + 1, j):
                        if partner[p] != 0 and partner[p] < i:
                            ok = False
                            break
                elif filt == 3:
                    for p in range(j + 1, size + 1):
                        if partner[p] != 0 and partner[p] < i:
                            ok = False
                            break
                if ok:
                    break
            j += 1
        if j > top:
            cand[depth] = i
            depth -= 1
            continue
        cand[depth] = j
        partner[i] = j
        partner[j] = i
        if depth == n - 1:
            v = 0
            if stat == 1:
                for p in range(1, size + 1):
                    if partner[p] - p == sk:
                        v += 1
            elif stat == 2:
                for p in range(1, size):
                    if partner[p] > p and partner[p + 1] < p + 1:
                        v += 1
            out[v] += 1
        else:
            k = i + 1
            while partner[k] != 0:
                k += 1
            depth += 1
            opener[depth] = k
            cand[depth] = k


if HAVE_NUMBA:
    _walk_jit = numba.njit(nogil=True, cache=True)(_walk)
else:  # pragma: no cover
    _walk_jit = None


def histogram_numba(n, filt=FILTER_ALL, fk=1, stat=STAT_NONE, sk=1, lo=2, hi=None):
    if _walk_jit is None:
        raise RuntimeError("numba is not available")
    hi = 2 * n if hi is None else hi
    out = np.zeros(2 * n + 1, np.int64)
    _walk_jit(n, filt, fk, stat, sk, lo, hi, out)
    return out


def _expand(block, n, filt, fk):
    """Pair the smallest unmatched point of every row with each admissible partner."""
    m, width = block.shape
    free = block == 0
    r = int(free[0].sum()) - 1
    first = free.argmax(axis=1)
    free[np.arange(m), first] = False
    rows, cols = np.nonzero(free)
    rows = rows.reshape(m, r)
    cols = cols.reshape(m, r)
    keep = np.ones((m, r), bool)
    if filt == FILTER_MINLEN:
        keep &= (cols - first[:, None]) >= fk
    elif filt == FILTER_NONCROSSING or filt == FILTER_NONNESTING:
        # points already matched to something left of the new startpoint
        old = (block != 0) & (block <= first[:, None])
        if filt == FILTER_NONCROSSING:
            c = np.cumsum(old, axis=1)
            keep &= np.take_along_axis(c, cols, axis=1) == c[np.arange(m), first][:, None]
        else:
            c = np.cumsum(old[:, ::-1], axis=1)[:, ::-1]
            c = np.concatenate([c, np.zeros((m, 1), c.dtype)], axis=1)
            keep &= np.take_along_axis(c, cols + 1, axis=1) == 0
    rows = rows[keep]
    cols = cols[keep]
    starts = first[rows]
    child = block[rows]
    idx = np.arange(child.shape[0])
    child[idx, starts] = cols + 1
    child[idx, cols] = starts + 1
    return child


def _stat_values(block, stat, sk):
    pos = np.arange(1, block.shape[1] + 1)
    if stat == STAT_SC:
        return ((block - pos) == sk).sum(axis=1)
    if stat == STAT_LR:
        start = block > pos
        return (start[:, :-1] & ~start[:, 1:]).sum(axis=1)
    return np.zeros(block.shape[0], np.int64)


def histogram_numpy(n, filt=FILTER_ALL, fk=1, stat=STAT_NONE, sk=1, lo=2, hi=None):
    size = 2 * n
    hi = size if hi is None else hi
    out = np.zeros(size + 1, np.int64)
    if n == 0:
        out[0] += 1
        return out
    dtype = np.int8 if size < 127 else np.int16
    root = np.zeros((1, size), dtype)
    level1 = _expand(root, n, filt, fk)
    partners = level1[:, 0].astype(np.int64)
    level1 = level1[(partners >= lo) & (partners <= hi)]
    stack = [(level1, 1)]
    while stack:
        block, depth = stack.pop()
        if block.shape[0] == 0:
            continue
        if depth == n:
            out += np.bincount(_stat_values(block, stat, sk), minlength=size + 1)[: size + 1]
            continue
        fan = size - 2 * depth - 1
        step = max(1, NUMPY_BLOCK_ROWS // fan)
        for s in range(0, block.shape[0], step):
            stack.append((_expand(block[s:s + step], n, filt, fk), depth + 1))
    return out


def backend():
    """Name of the backend selected by the environment."""
    if HAVE_NUMBA and not _env_flag("CHORDLAB_DISABLE_NUMBA"):
        return "numba"
    return "numpy"


def histogram(n, filt=FILTER_ALL, fk=1, stat=STAT_NONE, sk=1, lo=2, hi=None):
    if backend() == "numba":
        return histogram_numba(n, filt, fk, stat, sk, lo, hi)
    return histogram_numpy(n, filt, fk, stat, sk, lo, hi)
