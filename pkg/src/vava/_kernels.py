"""Hot exponent-vector kernels: numba fast path, pure-numpy fallback.

Everything in this package stores monomials as rows of int64 numpy arrays
(one column per variable).  The three loops below dominate the runtime of
ideal arithmetic (antichain interreduction, membership, fiber enumeration),
so they get a compiled fast path.

Backend selection happens once at import time via the VAVA_BACKEND
environment variable:

    VAVA_BACKEND=numba   use numba @njit kernels (error if numba missing)
    VAVA_BACKEND=numpy   pure numpy, no JIT
    unset                numba when importable, numpy otherwise

``BACKEND`` records the active choice; benchmarks/bench_kernels.py compares
the two paths on representative workloads.
"""

from __future__ import annotations

import os

import numpy as np

_CHOICE = os.environ.get("VAVA_BACKEND", "").strip().lower()
if _CHOICE not in ("", "numba", "numpy"):
    raise RuntimeError("VAVA_BACKEND must be 'numba' or 'numpy', got %r" % _CHOICE)

_use_numba = False
if _CHOICE in ("", "numba"):
    try:
        from numba import njit

        _use_numba = True
    except ImportError:
        if _CHOICE == "numba":
            raise
        _use_numba = False

BACKEND = "numba" if _use_numba else "numpy"

# chunk size (in elements) for numpy broadcast fallbacks, keeps memory flat
_CHUNK = 1 << 24


def _antichain_keep_np(mat: np.ndarray, degs: np.ndarray) -> np.ndarray:
    """keep[i] is False iff some earlier kept row divides row i.

    Rows must be deduplicated and sorted by (degree, lex) ascending, so a
    proper divisor always appears earlier and has strictly smaller degree.
    """
    k = mat.shape[0]
    keep = np.ones(k, dtype=np.bool_)
    kept_rows: list[np.ndarray] = []
    kept_degs: list[int] = []
    kept_mat = None
    for i in range(k):
        if kept_mat is not None:
            lim = np.searchsorted(kept_degs, degs[i])
            if lim > 0 and (kept_mat[:lim] <= mat[i]).all(axis=1).any():
                keep[i] = False
                continue
        kept_rows.append(mat[i])
        kept_degs.append(int(degs[i]))
        kept_mat = np.vstack(kept_rows)
    return keep


def _any_divisor_batch_np(
    gens: np.ndarray, gdegs: np.ndarray, queries: np.ndarray, qdegs: np.ndarray
) -> np.ndarray:
    q, n = queries.shape
    if gens.shape[0] == 0 or q == 0:
        return np.zeros(q, dtype=np.bool_)
    out = np.empty(q, dtype=np.bool_)
    step = max(1, _CHUNK // max(1, gens.shape[0] * n))
    for lo in range(0, q, step):
        hi = min(q, lo + step)
        block = (gens[None, :, :] <= queries[lo:hi, None, :]).all(axis=2)
        out[lo:hi] = block.any(axis=1)
    return out


def _divides_mask_np(bases: np.ndarray, targets: np.ndarray) -> np.ndarray:
    t, n = targets.shape
    b = bases.shape[0]
    if t == 0 or b == 0:
        return np.zeros((t, b), dtype=np.bool_)
    out = np.empty((t, b), dtype=np.bool_)
    step = max(1, _CHUNK // max(1, b * n))
    for lo in range(0, t, step):
        hi = min(t, lo + step)
        out[lo:hi] = (bases[None, :, :] <= targets[lo:hi, None, :]).all(axis=2)
    return out


if _use_numba:

    @njit(cache=True)
    def _antichain_keep_nb(mat, degs):  # pragma: no cover - exercised via wrapper
        k, n = mat.shape
        keep = np.ones(k, dtype=np.bool_)
        kept = np.empty(k, dtype=np.int64)
        nkept = 0
        for i in range(k):
            dominated = False
            for kj in range(nkept):
                j = kept[kj]
                if degs[j] >= degs[i]:
                    break
                ok = True
                for c in range(n):
                    if mat[j, c] > mat[i, c]:
                        ok = False
                        break
                if ok:
                    dominated = True
                    break
            if dominated:
                keep[i] = False
            else:
                kept[nkept] = i
                nkept += 1
        return keep

    @njit(cache=True)
    def _any_divisor_batch_nb(gens, gdegs, queries, qdegs):  # pragma: no cover
        q, n = queries.shape
        g = gens.shape[0]
        out = np.zeros(q, dtype=np.bool_)
        for t in range(q):
            for j in range(g):
                if gdegs[j] > qdegs[t]:
                    break
                ok = True
                for c in range(n):
                    if gens[j, c] > queries[t, c]:
                        ok = False
                        break
                if ok:
                    out[t] = True
                    break
        return out

    @njit(cache=True)
    def _divides_mask_nb(bases, targets):  # pragma: no cover
        t, n = targets.shape
        b = bases.shape[0]
        out = np.zeros((t, b), dtype=np.bool_)
        for i in range(t):
            for j in range(b):
                ok = True
                for c in range(n):
                    if bases[j, c] > targets[i, c]:
                        ok = False
                        break
                out[i, j] = ok
        return out


def antichain_keep(mat: np.ndarray, degs: np.ndarray) -> np.ndarray:
    """Mask of rows not divisible by an earlier row (input sorted, deduped)."""
    if mat.shape[0] <= 1:
        return np.ones(mat.shape[0], dtype=np.bool_)
    if _use_numba:
        return _antichain_keep_nb(np.ascontiguousarray(mat), np.ascontiguousarray(degs))
    return _antichain_keep_np(mat, degs)


def any_divisor_batch(
    gens: np.ndarray, gdegs: np.ndarray, queries: np.ndarray, qdegs: np.ndarray
) -> np.ndarray:
    """out[t] = True iff some generator row divides queries[t].

    ``gens`` must be sorted by degree ascending (the canonical ideal order).
    """
    if _use_numba and gens.shape[0] > 0 and queries.shape[0] > 0:
        return _any_divisor_batch_nb(
            np.ascontiguousarray(gens),
            np.ascontiguousarray(gdegs),
            np.ascontiguousarray(queries),
            np.ascontiguousarray(qdegs),
        )
    return _any_divisor_batch_np(gens, gdegs, queries, qdegs)


def divides_mask(bases: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Full divisibility table: out[i, j] = bases[j] divides targets[i]."""
    if _use_numba and bases.shape[0] > 0 and targets.shape[0] > 0:
        return _divides_mask_nb(
            np.ascontiguousarray(bases), np.ascontiguousarray(targets)
        )
    return _divides_mask_np(bases, targets)


def warmup() -> None:
    """Trigger JIT compilation of all kernels (no-op on the numpy backend)."""
    m = np.array([[0, 1], [1, 0], [1, 1]], dtype=np.int64)
    d = m.sum(axis=1)
    antichain_keep(m, d)
    any_divisor_batch(m, d, m, d)
    divides_mask(m, m)
