"""Pure-Python kernels. Reference semantics for ``_ckernels`` and the import-time fallback.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def enumerate_profile(earlier, common, by_size, allowed0, sizes):
    """Depth-first enumeration of cells with fixed per-vertex set sizes.

    ``earlier[x]`` lists the T-neighbors of ``x`` with smaller index,
    ``common[S]`` is the common G-neighborhood of the color mask ``S``,
    ``by_size[k]`` lists all color masks of popcount ``k`` in increasing
    order, and ``allowed0[x]`` restricts the colors available at ``x``.
    Returns a list of mask tuples.
    """
    n_t = len(sizes)
    out = []
    cur = [0] * n_t

    def rec(x):
        if x == n_t:
            out.append(tuple(cur))
            return
        allowed = allowed0[x]
        for y in earlier[x]:
            allowed &= common[cur[y]]
        if not allowed:
            return
        blocked = ~allowed
        for s in by_size[sizes[x]]:
            if not s & blocked:
                cur[x] = s
                rec(x + 1)

    rec(0)
    return out


def _rows_to_ints(data: np.ndarray) -> list[int]:
    return [int.from_bytes(row.tobytes(), "little") for row in data]


def _echelon(rows: list[int]) -> dict[int, int]:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            low = (row & -row).bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                break
            row ^= p
    return pivots


def dense_rank(data: np.ndarray, ncols: int) -> int:
    """Rank of packed rows (little-endian uint64 words, bit j of word w is column 64w+j)."""
    return len(_echelon(_rows_to_ints(data)))


def dense_solve(data: np.ndarray, ncols: int):
    """Solve the augmented system whose right-hand side is column ``ncols-1``.

    Returns a uint8 vector of length ``ncols-1`` or None when inconsistent.
    """
    rhs = int(ncols) - 1
    pivots = _echelon(_rows_to_ints(data))
    if rhs in pivots:
        return None
    xfull = 1 << rhs
    for low in sorted(pivots, reverse=True):
        rest = pivots[low] & ~(1 << low)
        if (rest & xfull).bit_count() & 1:
            xfull |= 1 << low
    x = np.zeros(rhs, dtype=np.uint8)
    for j in range(rhs):
        if (xfull >> j) & 1:
            x[j] = 1
    return x


def sparse_reduce(indptr, indices, target=None):
    """Low-pivot column reduction of a sparse GF(2) matrix in CSC form.

    Returns ``(rank, x)``. With a ``target`` (sorted row indices of b),
    ``x`` is a sorted array of column indices with Mx = b, or None when
    b is outside the column span. Without a target ``x`` is None.
    """
    ncols = len(indptr) - 1
    pivot_of: dict[int, int] = {}
    reduced: dict[int, set] = {}
    history: dict[int, list[int]] = {}
    for j in range(ncols):
        col: set[int] = set()
        for i in indices[indptr[j]:indptr[j + 1]]:
            col ^= {int(i)}
        hist: list[int] = []
        while col:
            low = max(col)
            p = pivot_of.get(low)
            if p is None:
                pivot_of[low] = j
                reduced[j] = col
                history[j] = hist
                break
            col ^= reduced[p]
            hist.append(p)
    rank = len(pivot_of)
    if target is None:
        return rank, None
    b = set(int(i) for i in target)
    flags: set[int] = set()
    while b:
        p = pivot_of.get(max(b))
        if p is None:
            return rank, None
        b ^= reduced[p]
        flags ^= {p}
    x = []
    for j in sorted(history, reverse=True):
        if j in flags:
            x.append(j)
            for k in history[j]:
                flags ^= {k}
    return rank, np.array(sorted(x), dtype=np.int64)
