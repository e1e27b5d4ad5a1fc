"""Exact linear algebra over GF(2): coboundary matrices, rank, solving, mod-2 Betti numbers.

Matrices are stored as sparse row incidence (CSR). Two elimination paths
share one interface: word-parallel elimination on packed uint64 rows for
matrices up to ``DENSE_BITS_LIMIT`` bits, and low-pivot column reduction
on sparse columns beyond that. Both pick the first available pivot, so
results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .cochains import Cochain, OrbitCochain, OrbitSlice, orbit_rep, orbit_slice
from .errors import InvalidArgumentError
from .graphs import Graph, Involution
from .hom import Cell, ComplexSlice, HomComplex, facets

DENSE_BITS_LIMIT = 1 << 26


@dataclass(frozen=True, eq=False)
class GF2Matrix:
    rows: int
    cols: int
    indptr: np.ndarray
    indices: np.ndarray
    row_labels: tuple | None = None
    col_labels: tuple | None = None

    def __post_init__(self) -> None:
        if len(self.indptr) != self.rows + 1:
            raise InvalidArgumentError("indptr length does not match row count")
        if len(self.indices) and (self.indices.min() < 0 or self.indices.max() >= self.cols):
            raise InvalidArgumentError("column index out of bounds")

    @classmethod
    def from_rows(cls, row_sets: Sequence[Sequence[int]], cols: int, **labels) -> GF2Matrix:
        indptr = np.zeros(len(row_sets) + 1, dtype=np.int64)
        flat: list[int] = []
        for i, cols_i in enumerate(row_sets):
            flat.extend(sorted(cols_i))
            indptr[i + 1] = len(flat)
        return cls(len(row_sets), cols, indptr, np.array(flat, dtype=np.int64), **labels)

    @classmethod
    def from_dense(cls, dense) -> GF2Matrix:
        a = np.asarray(dense, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise InvalidArgumentError("expected a 2-d array")
        return cls.from_rows([np.flatnonzero(row).tolist() for row in a], a.shape[1])

    @classmethod
    def identity(cls, k: int) -> GF2Matrix:
        return cls.from_rows([[i] for i in range(k)], k)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.indices)

    def row(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        rid = np.repeat(np.arange(self.rows), np.diff(self.indptr))
        np.bitwise_xor.at(out, (rid, self.indices), 1)
        return out

    def to_packed(self, extra_cols: int = 0) -> np.ndarray:
        """Rows as little-endian uint64 words; ``extra_cols`` zero columns are appended."""
        nwords = max(1, (self.cols + extra_cols + 63) // 64)
        data = np.zeros((self.rows, nwords), dtype=np.uint64)
        rid = np.repeat(np.arange(self.rows), np.diff(self.indptr))
        bits = np.left_shift(np.uint64(1), (self.indices & 63).astype(np.uint64))
        np.bitwise_xor.at(data, (rid, self.indices >> 6), bits)
        return data

    def to_csc(self) -> tuple[np.ndarray, np.ndarray]:
        """Column-major incidence: (indptr over columns, sorted row indices)."""
        rid = np.repeat(np.arange(self.rows, dtype=np.int64), np.diff(self.indptr))
        order = np.lexsort((rid, self.indices))
        counts = np.bincount(self.indices, minlength=self.cols)
        indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        return indptr, rid[order]

    def matvec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.uint8) & 1
        if len(x) != self.cols:
            raise InvalidArgumentError(f"vector of length {len(x)} for {self.cols} columns")
        rid = np.repeat(np.arange(self.rows), np.diff(self.indptr))
        return (np.bincount(rid, weights=x[self.indices], minlength=self.rows).astype(np.int64) & 1).astype(np.uint8)

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        if self.cols != other.rows:
            raise InvalidArgumentError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            acc: set[int] = set()
            for k in self.row(i):
                acc.symmetric_difference_update(other.row(int(k)).tolist())
            out.append(acc)
        return GF2Matrix.from_rows(out, other.cols)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def augment(self, b) -> GF2Matrix:
        """The matrix with ``b`` appended as a last column."""
        b = np.asarray(b, dtype=np.uint8) & 1
        if len(b) != self.rows:
            raise InvalidArgumentError("right-hand side length does not match row count")
        rows = [self.row(i).tolist() + ([self.cols] if b[i] else []) for i in range(self.rows)]
        return GF2Matrix.from_rows(rows, self.cols + 1)

    def to_text(self) -> str:
        dense = self.to_dense()
        lines = [f"gf2 rows={self.rows} cols={self.cols}"]
        lines += ["".join("1" if v else "0" for v in row) for row in dense]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> GF2Matrix:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        head = dict(p.split("=", 1) for p in lines[0].split()[1:]) if lines and lines[0].startswith("gf2") else None
        if head is None:
            raise InvalidArgumentError("missing 'gf2 rows=.. cols=..' header")
        rows, cols = int(head["rows"]), int(head["cols"])
        body = lines[1:]
        if len(body) != rows or any(len(ln) != cols or set(ln) - {"0", "1"} for ln in body):
            raise InvalidArgumentError("matrix body does not match header")
        return cls.from_rows([[j for j, ch in enumerate(ln) if ch == "1"] for ln in body], cols)


def _pick_method(M: GF2Matrix, method: str, extra: int = 0) -> str:
    if method == "auto":
        return "dense" if M.rows * (M.cols + extra) <= DENSE_BITS_LIMIT else "sparse"
    if method not in ("dense", "sparse"):
        raise InvalidArgumentError(f"unknown method {method!r}")
    return method


def rank(M: GF2Matrix, method: str = "auto") -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    if _pick_method(M, method) == "dense":
        return int(kernels.dense_rank(M.to_packed(), M.cols))
    indptr, indices = M.to_csc()
    return int(kernels.sparse_reduce(indptr, indices)[0])


def solve(M: GF2Matrix, b, method: str = "auto") -> np.ndarray | None:
    """Some x with Mx = b over GF(2), or None if b is not in the column span."""
    b = np.asarray(b, dtype=np.uint8) & 1
    if len(b) != M.rows:
        raise InvalidArgumentError(f"right-hand side of length {len(b)} for {M.rows} rows")
    if not b.any():
        return np.zeros(M.cols, dtype=np.uint8)
    if M.cols == 0:
        return None
    if _pick_method(M, method, extra=1) == "dense":
        packed = M.to_packed(extra_cols=1)
        hit = np.flatnonzero(b)
        packed[hit, M.cols >> 6] ^= np.uint64(1) << np.uint64(M.cols & 63)
        x = kernels.dense_solve(packed, M.cols + 1)
    else:
        indptr, indices = M.to_csc()
        _, support = kernels.sparse_reduce(indptr, indices, np.flatnonzero(b))
        if support is None:
            x = None
        else:
            x = np.zeros(M.cols, dtype=np.uint8)
            x[support] = 1
    if x is None:
        return None
    x = np.asarray(x, dtype=np.uint8)
    if not np.array_equal(M.matvec(x), b):
        raise RuntimeError("GF(2) solver produced a vector that does not reproduce the right-hand side")
    return x


def in_span_by_rank(M: GF2Matrix, b, method: str = "auto") -> bool:
    """Membership test by rank(M) == rank([M | b])."""
    return rank(M, method) == rank(M.augment(b), method)


Basis = ComplexSlice | OrbitSlice


def coboundary_matrix(lower: Basis, upper: Basis) -> GF2Matrix:
    """Matrix of the coboundary from ``lower`` (columns) to ``upper`` (rows).

    Built from the facets of each upper cell. For orbit bases the entry is
    the number of facets of the upper representative lying in the lower
    orbit, mod 2.
    """
    if type(lower) is not type(upper):
        raise InvalidArgumentError("cannot mix cell and orbit bases")
    if upper.dimension != lower.dimension + 1:
        raise InvalidArgumentError(f"dimensions {lower.dimension} -> {upper.dimension} are not consecutive")
    col_index = lower.index
    quotient = isinstance(lower, OrbitSlice)
    if quotient:
        if (lower.space, lower.involution) != (upper.space, upper.involution):
            raise InvalidArgumentError("orbit bases come from different quotients")
        space, psi = lower.space, lower.involution
    elif (lower.T, lower.G) != (upper.T, upper.G):
        raise InvalidArgumentError("slices come from different complexes")
    rows = []
    for tau in upper.cells:
        acc: set[int] = set()
        for f in facets(tau):
            j = col_index[orbit_rep(space, f, psi) if quotient else f]
            acc ^= {j}
        rows.append(acc)
    return GF2Matrix.from_rows(rows, len(lower.cells), row_labels=upper.cells, col_labels=lower.cells)


def indicator(cochain: Cochain | OrbitCochain, basis: Basis) -> np.ndarray:
    """Characteristic vector of a cochain over a basis of the same dimension."""
    if cochain.dimension != basis.dimension:
        raise InvalidArgumentError("cochain and basis dimensions differ")
    v = np.zeros(len(basis), dtype=np.uint8)
    idx = basis.index
    for c in cochain.support:
        if c not in idx:
            raise InvalidArgumentError("cochain has support outside the basis")
        v[idx[c]] = 1
    return v


def cochain_from_vector(x, basis: Basis) -> Cochain | OrbitCochain:
    cells = frozenset(basis.cells[i] for i in np.flatnonzero(np.asarray(x)))
    if isinstance(basis, OrbitSlice):
        return OrbitCochain(basis.space, basis.involution, basis.dimension, cells)
    return Cochain(basis.space, basis.dimension, cells)


def bases(T: Graph, G: Graph, involution: Involution | None = None, jobs: int = 1) -> list[Basis]:
    """Per-dimension bases of Hom(T, G) (or its quotient), up to the top nonempty dimension."""
    hom = HomComplex(T, G)
    if involution is not None and (len(involution) != T.vertex_count or not involution.is_automorphism_of(T)):
        raise InvalidArgumentError("involution is not an automorphism of T")
    out: list[Basis] = []
    for d in range(hom.max_dim_bound + 1):
        s = hom.slice(d, jobs=jobs)
        out.append(orbit_slice(s, involution) if involution is not None else s)
    while out and len(out[-1]) == 0:
        out.pop()
    return out


def betti_mod2(T: Graph, G: Graph, involution: Involution | None = None, method: str = "auto", jobs: int = 1) -> list[int]:
    """b_d = N_d - rank(delta_d) - rank(delta_{d-1}) with mod-2 coefficients."""
    bs = bases(T, G, involution, jobs=jobs)
    ranks = [rank(coboundary_matrix(bs[d], bs[d + 1]), method) for d in range(len(bs) - 1)]
    ranks.append(0)
    return [len(bs[d]) - ranks[d] - (ranks[d - 1] if d else 0) for d in range(len(bs))]
