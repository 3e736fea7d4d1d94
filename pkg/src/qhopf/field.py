"""Exact linear algebra over the prime field GF(p).

Matrices are numpy integer arrays (dense) or scipy.sparse matrices; every
routine reduces entries mod p on entry and returns int64 arrays with entries
in [0, p).  Large sparse matrices are split into the connected components of
their row/column incidence graph before elimination, which is what makes the
bar-complex differentials of graded algebras cheap.
"""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .errors import InputError, ResourceLimit

# Above this many entries a block is eliminated with the dict-of-rows routine.
DENSE_BLOCK_ENTRIES = 12_000_000
# Matrices with more columns than this are always handled as sparse.
DENSE_COLUMN_LIMIT = 20_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise InputError(f"characteristic must be prime, got {p!r}")
    if p >= 2**31:
        raise InputError("characteristic too large for int64 elimination")
    return int(p)


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(int(a), -1, p)


def as_dense(m, p: int) -> np.ndarray:
    if sp.issparse(m):
        m = m.toarray()
    a = np.array(m, dtype=np.int64)
    if a.ndim != 2:
        raise InputError(f"expected a 2-d matrix, got shape {a.shape}")
    return a % p


def _echelon(a: np.ndarray, p: int, full: bool) -> tuple[np.ndarray, list[int]]:
    # a is modified in place; rows above the pivot are cleared only if full.
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * inv(int(a[r, c]), p) % p
        col = a[:, c].copy()
        col[r] = 0
        if not full:
            col[:r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a, piv = _echelon(as_dense(m, p), p, full=True)
    return a, piv


# ---------------------------------------------------------------- sparse side

def _sparse_rank_rows(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {k: v % p for k, v in row.items() if v % p}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                s = inv(row[c], p)
                pivots[c] = {k: v * s % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def blocks(m) -> list[tuple[np.ndarray, np.ndarray]]:
    """Connected components of the bipartite row/column graph of ``m``.

    Returns (row indices, column indices) per component that has at least
    one nonzero entry.  Zero rows and zero columns are omitted.
    """
    coo = sp.coo_matrix(m)
    nr, nc = coo.shape
    mask = coo.data != 0
    r, c = coo.row[mask], coo.col[mask]
    if r.size == 0:
        return []
    graph = sp.coo_matrix((np.ones(r.size), (r, nr + c)), shape=(nr + nc, nr + nc))
    _, labels = connected_components(graph, directed=False)
    used_rows = np.unique(r)
    used_cols = np.unique(c)
    row_lab = labels[used_rows]
    col_lab = labels[nr + used_cols]
    out = []
    order_r = np.argsort(row_lab, kind="stable")
    order_c = np.argsort(col_lab, kind="stable")
    labs_r, starts_r = np.unique(row_lab[order_r], return_index=True)
    labs_c, starts_c = np.unique(col_lab[order_c], return_index=True)
    ends_r = list(starts_r[1:]) + [order_r.size]
    ends_c = list(starts_c[1:]) + [order_c.size]
    cmap = {lab: (s, e) for lab, s, e in zip(labs_c, starts_c, ends_c)}
    for lab, s, e in zip(labs_r, starts_r, ends_r):
        cs, ce = cmap[lab]
        out.append((used_rows[order_r[s:e]], used_cols[order_c[cs:ce]]))
    return out


def _block_dense(csr, ri, ci, p):
    return csr[ri][:, ci].toarray().astype(np.int64) % p


def _to_csr(m, p):
    csr = sp.csr_matrix(m, dtype=np.int64)
    csr.data %= p
    csr.eliminate_zeros()
    return csr


def _is_large(m) -> bool:
    return sp.issparse(m) or m.shape[1] > DENSE_COLUMN_LIMIT


def rank(m, p: int) -> int:
    """Row rank over GF(p)."""
    if not _is_large(m):
        return len(_echelon(as_dense(m, p), p, full=False)[1])
    csr = _to_csr(m, p)
    total = 0
    for ri, ci in blocks(csr):
        if ri.size * ci.size <= DENSE_BLOCK_ENTRIES:
            a = _block_dense(csr, ri, ci, p)
            if a.shape[0] > a.shape[1]:
                a = a.T.copy()
            total += len(_echelon(a, p, full=False)[1])
        else:
            sub = csr[ri][:, ci]
            rows = [dict(zip(sub.indices[sub.indptr[i]:sub.indptr[i + 1]].tolist(),
                             sub.data[sub.indptr[i]:sub.indptr[i + 1]].tolist()))
                    for i in range(sub.shape[0])]
            total += _sparse_rank_rows(rows, p)
    return total


def _dense_kernel(a: np.ndarray, p: int) -> np.ndarray:
    cols = a.shape[1]
    red, piv = _echelon(a.copy(), p, full=True)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(piv):
            basis[k, c] = (-red[r, f]) % p
    return basis


def kernel_basis(m, p: int) -> list[np.ndarray]:
    """Basis of {x : m x = 0}; its size is cols - rank."""
    return list(kernel_matrix(m, p))


def kernel_matrix(m, p: int) -> np.ndarray:
    """Kernel basis stacked as the rows of a matrix."""
    if not _is_large(m):
        return _dense_kernel(as_dense(m, p), p)
    csr = _to_csr(m, p)
    ncols = csr.shape[1]
    out = []
    covered = np.zeros(ncols, dtype=bool)
    for ri, ci in blocks(csr):
        covered[ci] = True
        if ri.size * ci.size > DENSE_BLOCK_ENTRIES:
            raise ResourceLimit(f"kernel block {ri.size}x{ci.size} exceeds dense budget")
        kb = _dense_kernel(_block_dense(csr, ri, ci, p), p)
        if kb.size:
            full = np.zeros((kb.shape[0], ncols), dtype=np.int64)
            full[:, ci] = kb
            out.append(full)
    free = np.flatnonzero(~covered)
    if free.size:
        unit = np.zeros((free.size, ncols), dtype=np.int64)
        unit[np.arange(free.size), free] = 1
        out.append(unit)
    if not out:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.vstack(out)


def image_matrix(m, p: int) -> np.ndarray:
    """Basis of the column space of ``m`` stacked as rows."""
    if not _is_large(m):
        red, piv = _echelon(as_dense(m, p).T.copy(), p, full=True)
        return red[: len(piv)]
    csr = _to_csr(m, p)
    nrows = csr.shape[0]
    out = []
    for ri, ci in blocks(csr):
        if ri.size * ci.size > DENSE_BLOCK_ENTRIES:
            raise ResourceLimit(f"image block {ri.size}x{ci.size} exceeds dense budget")
        red, piv = _echelon(_block_dense(csr, ri, ci, p).T.copy(), p, full=True)
        if piv:
            full = np.zeros((len(piv), nrows), dtype=np.int64)
            full[:, ri] = red[: len(piv)]
            out.append(full)
    if not out:
        return np.zeros((0, nrows), dtype=np.int64)
    return np.vstack(out)


def solve_linear(m, rhs, p: int) -> np.ndarray | None:
    """Some x with m x = rhs, or None when the system is inconsistent."""
    a = as_dense(m, p)
    b = np.asarray(rhs, dtype=np.int64).reshape(-1) % p
    if b.size != a.shape[0]:
        raise InputError(f"rhs has length {b.size}, matrix has {a.shape[0]} rows")
    aug = np.concatenate([a, b[:, None]], axis=1)
    red, piv = _echelon(aug, p, full=True)
    if piv and piv[-1] == a.shape[1]:
        return None
    x = np.zeros(a.shape[1], dtype=np.int64)
    for r, c in enumerate(piv):
        x[c] = red[r, -1]
    return x


class Reducer:
    """Incremental echelon basis; ``add`` reports whether a vector was new."""

    def __init__(self, width: int, p: int):
        self.p = p
        self.width = width
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def add(self, v) -> bool:
        r = self.reduce(v)
        nz = np.flatnonzero(r)
        if nz.size == 0:
            return False
        c = int(nz[0])
        r = r * inv(int(r[c]), self.p) % self.p
        # keep earlier rows free of the new pivot so reduce() stays one pass
        for k, row in enumerate(self.rows):
            if row[c]:
                self.rows[k] = (row - row[c] * r) % self.p
        self.rows.append(r)
        self.pivots.append(c)
        return True

    def __len__(self):
        return len(self.rows)


def extend_to_basis(base, candidates, p: int) -> list[int]:
    """Indices of candidate rows that extend span(base), chosen greedily in order."""
    candidates = np.asarray(candidates, dtype=np.int64)
    red = Reducer(candidates.shape[1], p)
    if base is not None:
        for v in np.asarray(base, dtype=np.int64):
            red.add(v)
    return [k for k, v in enumerate(candidates) if red.add(v)]


def random_matrix(rng: np.random.Generator, rows: int, cols: int, p: int) -> np.ndarray:
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)
