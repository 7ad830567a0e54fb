"""Exact linear algebra over prime fields F_p.

Dense routines are numpy int64 Gaussian elimination with every intermediate
reduced mod p, so results are exact for any small prime.  The streaming
sparse-rank accumulator has two interchangeable backends: a compiled kernel
(``hhprime._fpkernel``, built from Cython) and a pure-Python fallback with
identical semantics.  The compiled one is picked at import time when it is
available, unless ``HHPRIME_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fppure

try:  # pragma: no cover - exercised indirectly via backend selection
    from . import _fpkernel
except ImportError:  # pragma: no cover
    _fpkernel = None


def _use_pure() -> bool:
    return _fpkernel is None or os.environ.get("HHPRIME_PURE", "") == "1"


def fp_backend_name() -> str:
    """Name of the sparse-rank backend in use: 'compiled' or 'pure'."""
    return "pure" if _use_pure() else "compiled"


def get_rank_accumulator(ncols: int, p: int):
    """Streaming rank accumulator over F_p with `ncols` columns."""
    if _use_pure():
        return _fppure.RankAccumulator(ncols, p)
    return _fpkernel.RankAccumulator(ncols, p)


def sparse_rank(rows, ncols: int, p: int) -> int:
    """Rank over F_p of a matrix given as an iterable of (cols, vals) rows."""
    acc = get_rank_accumulator(ncols, p)
    for cols, vals in rows:
        acc.add_row(cols, vals)
    return acc.rank


def modinv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"{a} is not invertible mod {p}")
    return pow(a, p - 2, p)


def _as_matrix(a) -> np.ndarray:
    m = np.atleast_2d(np.asarray(a, dtype=np.int64))
    return m


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot column list)."""
    m = _as_matrix(a) % p
    m = m.copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * modinv(int(m[r, c]), p)) % p
        other = np.nonzero(m[:, c])[0]
        other = other[other != r]
        if other.size:
            m[other] = (m[other] - np.outer(m[other, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    m = _as_matrix(a)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Rows form a basis of {x : a @ x = 0 mod p}."""
    m = _as_matrix(a)
    ncols = m.shape[1]
    if m.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for j, pc in enumerate(pivots):
            basis[k, pc] = (-r[j, c]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b mod p, or None if inconsistent."""
    m = _as_matrix(a) % p
    rhs = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if rhs.shape[0] != m.shape[0]:
        raise ValueError("shape mismatch in solve")
    aug = np.hstack([m, rhs[:, None]])
    r, pivots = rref(aug, p)
    if m.shape[1] in pivots:
        return None
    x = np.zeros(m.shape[1], dtype=np.int64)
    for j, pc in enumerate(pivots):
        x[pc] = r[j, m.shape[1]]
    return x


def solve_many(a, bs, p: int) -> np.ndarray | None:
    """Solve a @ X = bs for a matrix of right-hand sides (columns of bs)."""
    m = _as_matrix(a) % p
    rhs = _as_matrix(bs) % p
    if rhs.shape[0] != m.shape[0]:
        raise ValueError("shape mismatch in solve_many")
    k = rhs.shape[1]
    aug = np.hstack([m, rhs])
    r, pivots = rref(aug, p)
    if any(pc >= m.shape[1] for pc in pivots):
        return None
    x = np.zeros((m.shape[1], k), dtype=np.int64)
    for j, pc in enumerate(pivots):
        x[pc] = r[j, m.shape[1]:]
    return x


def in_row_span(rows, v, p: int) -> bool:
    m = _as_matrix(rows)
    vv = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if m.size == 0:
        return not np.any(vv % p)
    return rank(m, p) == rank(np.vstack([m, vv]), p)


def express_in_rows(rows, v, p: int) -> np.ndarray | None:
    """Coefficients c with c @ rows = v mod p, or None."""
    m = _as_matrix(rows)
    vv = np.asarray(v, dtype=np.int64).reshape(-1)
    if m.size == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(vv % p) else None
    return solve(m.T, vv, p)


def echelon_basis(rows, p: int) -> np.ndarray:
    """Deterministic (RREF) basis of the row space."""
    m = _as_matrix(rows)
    if m.size == 0:
        return m.reshape(0, m.shape[1] if m.ndim == 2 else 0)
    r, pivots = rref(m, p)
    return r[: len(pivots)]


def intersect_row_spaces(a, b, p: int) -> np.ndarray:
    """Basis (rows) of the intersection of two row spaces."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.size == 0 or mb.size == 0:
        n = ma.shape[1] if ma.size else mb.shape[1]
        return np.zeros((0, n), dtype=np.int64)
    # x = c @ ma = d @ mb  <=>  (c, -d) in nullspace of [ma; mb]^T
    stacked = np.vstack([ma, mb])
    ns = nullspace(stacked.T, p)
    if ns.size == 0:
        return np.zeros((0, ma.shape[1]), dtype=np.int64)
    vecs = (ns[:, : ma.shape[0]] @ ma) % p
    return echelon_basis(vecs, p)
