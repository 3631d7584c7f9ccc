"""Dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  Primes
here are tiny (2, 3, 5, ...), so Fermat inversion and dense row reduction
are plenty fast for the module sizes this package works with.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

import numpy as np

Mat = np.ndarray


def fmat(data, p: int) -> Mat:
    """Coerce to an int64 matrix with entries reduced mod p."""
    a = np.array(data, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def rref(mat: Mat, p: int) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        hit = None
        for i in range(r, rows):
            if a[i, c]:
                hit = i
                break
        if hit is None:
            continue
        if hit != r:
            a[[r, hit]] = a[[hit, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, tuple(pivots)


def rank(mat: Mat, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: Mat, p: int) -> Mat:
    """Basis of the right kernel, one vector per row; shape (k, cols)."""
    rows, cols = mat.shape
    if mat.size == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = (-red[r, f]) % p
    return basis


def solve(a: Mat, b: Mat, p: int) -> Mat | None:
    """One solution x of a @ x = b mod p, or None if inconsistent.

    b may be a vector or a matrix of stacked right-hand-side columns.
    """
    b = np.atleast_1d(np.asarray(b, dtype=np.int64)) % p
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    aug = np.hstack([a % p, b])
    red, pivots = rref(aug, p)
    ncols = a.shape[1]
    if any(c >= ncols for c in pivots):
        return None
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = red[r, ncols:]
    return x[:, 0] if vec else x


def inverse(mat: Mat, p: int) -> Mat:
    n = mat.shape[0]
    red, pivots = rref(np.hstack([mat % p, np.eye(n, dtype=np.int64)]), p)
    if pivots != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular mod p")
    return red[:, n:]


def in_span(basis_rref: Mat, pivots: tuple[int, ...], vec: Mat, p: int) -> bool:
    """Membership test against a basis already in reduced echelon form."""
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * basis_rref[r]) % p
    return not v.any()


def extend_to_basis(rows: Mat, p: int, dim: int) -> Mat:
    """Rows completing an independent family to a basis of F_p^dim."""
    cur = rows % p if rows.size else np.zeros((0, dim), dtype=np.int64)
    base = len(cur)
    extra: list[Mat] = []
    r = rank(cur, p)
    assert r == base, "rows are not independent"
    for j in range(dim):
        if r == dim:
            break
        e = np.zeros(dim, dtype=np.int64)
        e[j] = 1
        cand = np.vstack([cur, e.reshape(1, -1)])
        if rank(cand, p) > r:
            cur = cand
            extra.append(e)
            r += 1
    return np.array(extra, dtype=np.int64).reshape(len(extra), dim)


def subspaces(dim: int, k: int, p: int) -> Iterator[Mat]:
    """All k-dimensional subspaces of F_p^dim, as canonical RREF bases.

    Echelon bases with a fixed pivot set biject with matrices of free
    entries, so every subspace appears exactly once.
    """
    if k == 0:
        yield np.zeros((0, dim), dtype=np.int64)
        return
    if k > dim:
        return
    for pivots in combinations(range(dim), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, dim)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free)):
            basis = np.zeros((k, dim), dtype=np.int64)
            for r, c in enumerate(pivots):
                basis[r, c] = 1
            for (r, c), val in zip(free, values):
                basis[r, c] = val
            yield basis


def count_subspaces(dim: int, k: int, p: int) -> int:
    """Gaussian binomial [dim choose k]_p, by the product formula."""
    if k < 0 or k > dim:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (dim - i) - 1
        den *= p ** (k - i) - 1
    assert num % den == 0
    return num // den


def all_vectors(dim: int, p: int) -> Iterator[Mat]:
    for coords in product(range(p), repeat=dim):
        yield np.array(coords, dtype=np.int64)
