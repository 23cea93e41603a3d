"""Exact dense linear algebra over the prime field F_p.

Matrices are plain numpy int64 arrays with entries reduced into [0, p).
Zero-row and zero-column shapes are legal everywhere; the zero module
upstream depends on that.  All pivoting is deterministic (leftmost pivot
column, topmost nonzero row), so every derived basis is reproducible
bit-for-bit.
"""

from __future__ import annotations

import numpy as np

MAX_PRIME = 1 << 16


def as_fp(a, p):
    """Coerce to an int64 array reduced mod p."""
    return np.asarray(a, dtype=np.int64) % p


def identity(n):
    return np.eye(n, dtype=np.int64)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def inv_mod(x, p):
    return pow(int(x) % p, p - 2, p)


def rref(a, p, limit=None):
    """Reduced row echelon form of `a` mod p.

    Returns (R, rank, pivots).  `limit` restricts pivot search to the
    first `limit` columns (used for solving with an augmented block).
    """
    r = np.array(a, dtype=np.int64) % p
    rows, cols = r.shape
    stop = cols if limit is None else limit
    pivots = []
    row = 0
    for col in range(stop):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        r[row] = (r[row] * inv_mod(r[row, col], p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, len(pivots), pivots


def rank(a, p):
    return rref(a, p)[1]


def kernel_basis(a, p):
    """Columns form a basis of the null space of `a`."""
    return kernel_with_support(a, p)[0]


def kernel_with_support(a, p):
    """Kernel basis plus the free-column indices that support it.

    The basis K satisfies K[free, :] = I, so the coordinates of any
    vector v in the span are simply v[free].
    """
    r, rk, pivots = rref(a, p)
    cols = a.shape[1]
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    k = zeros(cols, len(free))
    for j, f in enumerate(free):
        k[f, j] = 1
        for i, pc in enumerate(pivots):
            k[pc, j] = (-r[i, f]) % p
    return k, free


def solve(a, b, p):
    """One solution of A x = b, or None if the system is inconsistent."""
    x = solve_matrix(a, np.asarray(b, dtype=np.int64).reshape(-1, 1), p)
    return None if x is None else x[:, 0]


def solve_matrix(a, b, p):
    """Solve A X = B columnwise; None if any column is inconsistent."""
    a = as_fp(a, p)
    b = as_fp(b, p)
    rows, cols = a.shape
    if b.ndim == 1:
        b = b.reshape(rows, 1)
    aug = np.concatenate([a, b], axis=1)
    r, rk, pivots = rref(aug, p, limit=cols)
    if np.any(r[rk:, cols:]):
        return None
    x = zeros(cols, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x


def kronecker(a, b, p):
    """Tensor of linear maps; basis ordering (i, k) -> i * dim2 + k."""
    return np.kron(as_fp(a, p), as_fp(b, p)) % p


def mat_pow(a, n, p):
    """a ** n mod p by repeated squaring."""
    result = identity(a.shape[0])
    base = as_fp(a, p)
    while n:
        if n & 1:
            result = result @ base % p
        base = base @ base % p
        n >>= 1
    return result


def canon_basis(vectors, p):
    """Canonical column basis of the span of the given columns.

    Returns (S, pivots) where S[pivots, :] = I, so coordinates of any
    v in the span are v[pivots].  Depends only on the span, not on the
    generating set.
    """
    r, rk, pivots = rref(vectors.T, p)
    return r[:rk].T.copy(), pivots


def in_span(basis, pivots, vectors, p):
    """Whether every column of `vectors` lies in the canonical span."""
    coords = vectors[pivots, :] if len(pivots) else zeros(0, vectors.shape[1])
    return bool(np.array_equal(basis @ coords % p, as_fp(vectors, p)))


def complement(basis, pivots, n, p):
    """Deterministic complement of a canonical subspace of F^n.

    Returns (proj, sect, comp): proj maps F^n onto the complement
    coordinates, sect embeds them back, proj @ sect = I and
    proj @ basis = 0.
    """
    pivset = set(pivots)
    comp = [j for j in range(n) if j not in pivset]
    proj = zeros(len(comp), n)
    for i, j in enumerate(comp):
        proj[i, j] = 1
    if len(pivots):
        # x = S c + (complement part); c = x[pivots], so the complement
        # coordinates are x[comp] - S[comp, :] x[pivots].
        proj[:, pivots] = (proj[:, pivots] - basis[comp, :]) % p
    sect = zeros(n, len(comp))
    for i, j in enumerate(comp):
        sect[j, i] = 1
    return proj, sect, comp


def intersect_kernels(mats, n, p):
    """Kernel basis of the stacked maps (whole space if none given)."""
    if not mats:
        return identity(n)
    return kernel_basis(np.concatenate([as_fp(m, p) for m in mats], axis=0), p)
