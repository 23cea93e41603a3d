"""Finite-dimensional commutative local algebras over a prime field.

A ring is given by structure constants: struct[i, j] is the coordinate
column of e_i * e_j in the chosen basis.  Validation checks every ring
law and computes the nilradical (= the maximal ideal, once locality is
established) via the Frobenius map, which is linear over a prime field.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import BadUnit, NotAssociative, NotCommutative, NotLocal, NotPrime


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Ring:
    """Immutable validated algebra.  Construct via `validate_ring`."""

    __slots__ = (
        "name", "p", "dim", "unit", "struct", "mult",
        "radical", "radical_pivots", "residue_degree", "key", "_regular",
    )

    def __init__(self, name, p, dim, unit, struct, mult, radical,
                 radical_pivots, residue_degree):
        self.name = name
        self.p = p
        self.dim = dim
        self.unit = unit
        self.struct = struct
        self.mult = mult                 # mult[i] = left multiplication by e_i
        self.radical = radical           # canonical basis of the maximal ideal
        self.radical_pivots = radical_pivots
        self.residue_degree = residue_degree
        self.key = (p, dim, unit.tobytes(), struct.tobytes())
        self._regular = None

    def act(self, x):
        """Multiplication matrix of the element with coordinates x."""
        return np.tensordot(np.asarray(x, dtype=np.int64) % self.p,
                            self.mult, axes=(0, 0)) % self.p

    def multiply(self, x, y):
        return self.act(x) @ (np.asarray(y, dtype=np.int64) % self.p) % self.p

    def power(self, x, n):
        result = self.unit.copy()
        base = np.asarray(x, dtype=np.int64) % self.p
        while n:
            if n & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            n >>= 1
        return result

    def __repr__(self):
        return "Ring(%s: F_%d, dim %d)" % (self.name, self.p, self.dim)


def validate_ring(name, p, dim, unit, struct):
    """Check every ring law and return a validated Ring.

    struct has shape (dim, dim, dim) with struct[i, j] the coordinates
    of e_i e_j.  Raises NotPrime / NotCommutative / NotAssociative /
    BadUnit / NotLocal, each naming the first violating witness.
    """
    p = int(p)
    if not is_prime(p):
        raise NotPrime("p = %d is not prime" % p, witness=p)
    if p >= linalg.MAX_PRIME:
        raise NotPrime("p = %d exceeds the supported prime bound" % p, witness=p)
    if dim < 1:
        raise BadUnit("ring dimension must be at least 1", witness=dim)
    unit = linalg.as_fp(unit, p).reshape(dim)
    struct = linalg.as_fp(struct, p).reshape(dim, dim, dim)

    for i in range(dim):
        for j in range(i + 1, dim):
            if not np.array_equal(struct[i, j], struct[j, i]):
                raise NotCommutative(
                    "e%d*e%d != e%d*e%d" % (i, j, j, i), witness=(i, j))

    # mult[i][:, j] = coordinates of e_i e_j
    mult = np.transpose(struct, (0, 2, 1)).copy()

    unit_mat = np.tensordot(unit, mult, axes=(0, 0)) % p
    if not np.array_equal(unit_mat, linalg.identity(dim)):
        raise BadUnit("multiplication by the unit is not the identity",
                      witness=unit.tolist())

    # (e_i e_j) e_k = e_i (e_j e_k) for all k  <=>  M(e_i e_j) = L_i L_j
    for i in range(dim):
        for j in range(dim):
            lhs = np.tensordot(struct[i, j], mult, axes=(0, 0)) % p
            rhs = mult[i] @ mult[j] % p
            if not np.array_equal(lhs, rhs):
                k = int(np.nonzero(np.any(lhs != rhs, axis=0))[0][0])
                raise NotAssociative(
                    "(e%d*e%d)*e%d != e%d*(e%d*e%d)" % (i, j, k, i, j, k),
                    witness=(i, j, k))

    radical, radical_pivots = _nilradical(p, dim, unit, mult)

    # N must be an ideal (automatic for a commutative algebra; checked
    # anyway as a guard against inconsistent presentations).
    if radical.shape[1]:
        for i in range(dim):
            if not linalg.in_span(radical, radical_pivots,
                                  mult[i] @ radical % p, p):
                raise NotAssociative(
                    "nilradical is not closed under e%d" % i, witness=(i,))

    residue_degree = _check_local(p, dim, unit, mult, radical, radical_pivots)
    return Ring(name, p, dim, unit, struct, mult, radical, radical_pivots,
                residue_degree)


def _frobenius_matrix(p, dim, ring_power):
    """Matrix of x -> x^p, linear because the base field is prime."""
    cols = []
    for i in range(dim):
        e = np.zeros(dim, dtype=np.int64)
        e[i] = 1
        cols.append(ring_power(e, p))
    return np.stack(cols, axis=1)


def _nilradical(p, dim, unit, mult):
    def power(x, n):
        result = unit.copy()
        base = np.asarray(x, dtype=np.int64) % p
        while n:
            if n & 1:
                result = np.tensordot(result, mult, axes=(0, 0)) @ base % p
            base = np.tensordot(base, mult, axes=(0, 0)) @ base % p
            n >>= 1
        return result

    frob = _frobenius_matrix(p, dim, power)
    m = 0
    pm = 1
    while pm < dim:
        pm *= p
        m += 1
    fm = linalg.mat_pow(frob, m, p) if m else linalg.identity(dim)
    kern = linalg.kernel_basis(fm, p)
    return linalg.canon_basis(kern, p)


def _check_local(p, dim, unit, mult, radical, radical_pivots):
    """Local iff the Frobenius-fixed subspace of R/N is one-dimensional
    (one simple factor of the semisimple quotient)."""
    proj, sect, _ = linalg.complement(radical, radical_pivots, dim, p)
    q = proj.shape[0]

    def qpower(x, n):
        # power computed inside R, then projected
        result = unit.copy()
        base = sect @ (np.asarray(x, dtype=np.int64) % p) % p
        while n:
            if n & 1:
                result = np.tensordot(result, mult, axes=(0, 0)) @ base % p
            base = np.tensordot(base, mult, axes=(0, 0)) @ base % p
            n >>= 1
        return proj @ result % p

    frob_q = np.stack([qpower(row, p) for row in linalg.identity(q)], axis=1)
    fixed = linalg.kernel_basis((frob_q - linalg.identity(q)) % p, p)
    factors = fixed.shape[1]
    if factors != 1:
        raise NotLocal(
            "semisimple quotient has %d simple factors" % factors,
            witness=factors)
    return q


def jacobson_radical(ring):
    """Canonical basis of the maximal ideal (= nilradical)."""
    return ring.radical


def is_local(ring):
    """(True, residue degree) for a validated ring.

    Validation already rejects non-local presentations, so this is a
    read-out; the Frobenius computation happened at load time.
    """
    return True, ring.residue_degree
