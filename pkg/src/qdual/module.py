"""Finite-length modules over a validated local algebra.

A module is a vector space F_p^n together with one action matrix per
ring basis element.  Everything downstream (Hom, tensor, duals,
resolutions) is linear algebra on these matrices.  The zero module
(dim 0) is a first-class value.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import (InvalidModuleMap, ModuleValidationError, NotSubmodule,
                     RingMismatch)


def _as_columns(vectors, rows, p):
    """Column matrix with a fixed row count; tolerates empty input."""
    arr = linalg.as_fp(vectors, p)
    if arr.size == 0:
        return arr.reshape(rows, 0)
    return arr.reshape(rows, -1)


class Module:
    """Immutable module given by action matrices."""

    __slots__ = ("ring", "dim", "action", "name", "_key")

    def __init__(self, ring, dim, action, name=None, check=True):
        self.ring = ring
        self.dim = int(dim)
        action = linalg.as_fp(action, ring.p).reshape(ring.dim, dim, dim)
        action.setflags(write=False)
        self.action = action
        self.name = name
        self._key = None
        if check:
            self.validate()

    @property
    def key(self):
        if self._key is None:
            self._key = (self.ring.key, self.dim, self.action.tobytes())
        return self._key

    def act(self, x):
        """Action matrix of the ring element with coordinates x."""
        return np.tensordot(np.asarray(x, dtype=np.int64) % self.ring.p,
                            self.action, axes=(0, 0)) % self.ring.p

    def validate(self):
        """Unit law and compatibility A_i A_j = sum_k c[i][j][k] A_k."""
        ring = self.ring
        p = ring.p
        if not np.array_equal(self.act(ring.unit), linalg.identity(self.dim)):
            raise ModuleValidationError(
                "unit does not act as the identity", witness="unit")
        for i in range(ring.dim):
            for j in range(i, ring.dim):
                lhs = self.action[i] @ self.action[j] % p
                rhs = self.act(ring.struct[i, j])
                if not np.array_equal(lhs, rhs):
                    raise ModuleValidationError(
                        "action incompatible with e%d*e%d" % (i, j),
                        witness=(i, j))

    def __repr__(self):
        label = self.name or "module"
        return "Module(%s over %s, dim %d)" % (label, self.ring.name, self.dim)


class ModuleMap:
    """A linear map commuting with the ring action."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        if source.ring.key != target.ring.key:
            raise RingMismatch("map between modules over different rings")
        self.source = source
        self.target = target
        self.matrix = linalg.as_fp(matrix, source.ring.p).reshape(
            target.dim, source.dim)
        if check:
            p = source.ring.p
            for i in range(source.ring.dim):
                lhs = self.matrix @ source.action[i] % p
                rhs = target.action[i] @ self.matrix % p
                if not np.array_equal(lhs, rhs):
                    raise InvalidModuleMap(
                        "matrix does not commute with e%d" % i)

    def __repr__(self):
        return "ModuleMap(%d -> %d over %s)" % (
            self.source.dim, self.target.dim, self.source.ring.name)


class ShortExactSequence:
    """0 -> L1 -> L2 -> L3 -> 0 with exactness verified."""

    __slots__ = ("sub", "quot")

    def __init__(self, sub, quot):
        p = sub.source.ring.p
        if sub.target is not quot.source and sub.target.key != quot.source.key:
            raise InvalidModuleMap("middle modules of the sequence differ")
        if linalg.rank(sub.matrix, p) != sub.source.dim:
            raise InvalidModuleMap("first map is not injective")
        if linalg.rank(quot.matrix, p) != quot.target.dim:
            raise InvalidModuleMap("second map is not surjective")
        if np.any(quot.matrix @ sub.matrix % p):
            raise InvalidModuleMap("composition is nonzero")
        if sub.source.dim + quot.target.dim != sub.target.dim:
            raise InvalidModuleMap("image of the injection is smaller than "
                                   "the kernel of the surjection")
        self.sub = sub
        self.quot = quot

    @property
    def members(self):
        return self.sub.source, self.sub.target, self.quot.target


def zero_module(ring):
    return Module(ring, 0, np.zeros((ring.dim, 0, 0), dtype=np.int64),
                  name="0", check=False)


def regular_module(ring):
    """The ring as a module over itself (cached per ring)."""
    if ring._regular is None:
        ring._regular = Module(ring, ring.dim, np.stack(list(ring.mult)),
                               name="R", check=False)
    return ring._regular


def free_module(ring, rank):
    """R^rank with coordinate (copy i, ring coord j) -> i*dim + j."""
    eye = linalg.identity(rank)
    action = np.stack([np.kron(eye, m) for m in ring.mult]) % ring.p
    return Module(ring, rank * ring.dim, action,
                  name="R^%d" % rank, check=False)


def radical_submodule(module):
    """Canonical basis of mM (column span of radical actions)."""
    p = module.ring.p
    rad = module.ring.radical
    if rad.shape[1] == 0 or module.dim == 0:
        return linalg.zeros(module.dim, 0)
    cols = np.concatenate(
        [module.act(rad[:, j]) for j in range(rad.shape[1])], axis=1)
    return linalg.canon_basis(cols, p)[0]


def socle(module):
    """Canonical basis of {m : mM kills m} (whole space if m = 0)."""
    p = module.ring.p
    rad = module.ring.radical
    mats = [module.act(rad[:, j]) for j in range(rad.shape[1])]
    kern = linalg.intersect_kernels(mats, module.dim, p)
    return linalg.canon_basis(kern, p)[0]


def minimal_generator_count(module):
    """Number of module generators = dim of M/mM over the residue
    field (not over the prime field)."""
    top = module.dim - radical_submodule(module).shape[1]
    return top // module.ring.residue_degree


def minimal_generators(module):
    """Deterministic minimal generating set as columns.

    Candidates are the canonical complement of mM; a candidate is kept
    only if it falls outside the submodule generated by mM and the
    previously kept ones, so the images form a residue-field basis of
    M/mM even when the residue field is larger than F_p.
    """
    p = module.ring.p
    rad = radical_submodule(module)
    basis, pivots = linalg.canon_basis(rad, p)
    _, sect, _ = linalg.complement(basis, pivots, module.dim, p)
    chosen = []
    span, span_piv = basis, pivots
    for j in range(sect.shape[1]):
        c = sect[:, j:j + 1]
        if linalg.in_span(span, span_piv, c, p):
            continue
        chosen.append(c)
        span, span_piv = span_closure(
            module, np.concatenate([span, c], axis=1))
    if not chosen:
        return linalg.zeros(module.dim, 0)
    return np.concatenate(chosen, axis=1)


def span_closure(module, vectors):
    """Canonical basis of the submodule generated by the given columns."""
    p = module.ring.p
    vectors = _as_columns(vectors, module.dim, p)
    basis, pivots = linalg.canon_basis(vectors, p)
    while True:
        if basis.shape[1] == 0:
            return basis, pivots
        images = [module.action[i] @ basis % p
                  for i in range(module.ring.dim)]
        stacked = np.concatenate([basis] + images, axis=1)
        new_basis, new_pivots = linalg.canon_basis(stacked, p)
        if new_basis.shape[1] == basis.shape[1]:
            return new_basis, new_pivots
        basis, pivots = new_basis, new_pivots


def submodule_generated(module, vectors):
    """(submodule as a Module, inclusion ModuleMap)."""
    basis, pivots = span_closure(module, vectors)
    return _submodule_from_canon(module, basis, pivots)


def _submodule_from_canon(module, basis, pivots):
    p = module.ring.p
    s = basis.shape[1]
    action = np.zeros((module.ring.dim, s, s), dtype=np.int64)
    for i in range(module.ring.dim):
        image = module.action[i] @ basis % p
        if not linalg.in_span(basis, pivots, image, p):
            raise NotSubmodule("subspace not closed under e%d" % i)
        action[i] = image[pivots, :]
    sub = Module(module.ring, s, action, check=False)
    return sub, ModuleMap(sub, module, basis)


def quotient_module(module, subspace):
    """(quotient Module, projection ModuleMap, section matrix).

    The subspace must be action-closed; the quotient basis is the
    deterministic rref-pivot complement.  The section satisfies
    proj @ sect = I and is the chosen splitting of the projection as
    linear maps (not as module maps).
    """
    p = module.ring.p
    basis, pivots = linalg.canon_basis(
        _as_columns(subspace, module.dim, p), p)
    for i in range(module.ring.dim):
        if not linalg.in_span(basis, pivots,
                              module.action[i] @ basis % p, p):
            raise NotSubmodule(
                "subspace not closed under e%d" % i)
    proj, sect, _ = linalg.complement(basis, pivots, module.dim, p)
    action = np.stack([proj @ module.action[i] @ sect % p
                       for i in range(module.ring.dim)])
    quot = Module(module.ring, proj.shape[0], action, check=False)
    return quot, ModuleMap(module, quot, proj), sect


def direct_sum(a, b):
    if a.ring.key != b.ring.key:
        raise RingMismatch("direct sum over different rings")
    n, m = a.dim, b.dim
    action = np.zeros((a.ring.dim, n + m, n + m), dtype=np.int64)
    action[:, :n, :n] = a.action
    action[:, n:, n:] = b.action
    return Module(a.ring, n + m, action, check=False)


def ses_from_submodule(module, subspace):
    """Short exact sequence 0 -> S -> M -> M/S -> 0."""
    p = module.ring.p
    basis, pivots = linalg.canon_basis(
        _as_columns(subspace, module.dim, p), p)
    sub, incl = _submodule_from_canon(module, basis, pivots)
    quot, proj, _ = quotient_module(module, basis)
    return ShortExactSequence(incl, proj)
