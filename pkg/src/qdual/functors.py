"""Hom, tensor, Matlis duality and the natural transformations between
their composites.

Basis conventions are fixed once and reused everywhere:

* a hom element phi: M -> N is a (dim N) x (dim M) matrix, flattened
  row-major; the hom basis is the deterministic kernel basis of the
  commutation constraints, so coordinates of any R-linear map are just
  its flattened matrix restricted to the kernel's free indices;
* the vector-space tensor M (x) N orders its basis (a, b) -> a*dimN + b
  and the module tensor is the quotient by the bilinearity relations,
  with the rref-pivot complement as quotient basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import RingMismatch
from .module import Module, ModuleMap, quotient_module, regular_module


@dataclass(frozen=True)
class HomData:
    """Hom module plus its explicit basis of map matrices.

    basis has shape (dimN * dimM, h); column j flattened row-major is
    the matrix of the j-th basis homomorphism.  support lists the
    coordinates where the basis is the identity, so coordinates of a
    map are vec(map)[support].
    """
    module: Module
    basis: np.ndarray
    support: list

    def matrices(self):
        n = self.module  # noqa: F841  (kept for debuggers)
        return [self.basis[:, j] for j in range(self.basis.shape[1])]

    def coords(self, flat):
        """Coordinates of R-linear maps given as flattened columns."""
        p = self.module.ring.p
        flat = np.asarray(flat)
        if self.basis.shape[0] == 0:
            # Hom into or out of a zero space: every map is zero
            return linalg.zeros(0, flat.shape[1] if flat.ndim > 1 else 1)
        flat = linalg.as_fp(flat, p).reshape(self.basis.shape[0], -1)
        coords = flat[self.support, :] if self.support else \
            linalg.zeros(0, flat.shape[1])
        if not np.array_equal(self.basis @ coords % p, flat):
            raise ArithmeticError("vector is not an R-linear map")
        return coords


@dataclass(frozen=True)
class TensorData:
    """Module tensor with projection from and section into M (x)_k N."""
    module: Module
    proj: np.ndarray
    sect: np.ndarray


def _same_ring(a, b):
    if a.ring.key != b.ring.key:
        raise RingMismatch("functor arguments live over different rings")


def hom_module(m, n):
    """Hom_R(M, N) with the ring acting through the target."""
    _same_ring(m, n)
    ring = m.ring
    p = ring.p
    nm, nn = m.dim, n.dim
    eye_m = linalg.identity(nm)
    eye_n = linalg.identity(nn)
    blocks = []
    for i in range(ring.dim):
        # vec(X A_i) - vec(B_i X) = 0, row-major vec
        blocks.append((np.kron(eye_n, m.action[i].T)
                       - np.kron(n.action[i], eye_m)) % p)
    constraint = np.concatenate(blocks, axis=0) if blocks else \
        linalg.zeros(0, nn * nm)
    basis, support = linalg.kernel_with_support(constraint, p)
    h = basis.shape[1]
    action = np.zeros((ring.dim, h, h), dtype=np.int64)
    for i in range(ring.dim):
        image = np.kron(n.action[i], eye_m) @ basis % p
        action[i] = image[support, :] if support else linalg.zeros(0, h)
    module = Module(ring, h, action, check=False)
    return HomData(module, basis, support)


def tensor_module(m, n):
    """M (x)_R N: quotient of the vector-space tensor by bilinearity."""
    _same_ring(m, n)
    ring = m.ring
    p = ring.p
    nm, nn = m.dim, n.dim
    eye_m = linalg.identity(nm)
    eye_n = linalg.identity(nn)
    full_action = np.stack([np.kron(m.action[i], eye_n) % p
                            for i in range(ring.dim)])
    full = Module(ring, nm * nn, full_action, check=False)
    rels = [
        (np.kron(m.action[i], eye_n) - np.kron(eye_m, n.action[i])) % p
        for i in range(ring.dim)
    ]
    relcols = np.concatenate(rels, axis=1) if rels else \
        linalg.zeros(nm * nn, 0)
    quot, projmap, sect = quotient_module(full, relcols)
    return TensorData(quot, projmap.matrix, sect)


def matlis_dual(m):
    """Base-field linear dual with transpose action."""
    action = np.stack([m.action[i].T for i in range(m.ring.dim)])
    name = None if m.name is None else m.name + "^v"
    return Module(m.ring, m.dim, action, name=name, check=False)


def injective_hull(ring):
    """E = injective hull of the residue field = dual of the regular
    module."""
    e = matlis_dual(regular_module(ring))
    return Module(ring, e.dim, e.action, name="E", check=False)


def homothety_map(m):
    """chi: R -> Hom(M, M), e_i -> action of e_i."""
    hom = hom_module(m, m)
    flat = np.stack([m.action[i].reshape(-1) for i in range(m.ring.dim)],
                    axis=1)
    coords = hom.coords(flat)
    return ModuleMap(regular_module(m.ring), hom.module, coords)


def biduality_map(l, m):
    """delta: L -> Hom(Hom(L, M), M), l -> (phi -> phi(l))."""
    _same_ring(l, m)
    p = l.ring.p
    h1 = hom_module(l, m)
    h2 = hom_module(h1.module, m)
    k1 = h1.basis.shape[1]
    cols = []
    for a in range(l.dim):
        # matrix of the evaluation-at-e_a functional on the hom basis
        d_a = np.zeros((m.dim, k1), dtype=np.int64)
        for j in range(k1):
            phi = h1.basis[:, j].reshape(m.dim, l.dim)
            d_a[:, j] = phi[:, a]
        cols.append(d_a.reshape(-1) % p)
    flat = np.stack(cols, axis=1) if cols else linalg.zeros(
        m.dim * k1, 0)
    coords = h2.coords(flat)
    return ModuleMap(l, h2.module, coords)


def evaluation_map(lp, l):
    """xi: Hom(L', L) (x) L' -> L, phi (x) x -> phi(x)."""
    _same_ring(lp, l)
    p = l.ring.p
    hom = hom_module(lp, l)
    tens = tensor_module(hom.module, lp)
    h = hom.basis.shape[1]
    full = np.zeros((l.dim, h * lp.dim), dtype=np.int64)
    for j in range(h):
        phi = hom.basis[:, j].reshape(l.dim, lp.dim)
        full[:, j * lp.dim:(j + 1) * lp.dim] = phi
    matrix = full @ tens.sect % p
    return ModuleMap(tens.module, l, matrix)


def gamma_map(lp, l):
    """gamma: L -> Hom(L', L' (x) L), l -> (x -> x (x) l)."""
    _same_ring(lp, l)
    p = l.ring.p
    tens = tensor_module(lp, l)
    hom = hom_module(lp, tens.module)
    t = tens.module.dim
    cols = []
    for a in range(l.dim):
        g_a = np.zeros((t, lp.dim), dtype=np.int64)
        for b in range(lp.dim):
            g_a[:, b] = tens.proj[:, b * l.dim + a]
        cols.append(g_a.reshape(-1))
    flat = np.stack(cols, axis=1) if cols else linalg.zeros(t * lp.dim, 0)
    coords = hom.coords(flat)
    return ModuleMap(l, hom.module, coords)


def hom_evaluation_map(l, lp, lpp):
    """theta: L (x) Hom(L', L'') -> Hom(Hom(L, L'), L'')."""
    _same_ring(l, lp)
    _same_ring(lp, lpp)
    p = l.ring.p
    h1 = hom_module(lp, lpp)
    h2 = hom_module(l, lp)
    h3 = hom_module(h2.module, lpp)
    k1 = h1.basis.shape[1]
    k2 = h2.basis.shape[1]
    tens = tensor_module(l, h1.module)
    cols = []
    for a in range(l.dim):
        for j in range(k1):
            phi = h1.basis[:, j].reshape(lpp.dim, lp.dim)
            theta = np.zeros((lpp.dim, k2), dtype=np.int64)
            for mdx in range(k2):
                beta = h2.basis[:, mdx].reshape(lp.dim, l.dim)
                theta[:, mdx] = phi @ beta[:, a] % p
            cols.append(theta.reshape(-1))
    flat = np.stack(cols, axis=1) if cols else linalg.zeros(
        lpp.dim * k2, 0)
    full = h3.coords(flat)                      # h3-coords on L (x) H1 basis
    matrix = full @ tens.sect % p
    return ModuleMap(tens.module, h3.module, matrix)


def is_isomorphism(f):
    """(flag, {'injective': ..., 'surjective': ...}) from the rank."""
    r = linalg.rank(f.matrix, f.source.ring.p)
    injective = r == f.source.dim
    surjective = r == f.target.dim
    return injective and surjective, {
        "injective": injective, "surjective": surjective}
