"""Minimal free resolutions, injective resolutions through duality, and
Ext/Tor dimension tables with an independent cross-oracle.

A free module R^b is coordinatized by (copy i, ring coord j) -> i*d + j.
Differentials are stored as field matrices between those coordinates;
the ring-coordinate block of column (generator j) recovers the ring
element acting on copy c as v[c*d:(c+1)*d].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotAComplex, RingMismatch
from .functors import matlis_dual
from .module import Module, ModuleMap, free_module, minimal_generators


@dataclass(frozen=True)
class FreeResolution:
    """Prefix of a minimal free resolution.

    betti has length B+1 and diffs length B; diffs[i] is the field
    matrix of d_{i+1}: R^{betti[i+1]} -> R^{betti[i]}.  augmentation
    maps R^{betti[0]} onto the module.
    """
    module: Module
    betti: tuple
    diffs: tuple
    augmentation: ModuleMap

    @property
    def length(self):
        return len(self.diffs)

    def truncated(self, length):
        if length > self.length:
            raise ValueError("resolution shorter than requested prefix")
        return FreeResolution(self.module, self.betti[:length + 1],
                              self.diffs[:length], self.augmentation)


@dataclass(frozen=True)
class ExtTable:
    dims: tuple


@dataclass(frozen=True)
class TorTable:
    dims: tuple


_cache = {}
_cache_lock = threading.Lock()


def clear_resolution_cache():
    with _cache_lock:
        _cache.clear()


def minimal_free_resolution(module, length):
    """Minimal free resolution prefix, memoized per module."""
    with _cache_lock:
        res = _cache.get(module.key)
    if res is None or res.length < length:
        res = _compute_resolution(module, length, base=res)
        with _cache_lock:
            old = _cache.get(module.key)
            if old is None or old.length < res.length:
                _cache[module.key] = res
            else:
                res = old
    return res.truncated(length) if res.length != length else res


def _generator_columns(ring, free_rank, gens):
    """Field matrix of R^mu -> R^free_rank sending free generators to
    the given columns; column (i, j) is e_j acting on generator i."""
    p = ring.p
    d = ring.dim
    mu = gens.shape[1]
    out = np.zeros((gens.shape[0], mu * d), dtype=np.int64)
    eye = linalg.identity(free_rank)
    for j in range(d):
        fj = np.kron(eye, ring.mult[j]) % p
        out[:, j::d] = fj @ gens % p
    return out


def _compute_resolution(module, length, base=None):
    """Compute a resolution prefix, continuing from `base` if given."""
    ring = module.ring
    p = ring.p
    d = ring.dim

    if base is None:
        gens = minimal_generators(module)
        b = [gens.shape[1]]
        aug_cols = np.zeros((module.dim, b[0] * d), dtype=np.int64)
        for j in range(d):
            aug_cols[:, j::d] = module.action[j] @ gens % p
        augmentation = ModuleMap(free_module(ring, b[0]), module, aug_cols)
        diffs = []
        prev = aug_cols
    else:
        b = list(base.betti)
        augmentation = base.augmentation
        diffs = list(base.diffs)
        prev = diffs[-1] if diffs else augmentation.matrix

    for _ in range(length - len(diffs)):
        kern, support = linalg.kernel_with_support(prev, p)
        free_rank = b[-1]
        if kern.shape[1] == 0:
            b.append(0)
            diffs.append(linalg.zeros(free_rank * d, 0))
            prev = diffs[-1]
            continue
        basis, pivots = linalg.canon_basis(kern, p)
        # the syzygy module in K-coordinates, then its minimal
        # generators (residue-field aware)
        eye = linalg.identity(free_rank)
        kdim = basis.shape[1]
        action = np.zeros((d, kdim, kdim), dtype=np.int64)
        for i in range(d):
            xm = np.kron(eye, ring.mult[i]) % p
            action[i] = (xm @ basis % p)[pivots, :]
        syzygy = Module(ring, kdim, action, check=False)
        gens_field = basis @ minimal_generators(syzygy) % p
        dmat = _generator_columns(ring, free_rank, gens_field)
        b.append(gens_field.shape[1])
        diffs.append(dmat)
        prev = dmat
    return FreeResolution(module, tuple(b), tuple(diffs), augmentation)


def _generator_ring_blocks(diff, prev_rank, cur_rank, ring):
    """Ring-element blocks of a differential as an array of shape
    (prev_rank, cur_rank, d): d(gen j) = sum_c blocks[c, j] . gen_c."""
    d = ring.dim
    if cur_rank == 0 or prev_rank == 0:
        return np.zeros((prev_rank, cur_rank, d), dtype=np.int64)
    w = diff.reshape(prev_rank * d, cur_rank, d) @ ring.unit % ring.p
    return w.reshape(prev_rank, d, cur_rank).transpose(0, 2, 1)


def _hom_complex_maps(res, n_module, upto):
    """delta_i: N^{b_i} -> N^{b_i+1}, i = 0..upto-1, for Hom(F_*, N)."""
    ring = res.module.ring
    p = ring.p
    nn = n_module.dim
    deltas = []
    for i in range(upto):
        bprev, bcur = res.betti[i], res.betti[i + 1]
        blocks = _generator_ring_blocks(res.diffs[i], bprev, bcur, ring)
        # delta[j*nn:(j+1)*nn, c*nn:(c+1)*nn] = sum_r blocks[c,j,r] A_r
        delta = np.einsum("cjr,rab->jacb", blocks, n_module.action) % p
        deltas.append(delta.reshape(bcur * nn, bprev * nn))
    return deltas


def ext_dims(m, n, bound):
    """dim Ext^i(M, N) for 0 <= i <= bound, via a minimal free
    resolution of M."""
    if m.ring.key != n.ring.key:
        raise RingMismatch("Ext arguments over different rings")
    p = m.ring.p
    res = minimal_free_resolution(m, bound + 1)
    deltas = _hom_complex_maps(res, n, bound + 1)
    dims = []
    prev_rank = 0
    for i in range(bound + 1):
        space = res.betti[i] * n.dim
        r = linalg.rank(deltas[i], p)
        dims.append(space - r - prev_rank)
        prev_rank = r
    return ExtTable(tuple(dims))


def tor_dims(m, n, bound):
    """dim Tor_i(M, N) for 0 <= i <= bound, via F_* (x) N."""
    if m.ring.key != n.ring.key:
        raise RingMismatch("Tor arguments over different rings")
    ring = m.ring
    p = ring.p
    nn = n.dim
    res = minimal_free_resolution(m, bound + 1)
    taus = []                       # tau_i: N^{b_i} -> N^{b_{i-1}}
    for i in range(bound + 1):
        bprev, bcur = res.betti[i], res.betti[i + 1]
        blocks = _generator_ring_blocks(res.diffs[i], bprev, bcur, ring)
        # tau[c*nn:(c+1)*nn, j*nn:(j+1)*nn] = sum_r blocks[c,j,r] A_r
        tau = np.einsum("cjr,rab->cajb", blocks, n.action) % p
        taus.append(tau.reshape(bprev * nn, bcur * nn))
    ranks = [linalg.rank(t, p) for t in taus]
    # H_i = ker(tau_i) - im(tau_{i+1}); tau_0 is the zero map out of N^{b_0}
    dims = []
    for i in range(bound + 1):
        kernel_dim = res.betti[i] * nn - ranks[i - 1] if i else \
            res.betti[0] * nn
        dims.append(kernel_dim - ranks[i])
    return TorTable(tuple(dims))


def ext_dims_via_injective(m, n, bound):
    """dim Ext^i(M, N) computed from a coresolution of N by copies of E.

    The coresolution is the Matlis dual of a minimal free resolution of
    N^dual; Hom(M, E^c) is coordinatized through the canonical
    identification with (M^dual)^c, so the whole cochain complex is
    explicit.  Independent of `ext_dims`, which resolves M instead.
    """
    if m.ring.key != n.ring.key:
        raise RingMismatch("Ext arguments over different rings")
    ring = m.ring
    p = ring.p
    res = minimal_free_resolution(matlis_dual(n), bound + 1)
    nm = m.dim
    maps = []                      # (M^dual)^{c_i} -> (M^dual)^{c_{i+1}}
    for i in range(bound + 1):
        cprev, ccur = res.betti[i], res.betti[i + 1]
        blocks = _generator_ring_blocks(res.diffs[i], cprev, ccur, ring)
        # block (s, t) is the transpose of sum_r blocks[t,s,r] A_r
        mat = np.einsum("tsr,rba->satb", blocks, m.action) % p
        maps.append(mat.reshape(ccur * nm, cprev * nm))
    dims = []
    prev_rank = 0
    for i in range(bound + 1):
        space = res.betti[i] * nm
        r = linalg.rank(maps[i], p)
        dims.append(space - r - prev_rank)
        prev_rank = r
    return ExtTable(tuple(dims))


def injective_resolution(module, length):
    """Coresolution M -> E^{b_0} -> ... -> E^{b_length} by duality.

    Returns (betti, maps, coaugmentation) where maps[i] is the field
    matrix E^{b_i} -> E^{b_i+1} and the coaugmentation embeds M into
    E^{b_0}.  Betti numbers equal those of M^dual.
    """
    ring = module.ring
    p = ring.p
    res = minimal_free_resolution(matlis_dual(module), length)
    maps = [d.T % p for d in res.diffs]
    coaug = res.augmentation.matrix.T % p
    return tuple(res.betti), maps, coaug


def complex_homology(diffs, p):
    """Homology dimensions of a chain complex given by its matrices.

    diffs[i] is d_{i+1}: C_{i+1} -> C_i (shape dim C_i x dim C_{i+1});
    returns dims H_0..H_k for k = len(diffs).  Raises NotAComplex at
    the first index where consecutive maps fail to compose to zero.
    """
    if not diffs:
        return []
    for i in range(len(diffs) - 1):
        if diffs[i].shape[1] != diffs[i + 1].shape[0]:
            raise NotAComplex("shape mismatch between d%d and d%d"
                              % (i + 1, i + 2), index=i)
        if np.any(diffs[i] @ diffs[i + 1] % p):
            raise NotAComplex("d%d . d%d != 0" % (i + 1, i + 2), index=i)
    ranks = [linalg.rank(d, p) for d in diffs]
    dims = [diffs[0].shape[0] - ranks[0]]
    for i in range(1, len(diffs)):
        dims.append(diffs[i - 1].shape[1] - ranks[i - 1] - ranks[i])
    dims.append(diffs[-1].shape[1] - ranks[-1])
    return dims
