"""Hom, tensor, Matlis duality and the natural transformations."""

import numpy as np
import pytest

from qdual import (biduality_map, builtin_module, corpus_ring,
                   evaluation_map, gamma_map, hom_evaluation_map, hom_module,
                   homothety_map, injective_hull, is_isomorphism,
                   matlis_dual, regular_module, sample_modules,
                   tensor_module, zero_module)
from qdual.errors import RingMismatch

RINGS = {name: corpus_ring(name) for name in ("r1", "r3", "r5", "r6")}


def test_hom_from_regular_is_identity_functor():
    for ring in RINGS.values():
        reg = regular_module(ring)
        for name in ("R", "E", "k"):
            m = builtin_module(ring, name)
            assert hom_module(reg, m).module.dim == m.dim


def test_hom_k_R_is_socle():
    r5 = RINGS["r5"]
    k = builtin_module(r5, "k")
    assert hom_module(k, regular_module(r5)).module.dim == 2
    r6 = RINGS["r6"]
    k6 = builtin_module(r6, "k")
    assert hom_module(k6, regular_module(r6)).module.dim == 1


def test_hom_k_k_is_residue_degree():
    r2 = corpus_ring("r2")
    k = builtin_module(r2, "k")
    assert hom_module(k, k).module.dim == r2.residue_degree
    k5 = builtin_module(RINGS["r5"], "k")
    assert hom_module(k5, k5).module.dim == 1


def test_tensor_with_regular_is_identity():
    for ring in RINGS.values():
        reg = regular_module(ring)
        for name in ("E", "k"):
            m = builtin_module(ring, name)
            assert tensor_module(reg, m).module.dim == m.dim
            assert tensor_module(m, reg).module.dim == m.dim


def test_tensor_E_with_k_counts_generators_of_E():
    r5 = RINGS["r5"]
    e = injective_hull(r5)
    k = builtin_module(r5, "k")
    assert tensor_module(e, k).module.dim == 2


def test_matlis_dual_is_exact_contravariant_on_dims():
    for ring in RINGS.values():
        for m in sample_modules(ring, 5, 2):
            assert matlis_dual(m).dim == m.dim


def test_injective_hull_is_dual_of_regular():
    r5 = RINGS["r5"]
    e = injective_hull(r5)
    assert e.dim == r5.dim
    assert np.array_equal(e.action[1], regular_module(r5).action[1].T)


def test_homothety_iso_for_R_and_E():
    for ring in RINGS.values():
        for name in ("R", "E"):
            chi = homothety_map(builtin_module(ring, name))
            assert is_isomorphism(chi)[0]


def test_homothety_not_iso_for_k_on_fat_point():
    r3 = RINGS["r3"]
    chi = homothety_map(builtin_module(r3, "k"))
    iso, diag = is_isomorphism(chi)
    assert not iso
    assert not diag["injective"]


def test_biduality_with_E_is_always_iso():
    for ring in RINGS.values():
        e = injective_hull(ring)
        for m in sample_modules(ring, 5, 4) + [zero_module(ring)]:
            delta = biduality_map(m, e)
            assert is_isomorphism(delta)[0]


def test_biduality_with_R_fails_for_k_over_r3():
    r3 = RINGS["r3"]
    k = builtin_module(r3, "k")
    delta = biduality_map(k, regular_module(r3))
    # Hom(k,R) = soc = k, Hom(k,R) again k: delta is k -> k here and an
    # iso on dims, but the interesting part is it stays a module map.
    assert delta.matrix.shape == (1, 1)


def test_evaluation_map_with_regular_parameter():
    for ring in RINGS.values():
        reg = regular_module(ring)
        for m in sample_modules(ring, 4, 5):
            xi = evaluation_map(reg, m)
            assert is_isomorphism(xi)[0]


def test_gamma_map_with_regular_parameter():
    for ring in RINGS.values():
        reg = regular_module(ring)
        for m in sample_modules(ring, 4, 6):
            g = gamma_map(reg, m)
            assert is_isomorphism(g)[0]


def test_hom_evaluation_map_free_case():
    r5 = RINGS["r5"]
    reg = regular_module(r5)
    k = builtin_module(r5, "k")
    theta = hom_evaluation_map(reg, k, k)
    assert is_isomorphism(theta)[0]


def test_adjunction_dimension_law():
    # dim Hom(M (x) N, L) = dim Hom(M, Hom(N, L))
    r5 = RINGS["r5"]
    mods = sample_modules(r5, 4, 9)
    for m in mods[:2]:
        for n in mods[2:]:
            l = injective_hull(r5)
            lhs = hom_module(tensor_module(m, n).module, l).module.dim
            rhs = hom_module(m, hom_module(n, l).module).module.dim
            assert lhs == rhs


def test_dual_swaps_hom_and_tensor_dims():
    r6 = RINGS["r6"]
    for m in sample_modules(r6, 4, 12):
        n = builtin_module(r6, "k")
        lhs = matlis_dual(tensor_module(m, n).module).dim
        rhs = hom_module(m, matlis_dual(n)).module.dim
        assert lhs == rhs


def test_ring_mismatch_rejected():
    with pytest.raises(RingMismatch):
        hom_module(regular_module(RINGS["r3"]), regular_module(RINGS["r5"]))


def test_zero_module_edge_cases():
    r5 = RINGS["r5"]
    z = zero_module(r5)
    reg = regular_module(r5)
    assert hom_module(z, reg).module.dim == 0
    assert hom_module(reg, z).module.dim == 0
    assert tensor_module(z, reg).module.dim == 0
    assert matlis_dual(z).dim == 0
    assert is_isomorphism(biduality_map(z, injective_hull(r5)))[0]
