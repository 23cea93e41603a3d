"""Ring validation: corpus structure, law violations, locality."""

import numpy as np
import pytest

from qdual import corpus_ring, parse_ring, validate_ring
from qdual.errors import (NotAssociative, NotCommutative, NotLocal,
                          NotPrime)


def test_corpus_r1_is_the_prime_field():
    r = corpus_ring("r1")
    assert r.p == 2 and r.dim == 1
    assert r.radical.shape[1] == 0
    assert r.residue_degree == 1


def test_corpus_r2_is_a_field_extension():
    r = corpus_ring("r2")
    assert r.radical.shape[1] == 0
    assert r.residue_degree == 2


def test_corpus_radical_dimensions():
    expected = {"r3": 1, "r4": 2, "r5": 2, "r6": 3}
    for name, rad in expected.items():
        r = corpus_ring(name)
        assert r.radical.shape[1] == rad
        assert r.residue_degree == 1


def test_r7_rejected_not_local():
    with pytest.raises(NotLocal):
        corpus_ring("r7")


def test_truncated_polynomial_radical():
    # F_2[x]/(x^4): radical (x, x^2, x^3) has dimension 3
    text = """
[ring]
name = t4
p = 2
dim = 4
unit = 1 0 0 0
mul 0 0 = 1 0 0 0
mul 0 1 = 0 1 0 0
mul 0 2 = 0 0 1 0
mul 0 3 = 0 0 0 1
mul 1 1 = 0 0 1 0
mul 1 2 = 0 0 0 1
mul 1 3 = 0 0 0 0
mul 2 2 = 0 0 0 0
mul 2 3 = 0 0 0 0
mul 3 3 = 0 0 0 0
"""
    r = parse_ring(text)
    assert r.radical.shape[1] == 3


def test_not_prime_rejected():
    struct = np.zeros((1, 1, 1), dtype=np.int64)
    struct[0, 0, 0] = 1
    with pytest.raises(NotPrime):
        validate_ring("bad", 4, 1, [1], struct)
    with pytest.raises(NotPrime):
        validate_ring("huge", 1 << 17, 1, [1], struct)


def test_not_associative_rejected_with_witness():
    # e1*e1 = e2, e1*e2 = 1, e2*e2 = 0: (e1 e1) e2 = 0 but e1 (e1 e2) = e1
    struct = np.zeros((3, 3, 3), dtype=np.int64)
    struct[0, 0] = [1, 0, 0]
    struct[0, 1] = struct[1, 0] = [0, 1, 0]
    struct[0, 2] = struct[2, 0] = [0, 0, 1]
    struct[1, 1] = [0, 0, 1]
    struct[1, 2] = struct[2, 1] = [1, 0, 0]
    struct[2, 2] = [0, 0, 0]
    with pytest.raises(NotAssociative) as info:
        validate_ring("nonassoc", 2, 3, [1, 0, 0], struct)
    assert info.value.witness is not None


def test_idempotent_pair_rejected():
    # F_2[x]/(x^2 - x) has a nontrivial idempotent, hence is not local
    struct = np.zeros((2, 2, 2), dtype=np.int64)
    struct[0, 0] = [1, 0]
    struct[0, 1] = struct[1, 0] = [0, 1]
    struct[1, 1] = [0, 1]
    with pytest.raises(NotLocal):
        validate_ring("idem", 2, 2, [1, 0], struct)


def test_not_commutative_rejected():
    struct = np.zeros((2, 2, 2), dtype=np.int64)
    struct[0, 0] = [1, 0]
    struct[0, 1] = [0, 1]
    struct[1, 0] = [1, 0]  # e1*e0 != e0*e1
    struct[1, 1] = [0, 0]
    with pytest.raises(NotCommutative):
        validate_ring("noncomm", 2, 2, [1, 0], struct)


def test_multiplication_matrices_match_struct():
    r = corpus_ring("r6")
    for i in range(r.dim):
        for j in range(r.dim):
            e_j = np.zeros(r.dim, dtype=np.int64)
            e_j[j] = 1
            assert np.array_equal(r.mult[i] @ e_j % r.p, r.struct[i, j])
