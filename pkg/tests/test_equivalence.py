import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qapn.catalog import catalog
from qapn.equivalence import (AffineMap, SingularMatrix, ea_transform,
                              identity_map, invert, map_subspace,
                              random_invertible, rank, seeded_ea_triple,
                              transpose_linear, verify_nonbent_equivariance,
                              verify_partition_equivariance)
from qapn.gf2 import dot, rref
from qapn.vbf import amplitude_distribution, is_apn

CUBE6 = catalog("cube", 6).function


def test_affine_map_call():
    A = AffineMap(2, 2, (0b01, 0b11), const=0b10)
    assert A(0) == 0b10
    # linear part sends 01 to 11 (bit0 = <01,01>, bit1 = <11,01>); xor const
    assert A(0b01) == 0b11 ^ 0b10
    with pytest.raises(ValueError):
        AffineMap(2, 3, (1, 2))


def test_identity_and_rank():
    I = identity_map(5)
    assert all(I(x) == x for x in range(32))
    assert rank(I) == 5
    assert rank(AffineMap(3, 3, (1, 1, 1))) == 1


def test_transpose_adjoint_identity():
    A = random_invertible(6, 11)
    At = transpose_linear(A)
    for x in (1, 13, 44, 63):
        for b in (3, 21, 62):
            assert dot(A(x), b) == dot(x, At(b))


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_invert_roundtrip(seed):
    L = random_invertible(5, seed)
    A = AffineMap(5, 5, L.rows, const=seed % 32)
    Ainv = invert(A)
    assert all(Ainv(A(x)) == x for x in range(32))
    assert all(A(Ainv(x)) == x for x in range(32))


def test_invert_singular():
    with pytest.raises(SingularMatrix):
        invert(AffineMap(3, 3, (1, 1, 2)))
    with pytest.raises(SingularMatrix):
        invert(AffineMap(2, 3, (1, 2, 3)))


def test_random_invertible_deterministic():
    assert random_invertible(6, 4) == random_invertible(6, 4)
    assert rank(random_invertible(8, 123)) == 8


def test_ea_transform_preserves_apn_and_distribution():
    a1, a2, a3 = seeded_ea_triple(6, 7)
    G = ea_transform(CUBE6, a1, a2, a3)
    assert is_apn(G)
    assert str(amplitude_distribution(G)) == str(amplitude_distribution(CUBE6))


def test_ea_transform_rejects_singular():
    bad = AffineMap(6, 6, (1,) * 6)
    with pytest.raises(SingularMatrix):
        ea_transform(CUBE6, bad, identity_map(6), identity_map(6))


def test_map_subspace():
    L = identity_map(4)
    V = rref([0b0011, 0b0101], 4)
    assert map_subspace(L, V) == V
    A = random_invertible(4, 9)
    W = map_subspace(A, V)
    assert W.dim == V.dim
    assert set(W.elements()) == {A(v) for v in V.elements()}


@pytest.mark.parametrize("seed", range(8))
def test_equivariance_seeded(seed):
    a1, a2, a3 = seeded_ea_triple(6, seed)
    G = ea_transform(CUBE6, a1, a2, a3)
    assert verify_nonbent_equivariance(CUBE6, G, a1)
    assert verify_partition_equivariance(CUBE6, G, a1, a2, a3)


def test_equivariance_fails_with_wrong_map():
    a1, a2, a3 = seeded_ea_triple(6, 0)
    G = ea_transform(CUBE6, a1, a2, a3)
    wrong = random_invertible(6, 999)
    if wrong.rows != a1.rows:
        assert not verify_nonbent_equivariance(CUBE6, G, wrong)
