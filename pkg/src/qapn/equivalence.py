"""Affine maps over GF(2) and extended-affine (EA) transforms of VBFs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from .gf2 import Subspace, dot, rref
from .partition import DerivedPartition, build_partition
from .vbf import VBF
from .blocking import nonbent_set


class SingularMatrix(ValueError):
    """Inversion of a non-invertible linear map."""


@dataclass(frozen=True)
class AffineMap:
    """x -> rows . x XOR constant; rows[i] is the mask of output bit i."""

    n_in: int
    n_out: int
    rows: Tuple[int, ...]
    const: int = 0

    def __post_init__(self):
        if len(self.rows) != self.n_out:
            raise ValueError("need one row per output bit")

    def __call__(self, x: int) -> int:
        y = self.const
        for i, row in enumerate(self.rows):
            y ^= dot(row, x) << i
        return y

    @property
    def is_linear(self) -> bool:
        return self.const == 0

    def linear_part(self) -> "AffineMap":
        return AffineMap(self.n_in, self.n_out, self.rows, 0)


def identity_map(n: int) -> AffineMap:
    return AffineMap(n, n, tuple(1 << i for i in range(n)))


def apply_map(A: AffineMap, x: int) -> int:
    return A(x)


def rank(A: AffineMap) -> int:
    return rref(A.rows, A.n_in).dim


def transpose_linear(A: AffineMap) -> AffineMap:
    """Adjoint of the linear part: <L(x), b> = <x, L^T(b)>."""
    cols = []
    for j in range(A.n_in):
        col = 0
        for i, row in enumerate(A.rows):
            if (row >> j) & 1:
                col |= 1 << i
        cols.append(col)
    return AffineMap(A.n_out, A.n_in, tuple(cols))


def invert(A: AffineMap) -> AffineMap:
    """Inverse affine map; requires a square full-rank linear part."""
    if A.n_in != A.n_out:
        raise SingularMatrix("only square maps are invertible")
    n = A.n_in
    # Gauss-Jordan on rows augmented with the identity
    aug = [(A.rows[i], 1 << i) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if (aug[r][0] >> col) & 1), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and (aug[r][0] >> col) & 1:
                aug[r] = (aug[r][0] ^ aug[col][0], aug[r][1] ^ aug[col][1])
    inv_rows = tuple(aug[i][1] for i in range(n))
    linv = AffineMap(n, n, inv_rows)
    return AffineMap(n, n, inv_rows, linv(A.const))


def random_invertible(n: int, seed: int) -> AffineMap:
    """Seeded rejection sampling of an invertible linear map."""
    rng = random.Random(seed)
    while True:
        rows = tuple(rng.randrange(1, 1 << n) for _ in range(n))
        A = AffineMap(n, n, rows)
        if rank(A) == n:
            return A


def random_affine(n_in: int, n_out: int, seed: int) -> AffineMap:
    rng = random.Random(seed)
    return AffineMap(n_in, n_out,
                     tuple(rng.randrange(1 << n_in) for _ in range(n_out)),
                     rng.randrange(1 << n_out))


def ea_transform(F: VBF, A1: AffineMap, A2: AffineMap,
                 A3: AffineMap) -> VBF:
    """G(x) = A1(F(A2(x))) XOR A3(x); A1, A2 must be invertible."""
    if rank(A1.linear_part()) != A1.n_in or rank(A2.linear_part()) != A2.n_in:
        raise SingularMatrix("A1 and A2 must be invertible")
    return VBF(F.n, F.m, tuple(A1(F.table[A2(x)]) ^ A3(x)
                               for x in range(1 << F.n)))


def seeded_ea_triple(n: int, seed: int) -> Tuple[AffineMap, AffineMap, AffineMap]:
    """Deterministic (A1, A2, A3) with invertible A1, A2 and affine A3."""
    rng = random.Random(seed)
    a1 = random_invertible(n, rng.randrange(2**31))
    a1 = AffineMap(n, n, a1.rows, rng.randrange(1 << n))
    a2 = random_invertible(n, rng.randrange(2**31))
    a2 = AffineMap(n, n, a2.rows, rng.randrange(1 << n))
    a3 = random_affine(n, n, rng.randrange(2**31))
    return a1, a2, a3


def verify_nonbent_equivariance(F: VBF, G: VBF, A1: AffineMap) -> bool:
    """L1^T carries N_G onto N_F (so the sets are GL-equivalent).

    With G = A1 o F o A2 + A3, component b of G is bent exactly when
    component L1^T(b) of F is.
    """
    l1t = transpose_linear(A1)
    return nonbent_set(F) == {l1t(b) for b in nonbent_set(G)}


def map_subspace(L: AffineMap, V: Subspace) -> Subspace:
    return rref((L(v) for v in V.basis), L.n_out)


def verify_partition_equivariance(F: VBF, G: VBF, A1: AffineMap,
                                  A2: AffineMap, A3: AffineMap) -> bool:
    """Member-wise check V^G_b = L2^{-1}(V^F_{L1^T(b)}) for all b."""
    P_F = build_partition(F)
    P_G = build_partition(G)
    l1t = transpose_linear(A1)
    l2inv = invert(A2.linear_part())
    for b in range(1, 1 << F.n):
        bf = l1t(b)
        in_g = b in P_G.members
        if in_g != (bf in P_F.members):
            return False
        if in_g and P_G.members[b].v != map_subspace(l2inv,
                                                     P_F.members[bf].v):
            return False
    return True
