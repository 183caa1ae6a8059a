"""Bit-packed linear algebra over GF(2).

Points of F_2^n are plain ints: bit j is coordinate j (coordinate 0 is the
least significant bit). Subspaces carry a canonical reduced-row-echelon
basis, so equality of Subspace objects is equality of subspaces.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

MAX_WIDTH = 16


class WidthError(ValueError):
    """Raised when operands disagree on the ambient width."""


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise WidthError(f"width must be in 1..{MAX_WIDTH}, got {n}")


def _check_point(x: int, n: int) -> None:
    if not 0 <= x < (1 << n):
        raise WidthError(f"point {x:#x} out of range for width {n}")


def dot(a: int, b: int) -> int:
    """Dot product over GF(2): parity of the bitwise AND."""
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_2^n with a canonical RREF basis.

    Basis vectors are ordered by strictly increasing pivot (lowest set bit),
    and each pivot bit is set in no other basis vector.
    """

    n: int
    basis: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> Tuple[int, ...]:
        return tuple((v & -v).bit_length() - 1 for v in self.basis)

    def reduce(self, x: int) -> int:
        """Reduce x modulo this subspace (clears all pivot bits)."""
        for v in self.basis:
            if (x >> ((v & -v).bit_length() - 1)) & 1:
                x ^= v
        return x

    def __contains__(self, x: int) -> bool:
        return self.reduce(x) == 0

    def elements(self) -> List[int]:
        """All 2^dim elements, 0 first."""
        els = [0]
        for v in self.basis:
            els += [e ^ v for e in els]
        return els


@dataclass(frozen=True)
class AffineSubspace:
    """Coset of a subspace; the representative is the minimum coset element."""

    n: int
    direction: Subspace
    representative: int

    def elements(self) -> List[int]:
        return [self.representative ^ e for e in self.direction.elements()]

    def __contains__(self, x: int) -> bool:
        return (x ^ self.representative) in self.direction


def affine_coset(direction: Subspace, point: int) -> AffineSubspace:
    """Coset point + direction with the canonical (minimal) representative."""
    _check_point(point, direction.n)
    rep = min(point ^ e for e in direction.elements())
    return AffineSubspace(direction.n, direction, rep)


def rref(vectors: Iterable[int], n: int) -> Subspace:
    """Span of the given vectors as a canonical Subspace."""
    _check_width(n)
    piv: dict[int, int] = {}
    for v in vectors:
        _check_point(v, n)
        for p in piv:
            if (v >> p) & 1:
                v ^= piv[p]
        if v:
            p = (v & -v).bit_length() - 1
            for q in piv:
                if (piv[q] >> p) & 1:
                    piv[q] ^= v
            piv[p] = v
    return Subspace(n, tuple(piv[p] for p in sorted(piv)))


def span_single(v: int, n: int) -> Subspace:
    return rref([v], n)


def contains(V: Subspace, x: int) -> bool:
    _check_point(x, V.n)
    return x in V


def sum_space(V: Subspace, W: Subspace) -> Subspace:
    if V.n != W.n:
        raise WidthError("ambient width mismatch")
    return rref(V.basis + W.basis, V.n)


def intersect(V: Subspace, W: Subspace) -> Subspace:
    """Intersection of two subspaces."""
    if V.n != W.n:
        raise WidthError("ambient width mismatch")
    small, large = (V, W) if V.dim <= W.dim else (W, V)
    return rref([e for e in small.elements() if e in large], V.n)


def is_direct_complement(V: Subspace, W: Subspace) -> bool:
    """True iff V + W = F_2^n with trivial intersection."""
    if V.n != W.n:
        raise WidthError("ambient width mismatch")
    return V.dim + W.dim == V.n and intersect(V, W).dim == 0


def orthogonal_complement(V: Subspace) -> Subspace:
    """All x with <x, v> = 0 for every v in V."""
    n = V.n
    pivots = V.pivots()
    pivot_set = set(pivots)
    vecs = []
    for j in range(n):
        if j in pivot_set:
            continue
        x = 1 << j
        for i, p in enumerate(pivots):
            if (V.basis[i] >> j) & 1:
                x |= 1 << p
        vecs.append(x)
    return rref(vecs, n)


def hyperplane(b: int, n: int) -> Subspace:
    """H_b = {x : <b, x> = 0}, of dimension n-1."""
    _check_point(b, n)
    if b == 0:
        raise ValueError("hyperplane normal must be nonzero")
    return orthogonal_complement(rref([b], n))


def hyperplane_coset(b: int, n: int) -> AffineSubspace:
    """The complement coset {x : <b, x> = 1} of H_b."""
    H = hyperplane(b, n)
    # minimal element with <b, x> = 1 is the lowest set bit of b
    return AffineSubspace(n, H, b & -b)


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n."""
    if not 0 <= k <= n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (k - i)) - 1
    assert num % den == 0
    return num // den


def enumerate_subspaces(n: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_2^n exactly once.

    Order is deterministic: lexicographic over pivot patterns, then over the
    free entries of the RREF matrix.
    """
    _check_width(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        yield Subspace(n, ())
        return
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        # free positions of row i: columns above its pivot that are not pivots
        free = [[j for j in range(p + 1, n) if j not in pivot_set]
                for p in pivots]
        counts = [len(f) for f in free]
        total = sum(counts)
        for bits in range(1 << total):
            rows = []
            off = 0
            for i, p in enumerate(pivots):
                row = 1 << p
                for t, j in enumerate(free[i]):
                    if (bits >> (off + t)) & 1:
                        row |= 1 << j
                rows.append(row)
                off += counts[i]
            yield Subspace(n, tuple(rows))


def enumerate_superspaces(V: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace containing V, each exactly once."""
    n, d = V.n, V.dim
    if not d <= k <= n:
        raise ValueError(f"need dim(V) <= k <= n, got k={k}")
    if k == d:
        yield V
        return
    # complement spanned by the non-pivot unit vectors; every superspace W
    # of V satisfies W = V + (W cap C), so subspaces of C of dim k-d
    # biject with the superspaces
    free_cols = [j for j in range(n) if j not in set(V.pivots())]
    for U in enumerate_subspaces(len(free_cols), k - d):
        mapped = []
        for u in U.basis:
            w = 0
            for i, j in enumerate(free_cols):
                if (u >> i) & 1:
                    w |= 1 << j
            mapped.append(w)
        yield rref(V.basis + tuple(mapped), n)


def random_subspace(n: int, k: int, rng: random.Random) -> Subspace:
    """A uniformly-ish random k-dimensional subspace (rejection on rank)."""
    while True:
        V = rref([rng.randrange(1 << n) for _ in range(k)], n)
        if V.dim == k:
            return V


def subspace_from_elements(elements: Sequence[int], n: int) -> Optional[Subspace]:
    """The subspace equal to the given element set, or None if not closed."""
    V = rref(elements, n)
    if (1 << V.dim) != len(set(elements) | {0}):
        return None
    return V
