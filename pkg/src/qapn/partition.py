"""Vector space partition induced by a crooked (quadratic APN) function.

Every nonzero direction a is classified by the affine hyperplane that the
difference map x -> F(x) + F(x+a) images onto; grouping by the hyperplane
normal yields the subspaces V_b that partition F_2^n minus zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .gf2 import Subspace, dot, orthogonal_complement, rref
from .vbf import VBF, component_exponents


class NotCrooked(ValueError):
    """Some difference map's image is not an affine hyperplane.

    Signals invalid input (the function is not quadratic APN / crooked).
    """

    def __init__(self, a: int, msg: str = ""):
        self.a = a
        super().__init__(msg or f"image of difference map at a={a:#x} "
                         "is not an affine hyperplane")


class StructureViolation(AssertionError):
    """Internal consistency check failed; indicates an implementation bug."""


@dataclass(frozen=True)
class DirectionClass:
    """Classification of one direction: image(D_{F,a}) = H_b or its coset."""

    a: int
    b: int
    side: int  # 0: image = H_b; 1: image = complement coset


@dataclass(frozen=True)
class PartitionMember:
    v: Subspace          # V_b
    t: Subspace          # T_b
    tbar_nonempty: bool


@dataclass(frozen=True)
class DerivedPartition:
    n: int
    members: Dict[int, PartitionMember]  # keyed by b, dim(V_b) >= 1 only

    def dims(self) -> List[int]:
        return sorted(m.v.dim for m in self.members.values())


@dataclass(frozen=True)
class PartitionType:
    """Multiset of member dimensions, sorted ascending."""

    counts: Tuple[Tuple[int, int], ...]  # (dimension, multiplicity)

    @property
    def total_points(self) -> int:
        return sum(k * ((1 << d) - 1) for d, k in self.counts)

    def __str__(self) -> str:
        return "[" + ",".join(f"{d}^{k}" for d, k in self.counts) + "]"


def type_of_dims(dims: List[int]) -> PartitionType:
    counts: Dict[int, int] = {}
    for d in dims:
        counts[d] = counts.get(d, 0) + 1
    return PartitionType(tuple(sorted(counts.items())))


def image_of_difference(F: VBF, a: int) -> DirectionClass:
    """Certificate that image(D_{F,a}) is an affine hyperplane c + H_b.

    Returns the unique normal b and the side <b, c>; raises NotCrooked if
    the image is not an affine hyperplane.
    """
    if a == 0 or a >= (1 << F.n):
        raise ValueError("direction must be nonzero and in range")
    tbl = F.table
    img = {tbl[x] ^ tbl[x ^ a] for x in range(1 << F.n)}
    if len(img) != 1 << (F.m - 1):
        raise NotCrooked(a, f"image size {len(img)} at a={a:#x}")
    y0 = min(img)
    H = rref((y ^ y0 for y in img), F.m)
    if H.dim != F.m - 1:
        raise NotCrooked(a, f"image at a={a:#x} does not span a hyperplane")
    normal = orthogonal_complement(H)
    if normal.dim != 1:
        raise StructureViolation("hyperplane normal is not one-dimensional")
    b = normal.basis[0]
    return DirectionClass(a, b, dot(b, y0))


def build_partition(F: VBF) -> DerivedPartition:
    """The family {V_b} for a quadratic APN function with n = m.

    Verifies the structural facts along the way: T_b is XOR-closed and the
    complement class, when nonempty, is a single coset of T_b.
    """
    if F.n != F.m:
        raise ValueError("partition extraction requires n = m")
    n = F.n
    t_sets: Dict[int, set] = {}
    tbar_sets: Dict[int, set] = {}
    for a in range(1, 1 << n):
        cls = image_of_difference(F, a)
        (t_sets if cls.side == 0 else tbar_sets).setdefault(cls.b, set()).add(a)

    members: Dict[int, PartitionMember] = {}
    for b in set(t_sets) | set(tbar_sets):
        T = t_sets.get(b, set()) | {0}
        Tbar = tbar_sets.get(b, set())
        for x in T:
            for y in T:
                if (x ^ y) not in T:
                    raise StructureViolation(f"T_b not XOR-closed at b={b:#x}")
        if Tbar:
            c = min(Tbar)
            if {c ^ t for t in T} != Tbar:
                raise StructureViolation(
                    f"complement class at b={b:#x} is not a coset of T_b")
        V = rref(T | Tbar, n)
        Tspace = rref(T, n)
        if (1 << V.dim) != len(T) + len(Tbar):
            raise StructureViolation(f"V_b at b={b:#x} is not a subspace")
        expected = Tspace.dim + (1 if Tbar else 0)
        if V.dim != expected:
            raise StructureViolation(f"dim(V_b) != expected at b={b:#x}")
        members[b] = PartitionMember(V, Tspace, bool(Tbar))
    return DerivedPartition(n, members)


def verify_partition(P: DerivedPartition) -> bool:
    """Exhaustive check: each nonzero vector lies in exactly one member."""
    seen = set()
    for m in P.members.values():
        for e in m.v.elements():
            if e == 0:
                continue
            if e in seen:
                return False
            seen.add(e)
    return len(seen) == (1 << P.n) - 1


def partition_type(P: DerivedPartition) -> PartitionType:
    return type_of_dims(P.dims())


def verify_dim_amplitude(F: VBF, P: DerivedPartition) -> bool:
    """Spectral/differential cross-check: exponent of F_b equals dim(V_b)."""
    exps = component_exponents(F)
    for b in range(1, 1 << F.n):
        want = P.members[b].v.dim if b in P.members else 0
        if exps[b - 1] != want:
            return False
    return True
