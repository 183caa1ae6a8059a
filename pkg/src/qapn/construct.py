"""Explicit vector space partitions: spreads, the product construction,
and spread-refinement of individual members."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from . import field as gf
from .gf2 import Subspace, rref
from .partition import PartitionType, type_of_dims


@dataclass(frozen=True)
class ExplicitPartition:
    n: int
    members: Tuple[Subspace, ...]


def partition_type_of(P: ExplicitPartition) -> PartitionType:
    return type_of_dims([m.dim for m in P.members])


def verify(P: ExplicitPartition) -> bool:
    """Exhaustive cover/disjointness check over all nonzero points."""
    seen = set()
    for m in P.members:
        for e in m.elements():
            if e == 0:
                continue
            if e in seen:
                return False
            seen.add(e)
    return len(seen) == (1 << P.n) - 1


def spread(n: int, t: int) -> ExplicitPartition:
    """t-spread of F_2^n via the multiplicative cosets of the subfield."""
    if n % t:
        raise ValueError(f"spread requires t | n, got t={t}, n={n}")
    if t == n:
        basis = tuple(1 << j for j in range(n))
        return ExplicitPartition(n, (Subspace(n, basis),))
    spec = gf.field(n)
    g = gf.generator(spec)
    q = ((1 << n) - 1) // ((1 << t) - 1)
    gq = gf.pow_(spec, g, q)
    subfield = [0]
    x = 1
    for _ in range((1 << t) - 1):
        subfield.append(x)
        x = gf.mul(spec, x, gq)
    members: List[Subspace] = []
    rep = 1
    for _ in range(q):
        members.append(rref((gf.mul(spec, rep, s) for s in subfield), n))
        rep = gf.mul(spec, rep, g)
    return ExplicitPartition(n, tuple(members))


def _embedding_root(small: gf.FieldSpec, big: gf.FieldSpec) -> int:
    """A root of the small field's modulus inside the big field."""
    for r in range(1 << big.n):
        acc = 0
        p = small.modulus
        j = 0
        while p:
            if p & 1:
                acc ^= gf.pow_(big, r, j)
            p >>= 1
            j += 1
        if acc == 0:
            return r
    raise ValueError("small modulus has no root in the big field "
                     "(subfield embedding impossible)")


def bu_partition(n: int, s: int) -> ExplicitPartition:
    """Partition of type [s^(2^(n-s)), (n-s)^1] via F_{2^(n-s)} x F_{2^s}.

    Points encode as (y << s) | x with y in the big factor and x in the
    small one; the scalar action uses the subfield embedding (s | n-s).
    """
    ns = n - s
    if ns % s:
        raise ValueError(f"requires s | (n - s), got s={s}, n={n}")
    big = gf.field(ns)
    small = gf.field(s)
    root = _embedding_root(small, big)
    # phi(x) evaluates x's polynomial coordinates at the embedded root
    phi = []
    for x in range(1 << s):
        acc = 0
        for j in range(s):
            if (x >> j) & 1:
                acc ^= gf.pow_(big, root, j)
        phi.append(acc)
    members: List[Subspace] = [Subspace(n, tuple(1 << (s + j)
                                                 for j in range(ns)))]
    for alpha in range(1 << ns):
        vecs = [(gf.mul(big, alpha, phi[x]) << s) | x for x in range(1 << s)]
        members.append(rref(vecs, n))
    return ExplicitPartition(n, tuple(members))


def refine_member(P: ExplicitPartition, index: int, t: int) -> ExplicitPartition:
    """Replace member `index` by a t-spread of it (t must divide its dim)."""
    V = P.members[index]
    if V.dim % t:
        raise ValueError(f"t={t} does not divide member dimension {V.dim}")
    if V.dim == t:
        return P
    inner = spread(V.dim, t)
    new_members = []
    for U in inner.members:
        vecs = []
        for u in U.basis:
            w = 0
            for i in range(V.dim):
                if (u >> i) & 1:
                    w ^= V.basis[i]
            vecs.append(w)
        new_members.append(rref(vecs, P.n))
    return ExplicitPartition(
        P.n, P.members[:index] + tuple(new_members) + P.members[index + 1:])
