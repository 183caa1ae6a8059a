"""Vectorial Boolean functions: Walsh spectra, ANF degree, DDT.

All spectral values are exact signed integers; the fast transform is the
in-place Walsh-Hadamard butterfly, cross-checked by the naive double sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from .gf2 import dot


class NotPlateaued(ValueError):
    """A component's Walsh values are not two-valued {0, +-A}."""

    def __init__(self, b: int, msg: str = ""):
        self.b = b
        super().__init__(msg or f"component b={b:#x} is not plateaued")


@dataclass(frozen=True)
class VBF:
    """Function F_2^n -> F_2^m as a full lookup table."""

    n: int
    m: int
    table: Tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise ValueError(f"table must have 2^{self.n} entries")
        if any(not 0 <= y < (1 << self.m) for y in self.table):
            raise ValueError(f"table entries must be < 2^{self.m}")

    def __call__(self, x: int) -> int:
        return self.table[x]


@lru_cache(maxsize=1)
def _parity16() -> np.ndarray:
    v = np.arange(1 << 16, dtype=np.uint16)
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return (v & 1).astype(np.int8)


def _fwht_rows(a: np.ndarray) -> np.ndarray:
    """Walsh-Hadamard transform along the last axis, exact int64."""
    rows, size = a.shape
    h = 1
    while h < size:
        a = a.reshape(rows, -1, 2, h)
        x = a[:, :, 0, :].copy()
        y = a[:, :, 1, :]
        a[:, :, 0, :] = x + y
        a[:, :, 1, :] = x - y
        a = a.reshape(rows, size)
        h *= 2
    return a


def _sign_rows(F: VBF, bs: np.ndarray) -> np.ndarray:
    """Sign vectors (-1)^{<b, F(x)>} for the given component masks."""
    tbl = np.asarray(F.table, dtype=np.uint32)
    comp = _parity16()[bs[:, None] & tbl[None, :]]
    return 1 - 2 * comp.astype(np.int64)


def walsh_row(F: VBF, b: int) -> np.ndarray:
    """All values W_F(b, a), indexed by the mask a."""
    if not 0 <= b < (1 << F.m):
        raise ValueError("component mask out of range")
    return _fwht_rows(_sign_rows(F, np.array([b], dtype=np.uint32)))[0]


def walsh_all(F: VBF) -> np.ndarray:
    """Matrix of Walsh values, row b, column a (row 0 is the trivial one)."""
    bs = np.arange(1 << F.m, dtype=np.uint32)
    return _fwht_rows(_sign_rows(F, bs))


def walsh_naive(F: VBF, b: int, a: int) -> int:
    """Direct double-loop evaluation; independent oracle for walsh_row."""
    return sum(1 - 2 * (dot(b, F.table[x]) ^ dot(a, x))
               for x in range(1 << F.n))


def _exponent_of_row(row: np.ndarray, n: int, b: int) -> int:
    amp = int(np.max(np.abs(row)))
    vals = np.unique(np.abs(row))
    if not set(int(v) for v in vals) <= {0, amp}:
        raise NotPlateaued(b)
    # plateaued: amp is a power of two 2^((n+l)/2) by Parseval
    l = 2 * (amp.bit_length() - 1) - n
    if amp != 1 << ((n + l) // 2) or l < 0:
        raise NotPlateaued(b, f"amplitude {amp} of b={b:#x} is not 2^((n+l)/2)")
    return l


def amplitude(F: VBF, b: int) -> int:
    """max_a |W_F(b, a)| for a nonzero component."""
    if b == 0:
        raise ValueError("trivial component")
    return int(np.max(np.abs(walsh_row(F, b))))


def is_plateaued(F: VBF, b: int) -> bool:
    if b == 0:
        raise ValueError("trivial component")
    try:
        _exponent_of_row(walsh_row(F, b), F.n, b)
        return True
    except NotPlateaued:
        return False


def component_exponent(F: VBF, b: int) -> int:
    """Exponent l with amplitude 2^((n+l)/2); raises NotPlateaued."""
    if b == 0:
        raise ValueError("trivial component")
    return _exponent_of_row(walsh_row(F, b), F.n, b)


def component_exponents(F: VBF) -> List[int]:
    """Exponent l_b for every nonzero b, in mask order (b = 1, 2, ...)."""
    W = walsh_all(F)
    out = []
    for b in range(1, 1 << F.m):
        out.append(_exponent_of_row(W[b], F.n, b))
    return out


@dataclass(frozen=True)
class AmplitudeDistribution:
    """Multiset of exponents l over the non-trivial components (k_0 = bent)."""

    n: int
    counts: Tuple[Tuple[int, int], ...]  # sorted (l, multiplicity), k > 0

    @property
    def total(self) -> int:
        return sum(k for _, k in self.counts)

    def count(self, l: int) -> int:
        return dict(self.counts).get(l, 0)

    @property
    def max_exponent(self) -> int:
        return max(l for l, _ in self.counts)

    def linearity(self) -> int:
        return 1 << ((self.n + self.max_exponent) // 2)

    def __str__(self) -> str:
        return "[" + ",".join(f"{l}^{k}" for l, k in self.counts) + "]"


def amplitude_distribution(F: VBF) -> AmplitudeDistribution:
    """Exponent multiset of all non-trivial components.

    Raises NotPlateaued (with the offending mask) on any non-plateaued
    component; approximate binning would corrupt every downstream rule.
    """
    counts: Dict[int, int] = {}
    for l in component_exponents(F):
        counts[l] = counts.get(l, 0) + 1
    return AmplitudeDistribution(F.n, tuple(sorted(counts.items())))


def anf(F: VBF) -> List[int]:
    """ANF coefficient table via the Mobius transform, all output bits at once."""
    a = list(F.table)
    for i in range(F.n):
        bit = 1 << i
        for mask in range(1 << F.n):
            if mask & bit:
                a[mask] ^= a[mask ^ bit]
    return a


def algebraic_degree(F: VBF) -> int:
    """Max monomial weight over the ANFs of all output coordinates."""
    coeffs = anf(F)
    deg = 0
    for mask in range(1 << F.n):
        if coeffs[mask]:
            deg = max(deg, mask.bit_count())
    return deg


def is_quadratic(F: VBF) -> bool:
    return algebraic_degree(F) <= 2


def ddt_row(F: VBF, a: int) -> np.ndarray:
    """Row a of the difference distribution table."""
    tbl = np.asarray(F.table, dtype=np.int64)
    idx = np.arange(1 << F.n)
    return np.bincount(tbl ^ tbl[idx ^ a], minlength=1 << F.m)


def ddt(F: VBF) -> np.ndarray:
    """Full 2^n x 2^m difference distribution table."""
    return np.stack([ddt_row(F, a) for a in range(1 << F.n)])


def differential_uniformity(F: VBF) -> int:
    return max(int(ddt_row(F, a).max()) for a in range(1, 1 << F.n))


def is_apn(F: VBF) -> bool:
    return differential_uniformity(F) == 2


def fourth_moment_check(F: VBF) -> bool:
    """Fourth-moment identity: sum of 2^{l_b} over b != 0 equals 2(2^n - 1).

    For quadratic plateaued F with n = m this holds iff F is APN.
    """
    if F.n != F.m:
        raise ValueError("requires n = m")
    total = sum(1 << l for l in component_exponents(F))
    return total == 2 * ((1 << F.n) - 1)
