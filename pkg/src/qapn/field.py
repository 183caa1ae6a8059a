"""GF(2^n) arithmetic in a polynomial basis.

Elements are ints: bit j is the coefficient of alpha^j, where alpha is a
root of the defining modulus. Addition is XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .vbf import VBF

# Fixed default moduli so that catalog lookup tables are byte-reproducible.
_DEFAULT_MODULI = {
    6: (1 << 6) | 0b11,              # X^6 + X + 1
    8: (1 << 8) | 0b11011,           # X^8 + X^4 + X^3 + X + 1
    10: (1 << 10) | (1 << 3) | 1,    # X^10 + X^3 + 1
}


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of polynomial division over GF(2)."""
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_divisible(a: int, d: int) -> bool:
    return poly_mod(a, d) == 0


def is_irreducible(poly: int) -> bool:
    """Exhaustive trial division; fine at degree <= 16."""
    d = poly_degree(poly)
    if d < 1:
        return False
    if d == 1:
        return True
    if poly & 1 == 0:  # divisible by X
        return False
    for f in range(3, 1 << (d // 2 + 1), 2):
        if poly_degree(f) >= 1 and poly_divisible(poly, f):
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Fixed modulus for n in {6, 8, 10}; else the smallest irreducible."""
    if n in _DEFAULT_MODULI:
        return _DEFAULT_MODULI[n]
    for m in range((1 << n) + 1, 1 << (n + 1), 2):
        if is_irreducible(m):
            return m
    raise ValueError(f"no irreducible polynomial of degree {n} found")


@dataclass(frozen=True)
class FieldSpec:
    n: int
    modulus: int

    def __post_init__(self):
        if poly_degree(self.modulus) != self.n:
            raise ValueError("modulus degree must equal n")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @property
    def order(self) -> int:
        return 1 << self.n


def field(n: int) -> FieldSpec:
    return FieldSpec(n, default_modulus(n))


def mul(spec: FieldSpec, a: int, b: int) -> int:
    """Product in the polynomial basis (carry-less multiply + reduce)."""
    r = 0
    top = 1 << spec.n
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & top:
            a ^= spec.modulus
        b >>= 1
    return r


def pow_(spec: FieldSpec, a: int, e: int) -> int:
    """Square-and-multiply exponentiation; a^0 = 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    r = 1
    while e:
        if e & 1:
            r = mul(spec, r, a)
        a = mul(spec, a, a)
        e >>= 1
    return r


def inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow_(spec, a, (1 << spec.n) - 2)


def trace(spec: FieldSpec, a: int) -> int:
    """Absolute trace to GF(2): sum of the conjugates a^(2^i)."""
    t = 0
    x = a
    for _ in range(spec.n):
        t ^= x
        x = mul(spec, x, x)
    assert t in (0, 1)
    return t


def multiplicative_order(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    group = (1 << spec.n) - 1
    order = group
    for p in _prime_factors(group):
        while order % p == 0 and pow_(spec, a, order // p) == 1:
            order //= p
    return order


def _prime_factors(x: int) -> list[int]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        out.append(x)
    return out


@lru_cache(maxsize=None)
def generator(spec: FieldSpec) -> int:
    """Smallest generator of the multiplicative group."""
    group = (1 << spec.n) - 1
    for g in range(2, 1 << spec.n):
        if multiplicative_order(spec, g) == group:
            return g
    raise AssertionError("no generator found")  # unreachable for a field


def monomial_vbf(spec: FieldSpec, d: int) -> VBF:
    """The power map x -> x^d over GF(2^n) as a lookup table."""
    return VBF(spec.n, spec.n,
               tuple(pow_(spec, x, d) for x in range(1 << spec.n)))
