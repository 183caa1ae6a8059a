"""Monomial function catalog: cube, Gold and Kasami power maps."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import field as gf
from .vbf import VBF


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    exponent: int
    modulus: int
    apn_expected: bool  # gcd condition; reported, not enforced
    function: VBF


def catalog(name: str, n: int) -> CatalogEntry:
    """Build a catalog monomial over the default modulus.

    Names: "cube" (= gold_1), "gold_<k>" for x^(2^k+1), "kasami_<k>" for
    x^(4^k - 2^k + 1). Gold and Kasami maps are APN iff gcd(k, n) = 1.
    """
    name = name.strip().lower()
    if name == "cube":
        k, d = 1, 3
    elif name.startswith("gold_"):
        k = int(name.split("_", 1)[1])
        d = (1 << k) + 1
    elif name.startswith("kasami_"):
        k = int(name.split("_", 1)[1])
        d = (1 << (2 * k)) - (1 << k) + 1
    else:
        raise ValueError(f"unknown catalog name {name!r}; use cube, "
                         "gold_<k> or kasami_<k>")
    if not 1 <= k < n:
        raise ValueError(f"exponent parameter k={k} out of range for n={n}")
    spec = gf.field(n)
    return CatalogEntry(name, n, d, spec.modulus,
                        math.gcd(k, n) == 1, gf.monomial_vbf(spec, d))
