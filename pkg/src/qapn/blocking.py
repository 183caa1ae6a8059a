"""Blocking-set analysis of the non-bent component set in PG(m-1,2).

All dimensions here are vector-space dimensions: a projective k-space of
PG(m-1,2) corresponds to a (k+1)-dimensional subspace of F_2^m.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .gf2 import (Subspace, enumerate_subspaces, enumerate_superspaces,
                  gaussian_binomial, intersect, random_subspace, rref,
                  span_single)
from .vbf import VBF, component_exponents


class BudgetExceeded(RuntimeError):
    """Search exceeded its node budget; the result is unknown, not negative."""


@dataclass
class ScanResult:
    ok: bool
    counterexample: Optional[Subspace]
    scanned: int
    sampled: bool = False
    seed: Optional[int] = None


@dataclass
class BlockingReport:
    n: int
    m: int
    n_size: int
    mod4: int
    odd_ok: bool
    odd_counterexample: Optional[Subspace]
    odd_scanned: int
    odd_sampled: bool
    is_blocking: bool
    max_inner_dim: int
    inner_witness: Optional[Subspace]
    is_trivial: bool
    threefold_ok: bool
    is_minimal: Optional[bool] = None
    minimality_witness: Optional[int] = None
    pair_found: Optional[Tuple[Subspace, Subspace]] = None
    pair_search_complete: bool = False
    bounds: Dict[str, int] = field(default_factory=dict)


def nonbent_set(F: VBF) -> Set[int]:
    """Masks of the non-trivial non-bent components (exponent > 0)."""
    exps = component_exponents(F)
    return {b for b in range(1, 1 << F.m) if exps[b - 1] > 0}


def thresholds(n: int, m: int) -> Dict[str, int]:
    """Evaluated bound values for the report (vector-space conventions)."""
    half = n // 2
    out = {
        "bose_burton": (1 << (m - half)) - 1,
        "ccz_size": 3 * ((1 << half) - 1),
    }
    if m - half >= 3:
        out["govaerts_storme"] = ((1 << (m - half)) + (1 << (m - half - 2))
                                  + (1 << (m - half - 3)) - 1)
    if n == m and half >= 3:
        out["apn_bent_bound"] = ((1 << half) + (1 << (half - 2))
                                 + (1 << (half - 3)) - 1)
    return out


def _count_in(W: Subspace, lookup: bytearray) -> int:
    return sum(lookup[e] for e in W.elements() if e)


def _lookup(N: Set[int], m: int) -> bytearray:
    lk = bytearray(1 << m)
    for b in N:
        lk[b] = 1
    return lk


def odd_intersection_check(N: Set[int], m: int, k: int, *,
                           sample: Optional[int] = None,
                           seed: int = 0) -> ScanResult:
    """Check |W cap N| odd for every k-dimensional subspace W of F_2^m.

    Exhaustive by default; with sample=count, scans that many seeded random
    subspaces instead (for the larger ambient widths).
    """
    lk = _lookup(N, m)
    if sample is None:
        scanned = 0
        for W in enumerate_subspaces(m, k):
            scanned += 1
            if _count_in(W, lk) % 2 == 0:
                return ScanResult(False, W, scanned)
        return ScanResult(True, None, scanned)
    rng = random.Random(seed)
    for i in range(sample):
        W = random_subspace(m, k, rng)
        if _count_in(W, lk) % 2 == 0:
            return ScanResult(False, W, i + 1, sampled=True, seed=seed)
    return ScanResult(True, None, sample, sampled=True, seed=seed)


def kfold_check(N: Set[int], m: int, k: int, fold: int, *,
                sample: Optional[int] = None, seed: int = 0) -> ScanResult:
    """Every k-dimensional subspace meets N in at least `fold` points."""
    lk = _lookup(N, m)
    if sample is None:
        scanned = 0
        for W in enumerate_subspaces(m, k):
            scanned += 1
            if _count_in(W, lk) < fold:
                return ScanResult(False, W, scanned)
        return ScanResult(True, None, scanned)
    rng = random.Random(seed)
    for i in range(sample):
        W = random_subspace(m, k, rng)
        if _count_in(W, lk) < fold:
            return ScanResult(False, W, i + 1, sampled=True, seed=seed)
    return ScanResult(True, None, sample, sampled=True, seed=seed)


def is_blocking_set(N: Set[int], m: int, k: int, **kw) -> bool:
    return kfold_check(N, m, k, 1, **kw).ok


def max_subspace_in(S: Set[int], m: int) -> Tuple[int, Subspace]:
    """A maximum-dimension subspace contained in S (0 is added to S).

    Depth-first search over canonical bases: generators strictly increasing
    and each the minimum of its coset modulo the previous span.
    """
    pts = sorted(x for x in S if x)
    inside = set(S) | {0}
    best_dim = 0
    best_basis: List[int] = []

    def extend(basis: List[int], span: List[int], cand: List[int]) -> None:
        nonlocal best_dim, best_basis
        if len(basis) > best_dim:
            best_dim = len(basis)
            best_basis = list(basis)
        if len(basis) + len(cand) <= best_dim:
            return
        for i, p in enumerate(cand):
            # canonical: p must be the coset leader modulo the current span
            if any((p ^ s) < p for s in span if s):
                continue
            if all((p ^ s) in inside for s in span):
                new_span = span + [p ^ s for s in span]
                extend(basis + [p], new_span, cand[i + 1:])

    extend([], [0], pts)
    return best_dim, rref(best_basis, m)


def is_trivial_blocking(N: Set[int], m: int, n: int) -> bool:
    """Trivial iff N + {0} contains an (m - n/2)-dimensional subspace."""
    dim, _ = max_subspace_in(set(N) | {0}, m)
    return dim >= m - n // 2


def minimality_check(N: Set[int], m: int, k: int) -> Tuple[bool, Optional[int]]:
    """Minimal iff every point has a k-space meeting N only in that point.

    Returns (minimal, removable_point) where the witness certifies
    non-minimality.
    """
    lk = _lookup(N, m)
    for p in sorted(N):
        essential = False
        for W in enumerate_superspaces(span_single(p, m), k):
            if _count_in(W, lk) == 1:
                essential = True
                break
        if not essential:
            return False, p
    return True, None


def _subspaces_inside(S: Set[int], m: int, d: int,
                      budget: List[int]) -> List[Subspace]:
    """All d-dimensional subspaces fully contained in S (0 assumed in S)."""
    pts = sorted(x for x in S if x)
    inside = set(S) | {0}
    out: List[Subspace] = []

    def extend(basis: List[int], span: List[int], cand: List[int]) -> None:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("subspace DFS budget exhausted")
        if len(basis) == d:
            out.append(rref(basis, m))
            return
        for i, p in enumerate(cand):
            if any((p ^ s) < p for s in span if s):
                continue
            if all((p ^ s) in inside for s in span):
                extend(basis + [p], span + [p ^ s for s in span], cand[i + 1:])

    extend([], [0], pts)
    return out


def complementary_pair_search(
        N: Set[int], n: int, *,
        node_budget: int = 10**8) -> Optional[Tuple[Subspace, Subspace]]:
    """Search N + {0} for subspaces V, W with V directly summing to F_2^n.

    Returns the first pair found in the deterministic DFS order, or None
    when the completed search proves no pair exists. Raises BudgetExceeded
    when the node budget runs out first.
    """
    if n % 2:
        raise ValueError("requires even n")
    S = set(N) | {0}
    max_dim, _ = max_subspace_in(S, n)
    budget = [node_budget]
    for d in range(n // 2, n):
        if d > max_dim or n - d > max_dim:
            continue
        vs = _subspaces_inside(S, n, d, budget)
        ws = vs if 2 * d == n else _subspaces_inside(S, n, n - d, budget)
        for V in vs:
            for W in ws:
                if intersect(V, W).dim == 0:
                    return V, W
    return None


def ccz_necessary_report(N: Set[int], n: int, *,
                         node_budget: int = 10**8,
                         sample: Optional[int] = None,
                         seed: int = 0) -> Dict[str, object]:
    """Necessary conditions for CCZ-equivalence to a permutation.

    A failed size or 3-fold condition, or a completed pair search with no
    pair, certifies that no CCZ-equivalent permutation exists.
    """
    size_threshold = 3 * ((1 << (n // 2)) - 1)
    size_ok = len(N) >= size_threshold
    out: Dict[str, object] = {
        "n_size": len(N),
        "size_threshold": size_threshold,
        "size_ok": size_ok,
        "threefold_ok": None,
        "pair_found": None,
        "pair_search_complete": False,
    }
    certified = not size_ok
    if size_ok:
        res = kfold_check(N, n, n // 2 + 1, 3, sample=sample, seed=seed)
        out["threefold_ok"] = res.ok
        if not res.ok and not res.sampled:
            certified = True
        if res.ok or res.sampled:
            try:
                pair = complementary_pair_search(N, n, node_budget=node_budget)
                out["pair_search_complete"] = True
                out["pair_found"] = pair
                if pair is None:
                    certified = True
            except BudgetExceeded:
                pass
    out["certified_not_permutation_equivalent"] = certified
    return out


def blocking_report(F: VBF, *,
                    check_minimality: Optional[bool] = None,
                    pair_budget: int = 10**7,
                    sample: Optional[int] = None,
                    seed: int = 0) -> BlockingReport:
    """Full blocking-set report for the non-bent set of F."""
    n, m = F.n, F.m
    N = nonbent_set(F)
    k = n // 2 + 1
    odd = odd_intersection_check(N, m, k, sample=sample, seed=seed)
    inner_dim, witness = max_subspace_in(set(N) | {0}, m)
    trivial = inner_dim >= m - n // 2
    three = kfold_check(N, m, k, 3, sample=sample, seed=seed)
    if check_minimality is None:
        check_minimality = m <= 8
    minimal = None
    min_witness = None
    if check_minimality and odd.ok:
        minimal, min_witness = minimality_check(N, m, k)
    pair = None
    pair_complete = False
    if n == m:
        try:
            pair = complementary_pair_search(N, n, node_budget=pair_budget)
            pair_complete = True
        except BudgetExceeded:
            pass
    return BlockingReport(
        n=n, m=m, n_size=len(N), mod4=len(N) % 4,
        odd_ok=odd.ok, odd_counterexample=odd.counterexample,
        odd_scanned=odd.scanned, odd_sampled=odd.sampled,
        is_blocking=odd.ok or is_blocking_set(N, m, k, sample=sample, seed=seed),
        max_inner_dim=inner_dim, inner_witness=witness, is_trivial=trivial,
        threefold_ok=three.ok, is_minimal=minimal,
        minimality_witness=min_witness, pair_found=pair,
        pair_search_complete=pair_complete, bounds=thresholds(n, m))
