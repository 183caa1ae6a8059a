"""Rule engine over amplitude-distribution types.

Each constraint on the Walsh spectrum of a quadratic APN function is a
named pure predicate; the enumerator generates every solution of the
packing equation and keeps the types that no rule excludes. Admissible
output means "not excluded" only, never an existence claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Callable, Dict, List, Optional, Tuple

from .vbf import AmplitudeDistribution


@dataclass(frozen=True)
class DistributionType:
    """Even exponents with multiplicities; the bent count k_0 is implied."""

    n: int
    counts: Tuple[Tuple[int, int], ...]  # sorted (exponent, multiplicity), k > 0

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("n must be even")
        for l, k in self.counts:
            if l < 2 or l % 2 or k < 1:
                raise ValueError(f"bad entry {l}^{k}: exponents even >= 2, "
                                 "multiplicities positive")

    @property
    def n_size(self) -> int:
        return sum(k for _, k in self.counts)

    @property
    def bent_count(self) -> int:
        return (1 << self.n) - 1 - self.n_size

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(l for l, _ in self.counts)

    @property
    def max_dim(self) -> int:
        return self.counts[-1][0]

    @property
    def min_dim(self) -> int:
        return self.counts[0][0]

    @property
    def second_min_dim(self) -> Optional[int]:
        return self.counts[1][0] if len(self.counts) > 1 else None

    def count(self, l: int) -> int:
        return dict(self.counts).get(l, 0)

    def __str__(self) -> str:
        return "[" + ",".join(f"{l}^{k}" for l, k in self.counts) + "]"

    def with_bents(self) -> str:
        return ("[" + ",".join(f"{l}^{k}" for l, k in
                               ((0, self.bent_count),) + self.counts) + "]")


def dtype(n: int, counts: Dict[int, int]) -> DistributionType:
    return DistributionType(n, tuple(sorted((l, k) for l, k in counts.items()
                                            if k > 0)))


def from_distribution(dist: AmplitudeDistribution) -> DistributionType:
    return dtype(dist.n, {l: k for l, k in dist.counts if l > 0})


def parse_type(text: str, n: int) -> DistributionType:
    """Parse "[2^21]" or "[0^42,2^21]" (the 0-entry is dropped)."""
    body = text.strip().strip("[]")
    counts: Dict[int, int] = {}
    if body:
        for part in body.split(","):
            l, k = part.split("^")
            if int(l) > 0:
                counts[int(l)] = counts.get(int(l), 0) + int(k)
    return dtype(n, counts)


@dataclass(frozen=True)
class RuleVerdict:
    rule: str
    passed: bool
    detail: Tuple[Tuple[str, object], ...] = ()

    def detail_dict(self) -> Dict[str, object]:
        return dict(self.detail)


def _verdict(rule: str, passed: bool, **detail) -> RuleVerdict:
    return RuleVerdict(rule, passed, tuple(sorted(detail.items())))


def rule_packing(t: DistributionType) -> RuleVerdict:
    """Sum of k_l (2^l - 1) must cover the 2^n - 1 nonzero points."""
    total = sum(k * ((1 << l) - 1) for l, k in t.counts)
    want = (1 << t.n) - 1
    return _verdict("packing", total == want, total=total, required=want)


def rule_dimension_bounds(t: DistributionType) -> RuleVerdict:
    """Any two member dimensions sum to at most n."""
    for l, k in t.counts:
        if k >= 2 and 2 * l > t.n:
            return _verdict("dimension_bounds", False, i=l, j=l)
    for li, _ in t.counts:
        for lj, _ in t.counts:
            if li < lj and li + lj > t.n:
                return _verdict("dimension_bounds", False, i=li, j=lj)
    return _verdict("dimension_bounds", True)


def rule_no_full_amplitude(t: DistributionType) -> RuleVerdict:
    """Linearity 2^n is impossible, so the exponent n never occurs."""
    return _verdict("no_full_amplitude", t.count(t.n) == 0, k_n=t.count(t.n))


def rule_tail(t: DistributionType) -> RuleVerdict:
    """Tail-length bounds on the two smallest dimensions present.

    At the boundary d2 = 2 d1 the two divisible cases coincide; the max of
    all applicable bounds is enforced.
    """
    if len(t.counts) < 2:
        return _verdict("tail", True, vacuous=True)
    d1, k = t.counts[0]
    d2 = t.counts[1][0]
    q = 1 << (d2 - d1)
    if k % q:
        if d2 < 2 * d1:
            need = (1 << d1) + 1
            return _verdict("tail", k >= need, case="i", k=k, required=need)
        exact = (d2 % d1 == 0) and k == ((1 << d2) - 1) // ((1 << d1) - 1)
        ok = exact or k > 2 * q
        return _verdict("tail", ok, case="ii", k=k,
                        exact_value=((1 << d2) - 1) // ((1 << d1) - 1)
                        if d2 % d1 == 0 else None,
                        strict_above=2 * q)
    need = 0
    cases = []
    if d2 <= 2 * d1:
        need = max(need, (1 << d2) - (1 << d1) + q)
        cases.append("iii")
    if d2 >= 2 * d1:
        need = max(need, 1 << d2)
        cases.append("iv")
    return _verdict("tail", k >= need, case="+".join(cases), k=k, required=need)


def rule_mod4(t: DistributionType) -> RuleVerdict:
    """|N_F| is 1 modulo 4 for quadratic APN functions."""
    return _verdict("mod4", t.n_size % 4 == 1, n_size=t.n_size,
                    residue=t.n_size % 4)


def bent_bound_threshold(n: int) -> int:
    half = n // 2
    return (1 << half) + (1 << (half - 2)) + (1 << (half - 3)) - 1


def rule_bent_lower_bound(t: DistributionType) -> RuleVerdict:
    """Lower bound on |N_F| from the blocking-set structure.

    Strict inequality except at n = 8, where equality can occur. The bound
    needs n >= 6; for n = 4 the rule is vacuous.
    """
    if t.n < 6:
        return _verdict("bent_lower_bound", True, vacuous=True)
    thr = bent_bound_threshold(t.n)
    ok = t.n_size > thr or (t.n == 8 and t.n_size == thr)
    return _verdict("bent_lower_bound", ok, n_size=t.n_size, threshold=thr,
                    strict=t.n != 8)


def _lb1_bound(n: int, k: int) -> int:
    if n % k == 0:
        return ((1 << n) - 1) // ((1 << k) - 1)
    s, r = divmod(n, k)
    return 1 + (1 << ceil((k + r) / 2)) + (1 << (k + r)) * sum(
        1 << (i * k) for i in range(s - 1))


def rule_lb1(t: DistributionType) -> RuleVerdict:
    """Partition-size lower bound when the largest dimension is <= n/2."""
    k = t.max_dim
    if k > t.n // 2:
        return _verdict("lb1", True, vacuous=True)
    need = _lb1_bound(t.n, k)
    return _verdict("lb1", t.n_size >= need, n_size=t.n_size, required=need,
                    k=k)


def rule_lb2(t: DistributionType) -> RuleVerdict:
    """With a second dimension l < n - k present, |N_F| >= 2^k + 2^l + 1."""
    k = t.max_dim
    ells = [l for l, _ in t.counts if 2 <= l < t.n - k and l != k]
    if not ells:
        return _verdict("lb2", True, vacuous=True)
    ell = max(ells)
    need = (1 << k) + (1 << ell) + 1
    return _verdict("lb2", t.n_size >= need, n_size=t.n_size, required=need,
                    k=k, ell=ell)


def rule_ub(t: DistributionType) -> RuleVerdict:
    """Partition-size upper bound driven by the smallest dimension."""
    k = t.min_dim
    s, r = divmod(t.n, k)
    limit = 1 + (1 << (k + r)) * sum(1 << (i * k) for i in range(s - 1))
    return _verdict("ub", t.n_size <= limit, n_size=t.n_size, limit=limit, k=k)


ALL_RULES: Tuple[Tuple[str, Callable[[DistributionType], RuleVerdict]], ...] = (
    ("packing", rule_packing),
    ("dimension_bounds", rule_dimension_bounds),
    ("no_full_amplitude", rule_no_full_amplitude),
    ("tail", rule_tail),
    ("mod4", rule_mod4),
    ("bent_lower_bound", rule_bent_lower_bound),
    ("lb1", rule_lb1),
    ("lb2", rule_lb2),
    ("ub", rule_ub),
)


def evaluate_rules(t: DistributionType) -> List[RuleVerdict]:
    return [fn(t) for _, fn in ALL_RULES]


def is_admissible(t: DistributionType) -> bool:
    return all(v.passed for v in evaluate_rules(t))


def _packing_solutions(n: int) -> List[DistributionType]:
    """All nonnegative solutions of the packing equation on even exponents."""
    dims = list(range(n, 1, -2))
    target = (1 << n) - 1
    out: List[DistributionType] = []

    def rec(i: int, remaining: int, counts: Dict[int, int]) -> None:
        if remaining == 0:
            out.append(dtype(n, dict(counts)))
            return
        if i == len(dims):
            return
        d = dims[i]
        size = (1 << d) - 1
        for k in range(remaining // size, -1, -1):
            counts[d] = k
            rec(i + 1, remaining - k * size, counts)
        del counts[d]

    rec(0, target, {})
    return out


def enumerate_admissible(
        n: int, verbose: bool = False
) -> List[Tuple[DistributionType, List[RuleVerdict]]]:
    """All admissible types for even n; verbose keeps the excluded ones too."""
    if n % 2 or not 4 <= n <= 12:
        raise ValueError("n must be even with 4 <= n <= 12")
    out = []
    for t in sorted(_packing_solutions(n), key=lambda t: t.counts):
        verdicts = evaluate_rules(t)
        if verbose or all(v.passed for v in verdicts):
            out.append((t, verdicts))
    return out


def bound_comparison(n: int, k: int) -> Dict[str, object]:
    """Which lower bound on |N_F| dominates at linearity exponent k.

    Labels: A (partition-size bound), B (bent-component bound),
    C (second-dimension bound, evaluated at the best admissible l).
    """
    if n % 2 or n < 6:
        raise ValueError("n must be even and >= 6")
    if k % 2 or not 2 <= k <= n - 2:
        raise ValueError("linearity exponent must be even with 2 <= k <= n-2")
    a_val = _lb1_bound(n, k) if k <= n // 2 else None
    b_val = bent_bound_threshold(n)
    ells = [l for l in range(2, n - k, 2) if l != k]
    c_val = (1 << k) + (1 << max(ells)) + 1 if ells else None
    if k < n // 2:
        label = "A"
    elif k == n // 2:
        label = "B"
    else:
        label = "C"
    return {
        "label": label,
        "A": a_val,
        "B": b_val,
        "C": c_val,
        "tie_B_C": n == 8 and k == n // 2,
    }
