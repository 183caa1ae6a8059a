import pytest

from qapn.blocking import (BudgetExceeded, blocking_report,
                           ccz_necessary_report, complementary_pair_search,
                           is_blocking_set, is_trivial_blocking, kfold_check,
                           max_subspace_in, minimality_check, nonbent_set,
                           odd_intersection_check, thresholds)
from qapn.catalog import catalog
from qapn.gf2 import Subspace, intersect, rref

CUBE6 = catalog("cube", 6).function
CUBE8 = catalog("cube", 8).function


def test_nonbent_set_sizes():
    N6 = nonbent_set(CUBE6)
    assert len(N6) == 21
    N8 = nonbent_set(CUBE8)
    assert len(N8) == 85


def test_thresholds_values():
    t = thresholds(6, 6)
    assert t["bose_burton"] == 7
    assert t["ccz_size"] == 21
    assert t["govaerts_storme"] == 10
    assert t["apn_bent_bound"] == 10
    t8 = thresholds(8, 8)
    assert t8["bose_burton"] == 15
    assert t8["ccz_size"] == 45
    assert t8["apn_bent_bound"] == 21


def test_odd_intersection_cube6_exhaustive():
    N = nonbent_set(CUBE6)
    res = odd_intersection_check(N, 6, 4)
    assert res.ok and res.scanned == 651 and not res.sampled


def test_odd_intersection_counterexample():
    # a single point is met evenly (zero times) by some 2-space
    res = odd_intersection_check({1}, 3, 2)
    assert not res.ok
    assert res.counterexample is not None
    assert 1 not in res.counterexample


def test_odd_intersection_sampled():
    N = nonbent_set(CUBE6)
    res = odd_intersection_check(N, 6, 4, sample=50, seed=3)
    assert res.ok and res.sampled and res.scanned == 50 and res.seed == 3


def test_kfold_and_blocking():
    N = nonbent_set(CUBE6)
    assert kfold_check(N, 6, 4, 3).ok
    assert is_blocking_set(N, 6, 4)
    # the full complement of a hyperplane misses that hyperplane entirely
    H_pts = set(rref([0b01, 0b10], 3).elements()) - {0}
    outside = set(range(8)) - H_pts - {0}
    assert not is_blocking_set(outside, 3, 2)


def test_max_subspace_in_cube6():
    N = nonbent_set(CUBE6)
    dim, W = max_subspace_in(N | {0}, 6)
    assert dim == 3
    assert W == rref([19, 4, 40], 6)
    assert all(w in N for w in W.elements() if w)


def test_max_subspace_in_small():
    dim, W = max_subspace_in({0, 1, 2, 3, 5}, 3)
    assert dim == 2 and W == rref([1, 2], 3)
    dim, W = max_subspace_in({0}, 3)
    assert dim == 0 and W.dim == 0


def test_triviality():
    N6 = nonbent_set(CUBE6)
    assert is_trivial_blocking(N6, 6, 6)          # contains a 3-space
    N8 = nonbent_set(CUBE8)
    dim, _ = max_subspace_in(N8 | {0}, 8)
    assert dim == 2
    assert not is_trivial_blocking(N8, 8, 8)      # would need a 4-space


def test_minimality_cube6():
    N = nonbent_set(CUBE6)
    minimal, witness = minimality_check(N, 6, 4)
    assert not minimal and witness == 4


def test_minimality_positive_case():
    # a hyperplane of F_2^4 is a minimal 1-blocking set wrt 2-spaces... use
    # the smallest genuine example: N = one full line in F_2^2
    N = {1, 2, 3}
    minimal, witness = minimality_check(N, 2, 1)
    assert minimal and witness is None


def test_complementary_pair_cube6_frozen():
    N = nonbent_set(CUBE6)
    pair = complementary_pair_search(N, 6)
    assert pair == (Subspace(6, (19, 4, 40)), Subspace(6, (26, 28, 32)))
    V, W = pair
    assert intersect(V, W).dim == 0
    assert all(x in N for x in list(V.elements())[1:] + list(W.elements())[1:]
               if x)


def test_complementary_pair_budget():
    N = nonbent_set(CUBE6)
    with pytest.raises(BudgetExceeded):
        complementary_pair_search(N, 6, node_budget=2)


def test_complementary_pair_none():
    # too few points to contain two complementary 3-spaces of F_2^6
    assert complementary_pair_search({1, 2, 3}, 6) is None


def test_ccz_report_small_set_certified():
    rep = ccz_necessary_report(set(range(1, 18)), 8)
    assert rep["n_size"] == 17 and rep["size_threshold"] == 45
    assert not rep["size_ok"]
    assert rep["certified_not_permutation_equivalent"]


def test_ccz_report_cube6():
    rep = ccz_necessary_report(nonbent_set(CUBE6), 6)
    assert rep["size_ok"] and rep["threefold_ok"]
    assert rep["pair_search_complete"] and rep["pair_found"] is not None
    assert not rep["certified_not_permutation_equivalent"]


def test_blocking_report_cube6():
    rep = blocking_report(CUBE6)
    assert rep.n_size == 21 and rep.mod4 == 1
    assert rep.odd_ok and not rep.odd_sampled and rep.odd_scanned == 651
    assert rep.is_blocking and rep.is_trivial and rep.threefold_ok
    assert rep.max_inner_dim == 3
    assert rep.is_minimal is False and rep.minimality_witness == 4
    assert rep.pair_found is not None and rep.pair_search_complete
    assert rep.bounds["ccz_size"] == 21


def test_blocking_report_cube8():
    rep = blocking_report(CUBE8, check_minimality=False, pair_budget=10**6)
    assert rep.n_size == 85 and rep.mod4 == 1
    assert rep.odd_ok and rep.is_blocking and rep.threefold_ok
    assert rep.max_inner_dim == 2 and not rep.is_trivial
    assert rep.is_minimal is None
