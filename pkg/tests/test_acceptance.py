"""Acceptance suite: one test per numbered criterion.

Each test prints a single PASS/FAIL line (visible with -s or on failure)
and enforces its wall-clock budget.
"""

import random
import time
from contextlib import contextmanager

from qapn import admissibility as adm
from qapn import blocking as blk
from qapn import construct as con
from qapn import equivalence as ea
from qapn import partition as par
from qapn import vbf as vb
from qapn.catalog import catalog
from qapn.cli import main
from qapn.gf2 import enumerate_subspaces, gaussian_binomial

CUBE6 = catalog("cube", 6).function
CUBE8 = catalog("cube", 8).function


@contextmanager
def criterion(name, limit_s):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < limit_s
    print(f"[{'PASS' if ok else 'FAIL'}] {name} "
          f"({elapsed:.2f}s, budget {limit_s}s)")
    assert ok, f"{name}: exceeded {limit_s}s budget ({elapsed:.2f}s)"


def admissible_strings(n):
    return {str(t) for t, _ in adm.enumerate_admissible(n)}


def test_criterion_01_enumeration_n6():
    with criterion("criterion 1: enumeration n=6", 1):
        assert admissible_strings(6) == {"[2^21]", "[2^16,4^1]"}


def test_criterion_02_enumeration_n8():
    with criterion("criterion 2: enumeration n=8", 1):
        got = admissible_strings(8)
        want = {"[2^64,6^1]"} | \
            {str(adm.dtype(8, {2: 5 * i, 4: 17 - i})) for i in range(1, 18)}
        assert got == want and len(got) == 18
        verdicts = {str(t): v
                    for t, v in adm.enumerate_admissible(8, verbose=True)}
        killed_17 = {v.rule for v in verdicts["[4^17]"] if not v.passed}
        killed_8 = {v.rule for v in verdicts["[8^1]"] if not v.passed}
        assert "bent_lower_bound" in killed_17
        assert "no_full_amplitude" in killed_8


def test_criterion_03_enumeration_n10():
    with criterion("criterion 3: enumeration n=10", 5):
        got = admissible_strings(10)
        want = {"[2^256,8^1]"} | \
            {str(adm.dtype(10, {2: 320 - 5 * i, 4: i, 6: 1}))
             for i in range(0, 65)} | \
            {str(adm.dtype(10, {2: 341 - 5 * i, 4: i})) for i in range(0, 67)}
        assert got == want and len(got) == 133
        verdicts = {str(t): v
                    for t, v in adm.enumerate_admissible(10, verbose=True)}
        for bad in ("[2^6,4^67]", "[2^1,4^68]"):
            assert bad not in got
            assert "tail" in {v.rule for v in verdicts[bad] if not v.passed}


def test_criterion_04_spectral_ground_truth():
    with criterion("criterion 4: cube spectra n=6/n=8", 5):
        for F, n, want in ((CUBE6, 6, "[0^42,2^21]"),
                           (CUBE8, 8, "[0^170,2^85]")):
            assert vb.is_apn(F)
            assert vb.algebraic_degree(F) == 2
            dist = vb.amplitude_distribution(F)
            assert str(dist) == want
            assert str(adm.from_distribution(dist)) in admissible_strings(n)


def test_criterion_05_partition_cross_check():
    with criterion("criterion 5: partition vs spectrum", 60):
        funcs = [CUBE6, CUBE8]
        for seed in range(20):
            a1, a2, a3 = ea.seeded_ea_triple(6, seed)
            funcs.append(ea.ea_transform(CUBE6, a1, a2, a3))
        for F in funcs:
            P = par.build_partition(F)
            assert par.verify_partition(P)
            assert par.verify_dim_amplitude(F, P)


def random_quadratic(n, seed):
    """Random function of degree <= 2 from random ANF coefficients."""
    rng = random.Random(seed)
    coeffs = [rng.randrange(1 << n) if mask.bit_count() <= 2 else 0
              for mask in range(1 << n)]
    # the Mobius transform is an involution: table of the ANF is the function
    return vb.VBF(n, n, tuple(vb.anf(vb.VBF(n, n, tuple(coeffs)))))


def test_criterion_06_fourth_moment_iff_apn():
    with criterion("criterion 6: fourth moment == APN on quadratics", 60):
        apn_seen = 0
        for seed in range(200):
            F = random_quadratic(6, seed)
            assert vb.algebraic_degree(F) <= 2
            apn = vb.is_apn(F)
            apn_seen += apn
            try:
                assert vb.fourth_moment_check(F) == apn
            except vb.NotPlateaued:
                raise AssertionError("quadratic component not plateaued")


def test_criterion_07_odd_intersection_exhaustive():
    with criterion("criterion 7: exhaustive odd-intersection scans", 120):
        res6 = blk.odd_intersection_check(blk.nonbent_set(CUBE6), 6, 4)
        assert res6.ok and res6.scanned == gaussian_binomial(6, 4) == 651
        res8 = blk.odd_intersection_check(blk.nonbent_set(CUBE8), 8, 5)
        assert res8.ok and res8.scanned == gaussian_binomial(8, 5) == 97155


def test_criterion_08_blocking_facts():
    with criterion("criterion 8: blocking-set facts", 120):
        rep6 = blk.blocking_report(CUBE6)
        assert rep6.is_trivial and rep6.max_inner_dim >= 3
        assert rep6.n_size == 21 == 3 * ((1 << 3) - 1)
        rep8 = blk.blocking_report(CUBE8, check_minimality=False)
        assert not rep8.is_trivial
        assert rep8.n_size == 85 and rep8.n_size % 4 == 1
        assert rep8.n_size >= 21


def test_criterion_09_construction_reachability():
    with criterion("criterion 9: constructions cover the n=8 list", 30):
        P = con.spread(8, 4)
        types = [str(con.partition_type_of(P))]
        assert con.verify(P)
        for _ in range(17):
            idx = next(i for i, m in enumerate(P.members) if m.dim == 4)
            P = con.refine_member(P, idx, 2)
            assert con.verify(P)
            types.append(str(con.partition_type_of(P)))
        want = ["[4^17]"] + \
            [str(adm.dtype(8, {2: 5 * i, 4: 17 - i})) for i in range(1, 18)]
        assert types == want
        B8 = con.bu_partition(8, 2)
        assert con.verify(B8)
        assert str(con.partition_type_of(B8)) == "[2^64,6^1]"
        B10 = con.bu_partition(10, 2)
        assert con.verify(B10)
        assert str(con.partition_type_of(B10)) == "[2^256,8^1]"


def test_criterion_10_equivariance():
    with criterion("criterion 10: EA equivariance, 50 seeds", 120):
        base_dist = vb.amplitude_distribution(CUBE6).counts
        for seed in range(50):
            a1, a2, a3 = ea.seeded_ea_triple(6, seed)
            G = ea.ea_transform(CUBE6, a1, a2, a3)
            assert ea.verify_nonbent_equivariance(CUBE6, G, a1)
            assert ea.verify_partition_equivariance(CUBE6, G, a1, a2, a3)
            assert vb.amplitude_distribution(G).counts == base_dist


def test_criterion_11_oracle_suites():
    with criterion("criterion 11: transform/count/mod-4 oracles", 120):
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(2, 6)
            F = vb.VBF(n, n, tuple(rng.randrange(1 << n)
                                   for _ in range(1 << n)))
            b = rng.randrange(1 << n)
            row = vb.walsh_row(F, b)
            a = rng.randrange(1 << n)
            assert row[a] == vb.walsh_naive(F, b, a)
            assert int(sum(int(v) ** 2 for v in row)) == 1 << (2 * n)
        for n in range(1, 9):
            for k in range(n + 1):
                assert sum(1 for _ in enumerate_subspaces(n, k)) == \
                    gaussian_binomial(n, k)
        for name, n in (("cube", 6), ("gold_5", 6), ("cube", 8),
                        ("gold_3", 8), ("gold_5", 8)):
            F = catalog(name, n).function
            assert vb.is_quadratic(F) and vb.is_apn(F)
            assert len(blk.nonbent_set(F)) % 4 == 1


def test_criterion_12_negative_certification(capsys, tmp_path):
    with criterion("criterion 12: size-17 set certified at n=8", 1):
        spec = "set:8:" + ",".join(str(b) for b in range(1, 18))
        path = tmp_path / "ccz.json"
        code = main(["ccz-check", spec, "--json", str(path)])
        capsys.readouterr()
        assert code == 0
        import json
        rep = json.loads(path.read_text())
        assert rep["n_size"] == 17
        assert rep["size_threshold"] == 45
        assert not rep["size_ok"]
        assert rep["certified_not_permutation_equivalent"]
