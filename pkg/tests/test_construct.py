import pytest

from qapn.construct import (ExplicitPartition, bu_partition,
                            partition_type_of, refine_member, spread, verify)
from qapn.gf2 import Subspace, rref


def test_spread_trivial():
    P = spread(6, 6)
    assert len(P.members) == 1 and P.members[0].dim == 6
    assert verify(P)


@pytest.mark.parametrize("n,t,count", [(4, 2, 5), (6, 2, 21), (6, 3, 9),
                                       (8, 2, 85), (8, 4, 17), (10, 5, 33)])
def test_spread_counts_and_cover(n, t, count):
    P = spread(n, t)
    assert len(P.members) == count
    assert all(m.dim == t for m in P.members)
    assert verify(P)
    assert str(partition_type_of(P)) == f"[{t}^{count}]"


def test_spread_rejects_non_divisor():
    with pytest.raises(ValueError):
        spread(6, 4)


def test_verify_detects_overlap():
    V = rref([1, 2], 4)
    P = ExplicitPartition(4, (V, V, rref([4, 8], 4)))
    assert not verify(P)


def test_verify_detects_gap():
    P = ExplicitPartition(4, (rref([1, 2], 4),))
    assert not verify(P)


@pytest.mark.parametrize("n,s", [(8, 2), (10, 2), (6, 2), (9, 3)])
def test_bu_partition(n, s):
    P = bu_partition(n, s)
    assert verify(P)
    t = partition_type_of(P)
    assert str(t) == f"[{s}^{1 << (n - s)},{n - s}^1]"


def test_bu_rejects_bad_params():
    with pytest.raises(ValueError):
        bu_partition(8, 3)   # 3 does not divide 5


def test_refine_member_full_chain():
    P = spread(8, 4)
    seen = [str(partition_type_of(P))]
    for _ in range(17):
        idx = next(i for i, m in enumerate(P.members) if m.dim == 4)
        P = refine_member(P, idx, 2)
        assert verify(P)
        seen.append(str(partition_type_of(P)))
    assert seen[0] == "[4^17]"
    assert seen[1] == "[2^5,4^16]"
    assert seen[-1] == "[2^85]"
    assert len(seen) == 18


def test_refine_member_identity_when_equal_dim():
    P = spread(6, 2)
    assert refine_member(P, 0, 2) is P


def test_refine_member_rejects_non_divisor():
    P = spread(8, 4)
    with pytest.raises(ValueError):
        refine_member(P, 0, 3)


def test_refine_bu_inner():
    # refine the big member of the product partition down to 2-spaces
    P = bu_partition(8, 2)
    big = next(i for i, m in enumerate(P.members) if m.dim == 6)
    Q = refine_member(P, big, 2)
    assert verify(Q)
    assert str(partition_type_of(Q)) == "[2^85]"
