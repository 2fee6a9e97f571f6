from collections import Counter

import pytest

from qternary.partitions import (
    Partition,
    QualifyingProfile,
    a_count,
    abar_count,
    b_oracle,
    bbar_oracle,
    enumerate_partitions,
)


def all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - p, p):
            yield (p,) + rest


def qualifies(parts, k):
    """Conditions (i)-(iv), written out independently of the package."""
    c = Counter(parts)
    if k == 0:
        return not parts
    return (
        all(p <= 2 * k for p in parts)
        and all(c[t] in (2, 3) for t in range(1, k))
        and c[k] in (1, 2)
    )


def brute(k, n):
    out = []
    for parts in all_partitions(n):
        if qualifies(parts, k):
            m = sum(1 for p in parts if p > k)
            small = sum(1 for p in parts if p <= k)
            # k = 0: the empty partition carries +1, as in the generating function
            sign = 1 if small % 2 or k == 0 else -1
            out.append((tuple(sorted(parts)), m, sign))
    return sorted(out)


@pytest.mark.parametrize("k", range(0, 5))
@pytest.mark.parametrize("n", range(0, 22))
def test_enumerate_matches_filtered_brute_force(k, n):
    got = sorted((p.parts(), m, s) for p, m, s in enumerate_partitions(k, n))
    assert got == brute(k, n)


def test_examples():
    assert [(p.parts(), m, s) for p, m, s in enumerate_partitions(1, 1)] == [((1,), 0, 1)]
    assert [(p.parts(), m, s) for p, m, s in enumerate_partitions(1, 2)] == [((1, 1), 0, -1)]
    assert [(p.parts(), m, s) for p, m, s in enumerate_partitions(2, 5)] == [
        ((1, 1, 1, 2), 0, -1)
    ]


def test_k0_only_empty_partition():
    assert [(p.parts(), m, s) for p, m, s in enumerate_partitions(0, 0)] == [((), 0, 1)]
    assert enumerate_partitions(0, 3) == []


def test_counts():
    assert abar_count(1, 1, 3) == 1
    assert abar_count(1, 0, 2) == -1
    assert a_count(1, 0, 2) == 1
    assert a_count(3, 5, 2) == 0


def test_b_oracle_values():
    assert b_oracle(0) == 1
    assert b_oracle(4) == 0
    assert [b_oracle(n) for n in range(7)] == [1, 1, -1, 1, 0, 0, -2]


def test_bbar_oracle_values():
    assert bbar_oracle(5) == -2
    assert [bbar_oracle(n) for n in range(7)] == [1, -1, 1, 1, 0, -2, 0]


def test_every_partition_satisfies_profile():
    for k in range(1, 5):
        prof = QualifyingProfile(k)
        for n in range(30):
            for p, m, s in enumerate_partitions(k, n):
                assert prof.admits(p) and p.total == n and m == prof.m_of(p)


def test_no_qualifying_partition_below_k_squared():
    # the smallest qualifying partition for profile k weighs 2(1+...+(k-1)) + k = k^2
    for n in range(0, 30):
        for k in range(1, n + 2):
            if k * k > n:
                assert enumerate_partitions(k, n) == []
        k = 1
        while k * k <= n:
            k += 1
        if n >= 1:
            m = k - 1
            assert enumerate_partitions(m, m * m)


def test_partition_type():
    p = Partition.from_parts([2, 1, 1, 5])
    assert p.total == 9 and p.num_parts == 4 and p.multiplicity(1) == 2
    with pytest.raises(ValueError):
        Partition(((0, 1),))
    with pytest.raises(ValueError):
        enumerate_partitions(-1, 3)
