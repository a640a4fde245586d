import itertools

import pytest
from hypothesis import given, strategies as st

from singular_lab import (
    FrobeniusSymbol,
    Partition,
    ValidationError,
    conjugate,
    enumerate_partitions,
    from_frobenius,
    partition_count,
    scale,
    to_frobenius,
    union,
)

partitions = st.lists(st.integers(1, 12), max_size=12).map(Partition.from_parts)


def coin_change_count(n):
    """p(n) by the textbook unbounded coin-change table; independent of the pentagonal recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def diagram_frobenius(p):
    """Arm and leg lengths of the diagonal cells, read off the set of Ferrers cells."""
    cells = {(r, c) for r, x in enumerate(p.parts) for c in range(x)}
    top, bottom = [], []
    d = 0
    while (d, d) in cells:
        top.append(sum(1 for (r, c) in cells if r == d and c > d))
        bottom.append(sum(1 for (r, c) in cells if c == d and r > d))
        d += 1
    return FrobeniusSymbol(tuple(top), tuple(bottom))


def test_constructor_rejects_unsorted_and_nonpositive():
    with pytest.raises(ValidationError):
        Partition((1, 2))
    with pytest.raises(ValidationError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]) == Partition((3, 2, 1))


@pytest.mark.parametrize("top,bottom", [
    ((1, 1), (2, 0)),
    ((2, 1), (0, 1)),
    ((1,), (2, 1)),
    ((0,), (-1,)),
])
def test_frobenius_rejects_malformed_rows(top, bottom):
    with pytest.raises(ValidationError):
        FrobeniusSymbol(top, bottom)


def test_rank_and_weight():
    p = Partition((7, 5, 5, 3, 2, 2, 1))
    assert p.weight == 25
    assert p.length == 7
    assert p.rank == 0
    assert Partition().rank == 0


def test_to_frobenius_example():
    f = to_frobenius(Partition((7, 5, 5, 3, 2, 2, 1)))
    assert f == FrobeniusSymbol((6, 3, 2), (6, 4, 1))
    assert f.weight == 25


def test_to_frobenius_small_cases():
    assert to_frobenius(Partition()) == FrobeniusSymbol()
    assert to_frobenius(Partition((1,))) == FrobeniusSymbol((0,), (0,))


def test_from_frobenius_examples():
    assert from_frobenius(FrobeniusSymbol((6, 3, 2), (6, 4, 1))) == Partition((7, 5, 5, 3, 2, 2, 1))
    assert from_frobenius(FrobeniusSymbol((1, 0), (2, 0))) == Partition((2, 2, 1))
    assert from_frobenius(FrobeniusSymbol()) == Partition()


def test_conjugate_examples():
    assert conjugate(Partition((3, 3, 2, 1))) == Partition((4, 3, 2))
    assert conjugate(Partition()) == Partition()


def test_scale_and_union():
    assert scale(5, Partition((3, 3, 2, 1))) == Partition((15, 15, 10, 5))
    assert scale(3, Partition()) == Partition()
    p = Partition((4, 1))
    assert scale(1, p) == p
    with pytest.raises(ValueError):
        scale(0, p)
    assert union(Partition((6, 5)), Partition((5, 3, 2, 2))) == Partition((6, 5, 5, 3, 2, 2))
    assert union(p, Partition()) == p


def test_union_commutes_up_to_weight_10():
    small = [q for n in range(11) for q in enumerate_partitions(n)]
    for p, q in itertools.product(small[:60], small):
        if p.weight + q.weight <= 10:
            assert union(p, q) == union(q, p)


def test_partition_count_values():
    assert partition_count(0) == 1
    assert partition_count(-3) == 0
    assert partition_count(5) == 7
    assert partition_count(100) == coin_change_count(100)
    assert [partition_count(n) for n in range(41)] == [coin_change_count(n) for n in range(41)]


def test_enumerate_partitions_order_and_counts():
    assert enumerate_partitions(0) == [Partition()]
    four = enumerate_partitions(4)
    assert [p.parts for p in four] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(10)) == 42
    for n in range(41):
        ps = enumerate_partitions(n)
        assert len(ps) == partition_count(n)
        assert len(set(ps)) == len(ps)
        keys = [p.parts for p in ps]
        assert keys == sorted(keys, reverse=True)


def test_exhaustive_frobenius_laws_up_to_18():
    for n in range(19):
        for p in enumerate_partitions(n):
            f = to_frobenius(p)
            assert from_frobenius(f) == p
            assert f.weight == p.weight
            assert to_frobenius(conjugate(p)) == f.swap_rows()
            if p:
                assert p.rank == f.top[0] - f.bottom[0]


def test_to_frobenius_matches_diagram_oracle():
    for n in range(13):
        for p in enumerate_partitions(n):
            assert to_frobenius(p) == diagram_frobenius(p)


@given(partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight
