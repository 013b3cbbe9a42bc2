import math

import pytest
from hypothesis import given, strategies as st

from lltschur.combinat import (
    DescentSet,
    Partition,
    all_pairs,
    descents,
    dominates,
    inverse,
    inverse_descents,
    inversion_set,
    parse_partition,
    partitions,
    partitions_in_box,
    staircase,
    sub_partitions,
    two_bounded_partitions,
)

# partition numbers p(0..10)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    assert [len(partitions(n)) for n in range(11)] == PARTITION_COUNTS


def test_canonical_order():
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert Partition([2, 2]) < Partition([2, 1, 1])
    assert Partition([3]) < Partition([1, 1, 1, 1])
    for n in range(1, 8):
        ps = list(partitions(n))
        assert ps == sorted(ps)
        # canonical order refines dominance: a dominating b comes first
        for i, a in enumerate(ps):
            for b in ps[:i]:
                assert not (dominates(a, b) and a != b)


def test_trailing_zeros_and_validation():
    assert Partition([2, 1, 0, 0]) == (2, 1)
    with pytest.raises(ValueError):
        Partition([1, 2])
    assert parse_partition("2,1,0") == (2, 1)
    assert parse_partition("") == ()


def test_conjugate():
    assert Partition([3, 1]).conjugate() == (2, 1, 1)
    for n in range(8):
        for p in partitions(n):
            assert p.conjugate().conjugate() == p
            assert p.conjugate().size == n


def test_boxes_and_staircases():
    # Gaussian binomial at q=1
    for r in range(5):
        for c in range(5):
            assert len(partitions_in_box(r, c)) == math.comb(r + c, r)
    # Catalan numbers
    assert [len(sub_partitions(staircase(k))) for k in range(6)] == [1, 2, 5, 14, 42, 132]
    assert two_bounded_partitions(5) == [(2, 2, 1), (2, 1, 1, 1), (1,) * 5]


def test_main_hook():
    assert Partition([3, 2, 2]).main_hook() == 5
    assert Partition([]).main_hook() == 0


def test_descent_sets():
    D = DescentSet(5, {1, 3})
    assert D.composition() == (1, 2, 2)
    assert DescentSet.from_mask(5, D.to_mask()) == D
    assert DescentSet(4, {1}) != DescentSet(5, {1})
    with pytest.raises(ValueError):
        DescentSet(3, {3})


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@given(perms)
def test_permutation_statistics(w):
    w = tuple(w)
    assert inverse(inverse(w)) == w
    assert inverse_descents(w) == descents(inverse(w))
    # i is an inverse descent iff i+1 appears before i
    pos = {v: k for k, v in enumerate(w)}
    assert inverse_descents(w) == {i for i in range(1, len(w)) if pos[i + 1] < pos[i]}
    assert inversion_set(w) <= set(all_pairs(len(w)))
    assert len(inversion_set(w)) == len(inversion_set(inverse(w)))
