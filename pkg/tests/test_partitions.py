from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from bellsym.partitions import (
    check_partition,
    divide,
    dominates,
    format_partition,
    gcd_parts,
    multiset_splits,
    parse_partition,
    part_multinomial,
    partitions_of,
    partitions_upto,
    size,
    sort_parts,
    union,
    z_of,
)

from _oracles import brute_partitions, ordered_set_compositions_count

partition_strategy = st.lists(st.integers(1, 5), max_size=5).map(sort_parts)


def test_z_of_examples():
    assert z_of(()) == 1
    assert z_of((2, 1)) == 2
    assert z_of((1, 1, 1)) == 6
    assert z_of((3, 3, 2)) == 2 * 9 * 2


def test_union():
    assert union([(2, 1), (1,)]) == (2, 1, 1)
    assert union([(), ()]) == ()
    assert union([(3,), (3,)]) == (3, 3)


def test_part_multinomial_examples():
    assert part_multinomial((2, 1), [(2,), (1,)]) == 1
    assert part_multinomial((1, 1), [(1,), (1,)]) == 2
    assert part_multinomial((3, 3), [(3, 3)]) == 1


def test_part_multinomial_rejects_bad_split():
    with pytest.raises(ValueError):
        part_multinomial((2, 1), [(1,), (1,)])


def test_part_multinomial_equals_z_ratio_exhaustive():
    # both formulas agree on every split of every partition of n <= 8
    from fractions import Fraction

    for n in range(1, 9):
        for lam in partitions_of(n):
            for k in range(1, len(lam) + 1):
                for parts, _ in multiset_splits(lam, k):
                    ratio = Fraction(z_of(lam))
                    for mu in parts:
                        ratio /= z_of(mu)
                    assert part_multinomial(lam, parts) == ratio


def test_divide():
    assert divide((4, 2), 2) == (2, 1)
    assert divide((3,), 3) == (1,)
    assert divide((2, 2), 1) == (2, 2)
    assert divide((), 1) == ()
    with pytest.raises(ValueError):
        divide((4, 2), 4)
    with pytest.raises(ValueError):
        divide((), 2)


@given(partition_strategy, st.integers(1, 6))
def test_divide_z_identity(lam, d):
    if not lam or gcd_parts(lam) % d != 0:
        return
    assert z_of(divide(lam, d)) * d ** len(lam) == z_of(lam)


def test_partitions_of_counts_and_order():
    assert partitions_of(0) == [()]
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(5)) == 7
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for n in range(31):
        brute = brute_partitions(n)
        mine = partitions_of(n)
        assert mine == brute  # same reverse-lex order, same count


def test_partitions_upto():
    assert partitions_upto(2) == [(), (1,), (2,), (1, 1)]


def test_multiset_splits_examples():
    assert multiset_splits((1, 1), 2) == [(((1,), (1,)), 1)]
    assert multiset_splits((2, 1), 2) == [(((2,), (1,)), 2)]
    assert multiset_splits((3,), 1) == [(((3,),), 1)]
    assert multiset_splits((3,), 2) == []


def test_multiset_splits_are_splits():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for k in range(1, len(lam) + 1):
                for parts, ordered in multiset_splits(lam, k):
                    assert union(parts) == lam
                    assert all(mu for mu in parts)
                    mult = {}
                    for mu in parts:
                        mult[mu] = mult.get(mu, 0) + 1
                    assert ordered == factorial(k) // prod(factorial(m) for m in mult.values())


def test_multiset_splits_ordered_totals():
    # summed ordered counts = number of ordered set-compositions of the multiset
    for n in range(1, 7):
        for lam in partitions_of(n):
            total = sum(
                ordered
                for k in range(1, len(lam) + 1)
                for _, ordered in multiset_splits(lam, k)
            )
            assert total == ordered_set_compositions_count(lam)


def test_parse_format_roundtrip():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 1, 1)) == "3,1,1"
    assert format_partition(()) == ""
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a,b")
    with pytest.raises(ValueError):
        parse_partition("0")
    with pytest.raises(ValueError):
        check_partition((2, -1))


def test_dominance():
    assert dominates((4,), (2, 2))
    assert dominates((2, 2), (2, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3,), (2, 2))  # different sizes
    assert dominates((2, 1), (2, 1))
