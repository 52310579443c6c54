from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from macsym.partitions import (
    Partition, arm, arm_colength, arms_legs, class_size, conjugate, dominance_leq, hook, leg,
    leg_colength, n_stat, partitions_of, union_double, vertical_strip_cells, z_coeff,
)


def all_partitions(max_n):
    return [lam for n in range(max_n + 1) for lam in partitions_of(n)]


partition_st = st.integers(0, 12).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_rejects_unsorted_and_nonpositive():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition() == ()


@pytest.mark.parametrize("lam, expected", [([], []), ([2, 1], [2, 1]), ([3, 1], [2, 1, 1])])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == Partition(expected)


def test_cell_statistics_examples():
    lam = Partition([2, 1])
    assert (arm(lam, (1, 1)), leg(lam, (1, 1)), hook(lam, (1, 1))) == (1, 1, 3)
    assert (arm([1], (1, 1)), leg([1], (1, 1)), hook([1], (1, 1))) == (0, 0, 1)
    assert (arm_colength([3, 1], (1, 2)), arm([3, 1], (1, 2)), leg([3, 1], (1, 2))) == (1, 1, 0)


def test_cell_outside_diagram():
    with pytest.raises(ValueError, match="cell not in partition"):
        arm([2, 1], (2, 2))


def test_n_stat_examples():
    assert n_stat([]) == 0
    assert n_stat([1, 1]) == 1
    assert all(n_stat([k]) == 0 for k in range(1, 8))


def test_union_double_examples():
    assert union_double([2]) == Partition([2, 2])
    assert union_double([]) == Partition()
    assert union_double([2, 1]) == Partition([2, 2, 1, 1])


def test_dominance_examples():
    assert dominance_leq([1, 1], [2])
    assert not dominance_leq([2], [1, 1])
    assert dominance_leq([2, 2], [3, 1])
    with pytest.raises(ValueError, match="incomparable weights"):
        dominance_leq([2], [1])


def test_vertical_strip_examples():
    assert vertical_strip_cells([2, 1], [2]) == {(2, 1)}
    assert vertical_strip_cells([2], []) is None
    assert vertical_strip_cells([1, 1], [1]) == {(2, 1)}


def test_partitions_of_examples():
    assert partitions_of(0) == [Partition()]
    assert partitions_of(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert len(partitions_of(6)) == 11
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_partitions_of_is_reverse_lex():
    for n in range(1, 10):
        parts = [tuple(p) for p in partitions_of(n)]
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)


def test_partition_counts_match_generating_function():
    # p(n) from Euler's pentagonal recurrence
    p = [1]
    for n in range(1, 16):
        total, k = 0, 1
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > n:
                    break
                total += (-1) ** (k + 1) * p[n - g]
            if k * (3 * k - 1) // 2 > n:
                break
            k += 1
        p.append(total)
    assert [len(partitions_of(n)) for n in range(16)] == p


@given(partition_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_conjugate_involution_exhaustive():
    assert all(conjugate(conjugate(lam)) == lam for lam in all_partitions(12))


def test_hook_is_arm_plus_leg_plus_one():
    for lam in all_partitions(10):
        for cell, a, l in arms_legs(lam):
            assert hook(lam, cell) == a + l + 1
            assert (arm(lam, cell), leg(lam, cell)) == (a, l)


def test_n_stat_three_ways():
    for lam in all_partitions(10):
        via_cells = sum(leg_colength(lam, s) for s in lam.cells())
        via_columns = sum(comb(c, 2) for c in conjugate(lam))
        assert n_stat(lam) == via_cells == via_columns


@given(partition_st)
def test_union_double_shape(lam):
    d = union_double(lam)
    assert d.size == 2 * lam.size
    assert all(c % 2 == 0 for c in conjugate(d))


def test_dominance_is_partial_order():
    for n in range(0, 9):
        ps = partitions_of(n)
        for a in ps:
            assert dominance_leq(a, a)
            for b in ps:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b
                for c in ps:
                    if dominance_leq(a, b) and dominance_leq(b, c):
                        assert dominance_leq(a, c)


def test_class_sizes_sum_to_factorial():
    from math import factorial
    for n in range(1, 9):
        assert sum(class_size(r) for r in partitions_of(n)) == factorial(n)
        assert all(factorial(n) % z_coeff(r) == 0 for r in partitions_of(n))
