#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/partitions.py のテスト
"""

from math import factorial

import pytest
from hypothesis import given, strategies as st

from core.partitions import (
    CellStep,
    OddCounts,
    Partition,
    PartitionError,
    add_vertical_strips,
    bounded_box,
    column_partition,
    conjugate,
    contains,
    enumerate_partitions,
    hook_count,
    index_sequence,
    is_vertical_strip,
    odd_counts,
    one_cell_neighbors,
    partition_from_index_sequence,
    partitions_of,
    rectangle,
    remove_vertical_strips,
    skew_odd_columns,
)

partitions = st.integers(min_value=0, max_value=8).flatmap(
    lambda size: st.sampled_from(list(partitions_of(size)))
)


class TestPartition:
    """Partition 型のテスト"""

    def test_of_strips_trailing_zeros(self):
        """Partition.of は末尾の 0 を取り除く"""
        assert Partition.of(2, 1, 0, 0) == Partition.of(2, 1)

    def test_increasing_raises(self):
        """増加している列は PartitionError"""
        with pytest.raises(PartitionError):
            Partition((1, 2))

    def test_zero_part_raises(self):
        """直接生成で 0 を含むと PartitionError"""
        with pytest.raises(PartitionError):
            Partition((2, 0))

    def test_statistics(self):
        """size / length / width / part"""
        lam = Partition.of(3, 2, 2)
        assert lam.size == 7
        assert lam.length == 3
        assert lam.width == 3
        assert lam.part(1) == 2
        assert lam.part(5) == 0

    def test_padded(self):
        """padded は 0 で埋める。短すぎると PartitionError"""
        assert Partition.of(2, 1).padded(4) == (2, 1, 0, 0)
        with pytest.raises(PartitionError):
            Partition.of(1, 1, 1).padded(2)

    def test_str(self):
        """空は ∅、それ以外はカンマ区切り"""
        assert str(Partition.empty()) == "∅"
        assert str(Partition.of(3, 1)) == "(3,1)"


class TestStatistics:
    """統計量のテスト"""

    def test_conjugate(self):
        """(3,2,2) の共役は (3,3,1)"""
        assert conjugate(Partition.of(3, 2, 2)) == Partition.of(3, 3, 1)

    @given(partitions)
    def test_conjugate_is_involution(self, lam):
        """共役を 2 回取ると元に戻る"""
        assert conjugate(conjugate(lam)) == lam

    def test_odd_counts(self):
        """(3,2,2) は奇数行 1 本、奇数列 3 本"""
        assert odd_counts(Partition.of(3, 2, 2)) == OddCounts(r=1, c=3)

    def test_contains(self):
        """Young 図形の包含"""
        assert contains(Partition.of(1), Partition.of(2, 1))
        assert not contains(Partition.of(1, 1, 1), Partition.of(2, 1))

    def test_vertical_strip(self):
        """各行 1 マス以下なら縦帯"""
        assert is_vertical_strip(Partition.of(1), Partition.of(2, 1))
        assert not is_vertical_strip(Partition.of(1), Partition.of(3))

    def test_skew_odd_columns(self):
        """(2,2)/(1) の奇数長の列は 1 本"""
        assert skew_odd_columns(Partition.of(2, 2), Partition.of(1)) == 1

    def test_skew_odd_columns_requires_containment(self):
        """含まれていない場合は PartitionError"""
        with pytest.raises(PartitionError):
            skew_odd_columns(Partition.of(1), Partition.of(2))

    def test_hook_count(self):
        """フック長公式"""
        assert hook_count(Partition.of(2, 1)) == 2
        assert hook_count(Partition.of(3, 2, 1)) == 16
        assert hook_count(Partition.empty()) == 1

    @pytest.mark.parametrize("size", range(0, 7))
    def test_hook_squares_sum_to_factorial(self, size):
        """Σ (f^λ)² = n!"""
        assert sum(hook_count(lam) ** 2 for lam in partitions_of(size)) == factorial(size)

    def test_index_sequence_round_trip(self):
        """I_3((2,1)) = (1,3,5) とその逆写像"""
        assert index_sequence(Partition.of(2, 1), 3) == (1, 3, 5)
        assert partition_from_index_sequence((1, 3, 5)) == Partition.of(2, 1)

    def test_index_sequence_rejects_non_increasing(self):
        """狭義増加でなければ PartitionError"""
        with pytest.raises(PartitionError):
            partition_from_index_sequence((2, 2))


class TestEnumeration:
    """列挙のテスト"""

    def test_enumerate_order(self):
        """サイズ昇順、同サイズ内は逆辞書式"""
        got = list(enumerate_partitions(3, width_bound=2))
        assert got == [
            Partition.empty(), Partition.of(1), Partition.of(2),
            Partition.of(1, 1), Partition.of(2, 1), Partition.of(1, 1, 1),
        ]

    def test_negative_bound_raises(self):
        with pytest.raises(PartitionError):
            list(enumerate_partitions(3, width_bound=-1))

    def test_bounded_box_count(self):
        """2×2 の箱の中の分割は C(4,2) = 6 個"""
        assert len(list(bounded_box(2, 2))) == 6

    def test_add_vertical_strips(self, empty):
        """∅ に縦帯を足すと ∅, (1), (1,1)"""
        assert set(add_vertical_strips(empty, 2)) == {empty, Partition.of(1), Partition.of(1, 1)}

    def test_remove_vertical_strips(self):
        """(2,1) から縦帯を除く"""
        got = set(remove_vertical_strips(Partition.of(2, 1)))
        assert got == {Partition.of(2, 1), Partition.of(2), Partition.of(1, 1), Partition.of(1)}

    def test_one_cell_neighbors(self):
        """(1) の隣は追加 2 つと削除 1 つ"""
        got = list(one_cell_neighbors(Partition.of(1), 2))
        assert got == [
            (CellStep(1, 1), Partition.of(2)),
            (CellStep(2, 1), Partition.of(1, 1)),
            (CellStep(1, -1), Partition.empty()),
        ]
        assert got[2][0].label() == "-e1"

    def test_rectangle_and_column(self):
        assert rectangle(2, 3) == Partition.of(2, 2, 2)
        assert rectangle(0, 3) == Partition.empty()
        assert column_partition(2) == Partition.of(1, 1)
