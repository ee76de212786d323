#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/symfunc.py のテスト
"""

import pytest
from hypothesis import given, settings, strategies as st

from core.partitions import Partition, partitions_of
from core.poly_ring import MultiPoly
from core.symfunc import (
    FComb,
    SchurMethod,
    complete,
    e_sum_series,
    elementary,
    f_series,
    f_skew_power,
    generator_basis,
    schur_poly,
)

small_partitions = st.integers(0, 4).flatmap(lambda size: st.sampled_from(list(partitions_of(size))))


class TestGenerators:
    """e_k / h_k / p_k"""

    def test_elementary(self, x):
        x1, x2, x3 = x(1, 3), x(2, 3), x(3, 3)
        assert elementary(2, 3) == x1 * x2 + x1 * x3 + x2 * x3

    def test_elementary_out_of_range(self):
        assert elementary(4, 3).is_zero()
        assert elementary(-1, 3).is_zero()
        assert elementary(0, 3) == 1

    def test_complete(self, x):
        x1, x2 = x(1, 2), x(2, 2)
        assert complete(2, 2) == x1 ** 2 + x1 * x2 + x2 ** 2

    def test_powersum(self, x):
        assert generator_basis("powersum", 2, 2) == x(1, 2) ** 2 + x(2, 2) ** 2
        assert generator_basis("powersum", 0, 3) == 3

    def test_unknown_kind_raises(self):
        with pytest.raises(ValueError):
            generator_basis("monomial", 1, 2)


class TestSchur:
    """Schur 多項式"""

    def test_single_box(self, x):
        assert schur_poly(Partition.of(1), 2) == x(1, 2) + x(2, 2)

    def test_too_long_is_zero(self):
        assert schur_poly(Partition.of(1, 1, 1), 2).is_zero()

    @settings(max_examples=40)
    @given(small_partitions, st.integers(1, 3))
    def test_methods_agree(self, lam, n):
        """Jacobi–Trudi（h と e）と半標準盤の列挙が一致する"""
        by_h = schur_poly(lam, n, SchurMethod.JT_H)
        assert schur_poly(lam, n, SchurMethod.JT_E) == by_h
        assert schur_poly(lam, n, SchurMethod.SSYT_ORACLE) == by_h

    def test_padded_size_same_result(self):
        """行列サイズを大きくしても値は変わらない"""
        lam = Partition.of(2, 1)
        assert schur_poly(lam, 3, "jt_h", size=4) == schur_poly(lam, 3, "jt_h")

    def test_small_size_raises(self):
        with pytest.raises(ValueError):
            schur_poly(Partition.of(2, 1), 3, "jt_h", size=1)


class TestFSeries:
    """f 級数と e(x)"""

    def test_f0_one_variable(self, x):
        assert f_series(0, 1) == 1 + x(1, 1) ** 2

    def test_f1_one_variable(self, x):
        assert f_series(1, 1) == x(1, 1)

    def test_symmetric_in_index(self):
        assert f_series(-2, 2) == f_series(2, 2)

    def test_f_beyond_n_vanishes(self):
        assert f_series(3, 2).is_zero()

    def test_e_sum(self, x):
        x1, x2 = x(1, 2), x(2, 2)
        assert e_sum_series(2) == (1 + x1) * (1 + x2)
        assert e_sum_series(2, signed=True) == (1 - x1) * (1 - x2)

    def test_zero_variables_raise(self):
        with pytest.raises(ValueError):
            f_series(0, 0)


class TestFComb:
    """f の形式和と p₁⊥"""

    def test_normalizes_negative_index(self):
        assert FComb({-2: 1, 2: 1}) == FComb({2: 2})

    def test_apply_p1_perp(self):
        assert FComb.single(0).apply_p1_perp() == FComb({1: 2})

    def test_skew_power(self):
        assert f_skew_power(1, 0) == FComb({1: 2})
        assert f_skew_power(2, 1) == FComb({1: 3, 3: 1})

    def test_skew_power_matches_iteration(self):
        value = FComb.single(2)
        for _ in range(3):
            value = value.apply_p1_perp()
        assert value == f_skew_power(3, 2)

    def test_negative_power_raises(self):
        with pytest.raises(ValueError):
            f_skew_power(-1, 0)

    def test_materialize(self):
        comb = FComb({0: 1, 1: -1})
        assert comb.materialize(2) == f_series(0, 2) - f_series(1, 2)

    def test_str(self):
        assert str(FComb()) == "0"
        assert str(FComb({1: 3, 3: 1})) == "3*f1 + f3"
        assert isinstance(FComb().materialize(1), MultiPoly)
