#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/so_characters.py のテスト
"""

from fractions import Fraction

import pytest

from core.partitions import Partition
from core.poly_ring import MultiPoly
from core.so_characters import (
    CharacterKind,
    HighestWeight,
    character_of_weight,
    half_factor,
    laurent_elementary,
    nearly_rectangular_weight,
    orthogonal_character,
    variable_product_power,
)

HALF = Fraction(1, 2)


def _mono(*exps):
    return MultiPoly.monomial(list(exps), len(exps), laurent=True)


class TestHighestWeight:
    """最高ウェイトの検証"""

    def test_integer_weight(self):
        weight = HighestWeight.of(2, -2)
        assert weight.n == 2
        assert not weight.is_half
        assert weight.last_sign == -1
        assert str(weight) == "(2,-2)"

    def test_half_weight(self):
        weight = HighestWeight.of(Fraction(3, 2), Fraction(-1, 2))
        assert weight.is_half
        assert weight.base_partition() == Partition.of(1)

    def test_sharp(self):
        assert HighestWeight.of(1, 1).sharp() == HighestWeight.of(1, -1)

    def test_mixed_raises(self):
        with pytest.raises(ValueError):
            HighestWeight.of(1, HALF)

    def test_not_dominant_raises(self):
        with pytest.raises(ValueError):
            HighestWeight.of(1, 2)
        with pytest.raises(ValueError):
            HighestWeight.of(1, -2)

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            HighestWeight(())

    def test_nearly_rectangular(self):
        assert nearly_rectangular_weight(Fraction(3, 2), 2, 2) == HighestWeight.of(Fraction(3, 2), Fraction(-1, 2))


class TestLaurentElementary:
    """e_r(x^{±1})"""

    def test_one_variable(self):
        assert laurent_elementary(1, 1) == _mono(1) + _mono(-1)
        assert laurent_elementary(2, 1) == _mono(0)
        assert laurent_elementary(3, 1).is_zero()

    def test_dimension(self):
        """x = 1 で C(2n, r)"""
        assert laurent_elementary(2, 2).evaluate_at([1, 1]) == 6

    def test_zero_variables_raise(self):
        with pytest.raises(ValueError):
            laurent_elementary(1, 0)

    def test_half_factor(self):
        assert half_factor(1, +1) == _mono(HALF) + _mono(-HALF)
        assert half_factor(1, -1) == _mono(HALF) - _mono(-HALF)


class TestCharacters:
    """o / ō / sorth"""

    def test_one_variable(self):
        lam = Partition.of(1)
        assert orthogonal_character(lam, 1, kind=CharacterKind.O_PLUS) == _mono(1) + _mono(-1)
        assert orthogonal_character(lam, 1, kind="o_bar") == _mono(1) - _mono(-1)
        assert orthogonal_character(lam, 1) == _mono(1)

    def test_half_shift(self):
        assert orthogonal_character(Partition.empty(), 1, shift_half=True) == _mono(HALF)

    def test_signed_weight(self):
        assert character_of_weight(HighestWeight.of(1)) == _mono(1)
        assert character_of_weight(HighestWeight.of(-1)) == _mono(-1)
        assert character_of_weight(HighestWeight.of(-HALF)) == _mono(-HALF)

    def test_dimensions_rank_two(self):
        """so_4: ベクトル表現 4、Λ² 6、自己双対 3、半スピン 2"""
        one = [1, 1]
        assert orthogonal_character(Partition.of(1), 2).evaluate_at(one) == 4
        assert orthogonal_character(Partition.of(1, 1), 2, kind="o_plus").evaluate_at(one) == 6
        assert orthogonal_character(Partition.of(1, 1), 2).evaluate_at(one) == 3
        assert orthogonal_character(Partition.empty(), 2, shift_half=True).evaluate_at(one) == 2

    def test_o_bar_vanishes_for_short_partition(self):
        assert orthogonal_character(Partition.of(1), 2, kind="o_bar").is_zero()

    def test_o_bar_full_length_wide(self):
        """so_4 の (2,2) は (x₁x₂)^m、(2,−2) は (x₁/x₂)^m の和（m = −2..2）"""
        lam = Partition.of(2, 2)
        diagonal = sum((_mono(m, m) for m in range(-2, 3)), MultiPoly.zero(2, laurent=True))
        anti = sum((_mono(m, -m) for m in range(-2, 3)), MultiPoly.zero(2, laurent=True))
        assert orthogonal_character(lam, 2, kind="o_bar") == diagonal - anti
        assert orthogonal_character(lam, 2, kind="o_plus") == diagonal + anti
        assert orthogonal_character(lam, 2) == diagonal
        assert character_of_weight(HighestWeight.of(2, -2)) == anti

    def test_too_long_raises(self):
        with pytest.raises(ValueError):
            orthogonal_character(Partition.of(1, 1), 1)

    def test_variable_product_power(self):
        assert variable_product_power(2, HALF) == _mono(HALF, HALF)
