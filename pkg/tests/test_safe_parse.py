#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/safe_parse.py のテスト
"""

from fractions import Fraction

import pytest

from core.safe_parse import parse_half, parse_int_range, safe_int


class TestSafeInt:
    """safe_int() のテスト"""

    def test_normal_int(self):
        assert safe_int(4) == 4

    def test_string_int(self):
        assert safe_int("4") == 4

    def test_float_string(self):
        """"3.0" も受け付ける"""
        assert safe_int("3.0") == 3

    def test_none_returns_default(self):
        assert safe_int(None) == 0
        assert safe_int(None, default=1) == 1

    def test_non_numeric_string_returns_default(self):
        assert safe_int("many", default=2) == 2
        assert safe_int("", default=2) == 2
        assert safe_int("   ", default=2) == 2

    def test_clamp(self):
        assert safe_int("64", max_val=16) == 16
        assert safe_int(0, min_val=1) == 1

    def test_inf_returns_default(self):
        assert safe_int(float("inf"), default=3) == 3


class TestParseIntRange:
    """parse_int_range() のテスト"""

    @pytest.mark.parametrize("text", ["1..3", "1-3", "1:3", " 1 .. 3 "])
    def test_range_forms(self, text):
        assert parse_int_range(text) == [1, 2, 3]

    def test_list_form(self):
        assert parse_int_range("4,0,2,2") == [0, 2, 4]

    def test_single(self):
        assert parse_int_range("2") == [2]
        assert parse_int_range(5) == [5]

    def test_sequence_input(self):
        assert parse_int_range([3, 1, 3]) == [1, 3]

    def test_reversed_range_raises(self):
        with pytest.raises(ValueError):
            parse_int_range("3..1")

    @pytest.mark.parametrize("text", [None, "", "a..b", "1,x", ","])
    def test_invalid_raises(self, text):
        with pytest.raises(ValueError):
            parse_int_range(text)


class TestParseHalf:
    """parse_half() のテスト"""

    def test_values(self):
        assert parse_half("3/2") == Fraction(3, 2)
        assert parse_half("1.5") == Fraction(3, 2)
        assert parse_half("-2") == -2

    def test_third_raises(self):
        with pytest.raises(ValueError):
            parse_half("1/3")

    def test_garbage_raises(self):
        with pytest.raises(ValueError):
            parse_half("half")
