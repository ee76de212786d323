#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
verifiers/skew_lemmas.py のテスト
"""

import random

import pytest

from core.lambda_ring import SchurExpansion
from verifiers.base import VerifyStatus
from verifiers.skew_lemmas import (
    pop_h_sides,
    pop_p_sides,
    random_element,
    verify_adjointness,
    verify_skew_lemmas,
)


class TestSides:
    """列操作の変形"""

    @pytest.mark.parametrize("sign", [1, -1])
    @pytest.mark.parametrize("i,j", [(0, 1), (1, 2), (2, 3), (-1, 2)])
    def test_h_and_p(self, i, j, sign):
        lhs, rhs = pop_h_sides(i, j, sign, 8)
        assert lhs == rhs
        lhs, rhs = pop_p_sides(i, j, sign, 8)
        assert lhs == rhs

    def test_truncation_degree(self):
        lhs, rhs = pop_h_sides(1, 3, 1, 8)
        assert lhs.degree == rhs.degree == 6

    def test_j_zero_raises(self):
        with pytest.raises(ValueError):
            pop_h_sides(1, 0, 1, 4)
        with pytest.raises(ValueError):
            pop_p_sides(1, 0, 1, 4)


class TestRandomElement:
    def test_sizes_bounded(self):
        value = random_element(random.Random(0), 2, 5)
        assert isinstance(value, SchurExpansion)
        assert value.degree == 5
        assert all(lam.size <= 2 for lam in value.coeffs)
        assert all(c != 0 for c in value.coeffs.values())

    def test_reproducible(self):
        assert random_element(random.Random(4), 3, 6) == random_element(random.Random(4), 3, 6)


class TestVerifySkewLemmas:
    def test_all_pass(self):
        reports = verify_skew_lemmas(6, range(-1, 3), 2, trials=2)
        bad = [r.to_dict() for r in reports if r.status is not VerifyStatus.PASS]
        assert bad == []
        checks = {r.params["check"] for r in reports}
        assert checks == {
            "pop", "pop_rule", "pop_h", "pop_p", "derivation", "adjoint", "specialize_product", "degree_lowering",
        }

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            verify_skew_lemmas(3, [0], 2)

    def test_adjointness(self):
        reports = verify_adjointness(pairs=3, degree=4, seed=2)
        assert len(reports) == 3
        assert all(r.status is VerifyStatus.PASS for r in reports)
        assert all(r.seed == 2 for r in reports)

    def test_adjointness_degree_guard(self):
        with pytest.raises(ValueError):
            verify_adjointness(pairs=1, degree=0)
