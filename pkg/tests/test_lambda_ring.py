#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/lambda_ring.py のテスト
"""

import pytest
from hypothesis import given, settings, strategies as st

from core.lambda_ring import (
    SchurExpansion,
    TruncationMismatchError,
    elementary,
    f_series_schur,
    fcomb_to_schur,
    hall_inner,
    multiply,
    one,
    p1_perp,
    p1_perp_power,
    pieri_mul_e,
    schur,
    specialize,
    to_elementary_basis,
)
from core.partitions import Partition
from core.symfunc import f_series

P = Partition.of

DEGREE = 4
SMALL = [Partition.empty(), P(1), P(2), P(1, 1)]
UP_TO_THREE = SMALL + [P(3), P(2, 1), P(1, 1, 1)]


def _expansions(shapes):
    return st.dictionaries(st.sampled_from(shapes), st.integers(-4, 4), max_size=4).map(
        lambda coeffs: SchurExpansion(DEGREE, coeffs)
    )


small = _expansions(SMALL)
up_to_three = _expansions(UP_TO_THREE)
up_to_four = _expansions(UP_TO_THREE + [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)])


class TestSchurExpansion:
    """SchurExpansion の基本操作"""

    def test_drops_terms_above_degree(self):
        value = SchurExpansion(2, {P(3): 1, P(1): 2})
        assert value.coeffs == {P(1): 2}

    def test_negative_degree_raises(self):
        with pytest.raises(ValueError):
            SchurExpansion(-1)

    def test_degree_mismatch(self):
        with pytest.raises(TruncationMismatchError):
            schur(P(1), 3) + schur(P(1), 4)

    def test_truncate_cannot_extend(self):
        with pytest.raises(TruncationMismatchError):
            schur(P(1), 3).truncate(4)

    def test_homogeneous(self):
        value = one(3) + schur(P(2), 3)
        assert value.homogeneous(2) == schur(P(2), 3)

    def test_str(self):
        assert str(SchurExpansion.zero(2)) == "0"
        assert str(schur(P(1), 2).scale(3)) == "3*s(1)"


class TestProducts:
    """Pieri 積と一般の積"""

    def test_pieri_from_one(self):
        assert pieri_mul_e(one(3), 2) == schur(P(1, 1), 3)

    def test_pieri_single_box(self):
        assert pieri_mul_e(schur(P(1), 3), 1) == schur(P(2), 3) + schur(P(1, 1), 3)

    def test_pieri_truncates(self):
        assert pieri_mul_e(schur(P(2), 2), 1) == SchurExpansion.zero(2)

    def test_elementary_negative_is_zero(self):
        assert elementary(-1, 3) == SchurExpansion.zero(3)

    def test_to_elementary_basis(self):
        """s_(2) = e_1² − e_2"""
        assert to_elementary_basis(schur(P(2), 3)) == {(1, 1): 1, (2,): -1}
        assert to_elementary_basis(schur(P(1, 1), 3)) == {(2,): 1}

    def test_multiply(self):
        s1 = schur(P(1), 3)
        assert multiply(s1, s1) == schur(P(2), 3) + schur(P(1, 1), 3)
        assert s1 * s1 == multiply(s1, s1)

    def test_multiply_littlewood_richardson(self):
        """s_(1)·s_(2,1) = s_(3,1) + s_(2,2) + s_(2,1,1)"""
        got = multiply(schur(P(1), 4), schur(P(2, 1), 4))
        assert got == schur(P(3, 1), 4) + schur(P(2, 2), 4) + schur(P(2, 1, 1), 4)

    def test_multiply_commutes(self):
        a = schur(P(2), 5) + schur(P(1), 5).scale(3)
        b = schur(P(1, 1), 5) - one(5)
        assert multiply(a, b) == multiply(b, a)


class TestSkewOperator:
    """p₁⊥ と Hall 内積"""

    def test_p1_perp(self):
        assert p1_perp(schur(P(2, 1), 4)) == schur(P(2), 4) + schur(P(1, 1), 4)

    def test_p1_perp_of_one_is_zero(self):
        assert p1_perp(one(3)) == SchurExpansion.zero(3)

    def test_p1_perp_power(self):
        assert p1_perp_power(schur(P(2), 3), 2) == one(3)
        assert p1_perp_power(schur(P(2), 3), 0) == schur(P(2), 3)

    def test_hall_inner(self):
        a = schur(P(2), 3).scale(2) + schur(P(1), 3)
        b = schur(P(2), 3).scale(3) + one(3)
        assert hall_inner(a, b) == 6
        with pytest.raises(TruncationMismatchError):
            hall_inner(a, schur(P(1), 4))


class TestSpecialize:
    """x₁..x_n への特殊化"""

    def test_single_box(self, x):
        assert specialize(schur(P(1), 3), 2) == x(1, 2) + x(2, 2)

    def test_f_series_one_variable(self):
        """f_0 を Λ_4 で作って 1 変数に特殊化すると 1 + x₁²"""
        assert specialize(f_series_schur(0, 4), 1) == f_series(0, 1)

    def test_f_series_matches_polynomial(self):
        """切り捨て次数が十分なら f_r(x₁, x₂) に一致する"""
        for r in range(0, 3):
            assert specialize(f_series_schur(r, 4 + r), 2) == f_series(r, 2)

    def test_fcomb_to_schur(self):
        value = fcomb_to_schur({0: 1, 2: -1}, 4)
        assert value == f_series_schur(0, 4) - f_series_schur(2, 4)


class TestRingProperties:
    """積・内積・特殊化の性質（hypothesis）"""

    @settings(max_examples=30, deadline=None)
    @given(small, small)
    def test_product_commutes(self, a, b):
        assert a * b == b * a

    @settings(max_examples=30, deadline=None)
    @given(small, small, small)
    def test_product_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=30, deadline=None)
    @given(small, small)
    def test_specialize_is_homomorphism(self, a, b):
        """次数 2 以下どうしの積は切り捨てに掛からない"""
        assert specialize(a * b, 2) == specialize(a, 2) * specialize(b, 2)

    @settings(max_examples=30, deadline=None)
    @given(up_to_four, up_to_three)
    def test_p1_perp_adjoint(self, a, b):
        """⟨p₁⊥a, b⟩ = ⟨a, s₍₁₎b⟩"""
        assert hall_inner(p1_perp(a), b) == hall_inner(a, b * schur(P(1), DEGREE))

    @given(up_to_four, up_to_four)
    def test_hall_inner_symmetric(self, a, b):
        assert hall_inner(a, b) == hall_inner(b, a)
