#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
core/syt.py のテスト
"""

from fractions import Fraction

import pytest

from core.lambda_ring import schur
from core.partitions import Partition
from core.poly_ring import EGFSeries
from core.symfunc import FComb
from core.syt import (
    CountMethod,
    KloVariant,
    Parity,
    SytQuery,
    ballot_f,
    binomial,
    catalan,
    central_binom,
    combinatorial_scalars,
    compositions,
    gessel_series,
    klo_count,
    multinomial,
    syt_count,
    theta_f,
    theta_map,
)

MOTZKIN = [1, 1, 2, 4, 9, 21, 51]
CENTRAL = [1, 1, 2, 3, 6, 10, 20]


class TestSytCount:
    """総当たりとフック長の和"""

    def test_width_three(self):
        assert syt_count(SytQuery(n=3, w=3)) == 4

    def test_odd_columns_filter(self):
        assert syt_count(SytQuery(n=4, w=2, odd_columns=0)) == 3

    def test_odd_rows_filter(self):
        assert syt_count(SytQuery(n=4, w=2, odd_rows=0)) == 2

    @pytest.mark.parametrize("n", range(0, 7))
    def test_methods_agree(self, n):
        for w in (1, 2, 3):
            q = SytQuery(n=n, w=w)
            assert syt_count(q, CountMethod.BRUTEFORCE) == syt_count(q, CountMethod.HOOKSUM)

    def test_width_three_is_motzkin(self):
        assert [syt_count(SytQuery(n=n, w=3)) for n in range(7)] == MOTZKIN

    def test_both_filters_raise(self):
        with pytest.raises(ValueError):
            SytQuery(n=2, w=2, odd_columns=0, odd_rows=0)

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            SytQuery(n=-1, w=2)

    def test_accepts(self):
        q = SytQuery(n=3, w=2, odd_rows=1)
        assert q.accepts(Partition.of(2, 1))
        assert not q.accepts(Partition.of(3))


class TestScalars:
    """組合せ的スカラー"""

    def test_catalan(self):
        assert catalan(3) == 5
        assert catalan(Fraction(3, 2)) == 0
        assert catalan(-1) == 0

    def test_ballot(self):
        assert ballot_f(4, 2) == 2
        assert ballot_f(4, Fraction(3, 2)) == 0

    def test_binomial(self):
        assert binomial(3, -1) == 0
        assert binomial(3, 4) == 0
        assert binomial(4, 2) == 6

    def test_central_binom(self):
        assert [central_binom(r) for r in range(7)] == CENTRAL

    def test_dispatch(self):
        assert combinatorial_scalars("catalan", 3) == 5
        assert combinatorial_scalars("central_binom", 4) == 6
        assert combinatorial_scalars("ballot_F", 4, 2) == 2
        with pytest.raises(ValueError):
            combinatorial_scalars("fibonacci", 3)

    def test_multinomial_and_compositions(self):
        assert multinomial((1, 1)) == 2
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(compositions(0, 0)) == [()]
        assert list(compositions(1, 0)) == []


class TestTheta:
    """θ 写像"""

    def test_theta_f0(self):
        """θ(f_0) = 1 + x² + x⁴/4"""
        assert theta_f(0, 4) == EGFSeries(4, [1, 0, 1, 0, Fraction(1, 4)])

    def test_theta_symmetric(self):
        assert theta_f(-3, 5) == theta_f(3, 5)

    def test_theta_of_schur(self):
        """θ(s_(1,1)) = x²/2"""
        assert theta_map(schur(Partition.of(1, 1), 4), 4) == EGFSeries.monomial(2, Fraction(1, 2), 4)

    def test_theta_of_fcomb(self):
        comb = FComb({0: 1, 2: 1})
        assert theta_map(comb, 4) == theta_f(0, 4) + theta_f(2, 4)

    def test_theta_of_elementary(self):
        assert theta_map(3, 4, elementary=True) == EGFSeries.monomial(3, Fraction(1, 6), 4)

    def test_theta_bad_type(self):
        with pytest.raises(TypeError):
            theta_map("f0", 4)


class TestGesselAndKlo:
    """EGF 行列式と明示公式"""

    def test_gessel_odd(self):
        assert gessel_series(1, Parity.ODD, 4) == MOTZKIN[:5]

    def test_gessel_even(self):
        assert gessel_series(1, "even", 4) == CENTRAL[:5]

    def test_klo_values(self):
        assert klo_count(KloVariant.KLO_ODD, 3, 1) == 4
        assert klo_count("klo_even", 3, 1) == 3

    @pytest.mark.parametrize("n", range(0, 6))
    def test_klo_matches_bruteforce(self, n):
        for w in (1, 2):
            assert klo_count("klo_odd", n, w) == syt_count(SytQuery(n=n, w=2 * w + 1))
            assert klo_count("klo_even", n, w) == syt_count(SytQuery(n=n, w=2 * w))

    @pytest.mark.parametrize("n", range(0, 6))
    def test_refined_counts(self, n):
        """奇数長の行が k 本の SYT を数える"""
        for w in (1, 2):
            for k in range(n + 1):
                assert klo_count("ref_odd", n, w, k) == syt_count(SytQuery(n=n, w=2 * w + 1, odd_rows=k))
                assert klo_count("ref_even", n, w, k) == syt_count(SytQuery(n=n, w=2 * w, odd_rows=k))

    def test_refined_odd_example(self):
        """n=3, 幅 3 で奇数行 1 本は (3) と (2,1) の 1 + 2 = 3 個"""
        assert klo_count("ref_odd", 3, 1, 1) == 3

    def test_missing_k_raises(self):
        with pytest.raises(ValueError):
            klo_count("ref_even", 3, 1)

    def test_zero_width_raises(self):
        with pytest.raises(ValueError):
            klo_count("klo_odd", 3, 0)
