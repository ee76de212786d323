#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
verifiers/pfaffian_lab.py のテスト
"""

import random

import pytest

from core.poly_ring import MultiPoly
from core.ring_matrix import SkewSymbolPoly, pfaffian
from verifiers.base import VerifyStatus
from verifiers.pfaffian_lab import (
    GordonVariant,
    ZERO,
    ZERO_PRIME,
    gordon_determinant,
    parity_matrix,
    random_skew,
    signed_pair_matrix,
    signed_pair_pfaffian,
    sum_det_sides,
    toeplitz_skew,
    verify_aux_lemmas,
    verify_gordon,
    verify_matrix_properties,
    verify_minor_summation,
    weight_matrix_entry,
)


def _all_pass(reports):
    return [r.to_dict() for r in reports if r.status is not VerifyStatus.PASS] == []


class TestGordon:
    """Pf(z_{j−i}) の行列式への変形"""

    @pytest.mark.parametrize("variant", [v.value for v in GordonVariant])
    @pytest.mark.parametrize("w", [1, 2, 3])
    def test_variants(self, w, variant):
        report = verify_gordon(w, variant)
        assert report.status is VerifyStatus.PASS
        assert report.params == {"w": w, "variant": variant}

    def test_w_one(self):
        z1 = SkewSymbolPoly.z(1)
        assert pfaffian(toeplitz_skew(1)) == z1
        assert gordon_determinant(1, "G1") == z1
        assert gordon_determinant(1, GordonVariant.G2) == z1 * 2

    def test_w_zero_raises(self):
        with pytest.raises(ValueError):
            verify_gordon(0, "G1")


class TestMinorSummation:
    """小行列式の和公式"""

    @pytest.mark.parametrize("m,p", [(2, 2), (2, 4), (4, 5)])
    def test_random(self, m, p):
        reports = verify_minor_summation(m, p, trials=3, seed=1)
        assert len(reports) == 3
        assert _all_pass(reports)
        assert all(r.seed == 1 for r in reports)

    def test_seed_reproducible(self):
        a = [r.to_dict() for r in verify_minor_summation(2, 3, trials=2, seed=5)]
        b = [r.to_dict() for r in verify_minor_summation(2, 3, trials=2, seed=5)]
        assert a == b

    @pytest.mark.parametrize("m,p", [(3, 4), (4, 2), (2, 9)])
    def test_invalid_sizes(self, m, p):
        with pytest.raises(ValueError):
            verify_minor_summation(m, p, trials=1)


class TestAuxLemmas:
    """補助補題"""

    def test_parity_pfaffian(self):
        assert pfaffian(parity_matrix(2)) == 1
        assert pfaffian(parity_matrix(4)) == 2

    def test_signed_pair(self):
        for signs in ((1, 1), (1, -1), (-1, 1, 1, -1)):
            assert pfaffian(signed_pair_matrix(signs)) == signed_pair_pfaffian(signs)

    def test_sum_det_one_dimensional(self):
        lhs, rhs = sum_det_sides([[2], [3]], [5], [7])
        assert lhs == rhs == 5 * 2 + 7 * 3

    def test_weight_matrix(self):
        u = MultiPoly.u_variable(0)
        one = MultiPoly.constant(1, 0, has_u=True)
        assert weight_matrix_entry(ZERO, ZERO_PRIME).is_zero()
        assert weight_matrix_entry(ZERO, 3) == one + u
        assert weight_matrix_entry(ZERO_PRIME, 2) == u - one
        assert weight_matrix_entry(1, 2) == one + u * u
        assert weight_matrix_entry(1, 3) == u * 2
        assert weight_matrix_entry(3, 1) == u * (-2)

    def test_all(self):
        reports = verify_aux_lemmas(4, trials=2, seed=3)
        assert reports
        assert _all_pass(reports)
        checks = {r.params["check"] for r in reports}
        assert checks == {
            "sum_det", "parity_pfaffian", "signed_pair_pfaffian", "weight_subpfaffian", "elementary_minor",
        }

    def test_n_max_out_of_range(self):
        with pytest.raises(ValueError):
            verify_aux_lemmas(9, trials=1)


class TestMatrixProperties:
    def test_all(self):
        reports = verify_matrix_properties(trials=2, seed=0, max_size=3)
        assert _all_pass(reports)
        checks = {r.params["check"] for r in reports}
        assert checks == {"pf_squared", "pf_squared_symbolic", "multilinear", "alternating", "label_permutation"}

    def test_random_skew_is_skew(self):
        assert random_skew(random.Random(0), 4).is_skew_symmetric()
