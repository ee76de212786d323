#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
verifiers/base.py のユニットテスト
==================================
VerifyReport の状態判定・ハッシュ・辞書化と検証名の解決。
"""

import pytest

from core.poly_ring import MultiPoly
from verifiers.base import (
    CombinatorialId,
    MachineryCheck,
    PathEquation,
    Stopwatch,
    TheoremId,
    VerifyReport,
    VerifyStatus,
    all_check_names,
    fingerprint,
    resolve_check_name,
)


# ====================================
# VerifyReport.create_comparison
# ====================================
class TestCreateComparison:
    """両辺の比較から状態を決める"""

    def test_equal_is_pass(self):
        report = VerifyReport.create_comparison("BK_odd1", {"n": 1, "w": 1}, 3, 3)
        assert report.status is VerifyStatus.PASS
        assert report.equal
        assert report.lhs_hash == report.rhs_hash
        assert not report.counts_as_failure

    def test_unequal_is_fail_with_detail(self):
        report = VerifyReport.create_comparison("SYTodd", {"n": 3}, 4, 5)
        assert report.status is VerifyStatus.FAIL
        assert report.detail == "4 != 5"
        assert report.counts_as_failure

    def test_polynomial_mismatch_has_no_repr_detail(self, x):
        report = VerifyReport.create_comparison("BK_odd1", {}, x(1, 1), x(1, 1) + 1)
        assert report.status is VerifyStatus.FAIL
        assert report.detail == ""

    def test_unclaimed_equal(self):
        """範囲外は一致しても合否に数えない"""
        report = VerifyReport.create_comparison("G_odd_k", {"w": 0}, 1, 1, claimed=False)
        assert report.status is VerifyStatus.UNCLAIMED
        assert report.equal
        assert report.detail == "範囲外（一致）"
        assert not report.counts_as_failure

    def test_unclaimed_unequal(self):
        report = VerifyReport.create_comparison("G_odd_k", {"w": 0}, 1, 2, claimed=False)
        assert report.status is VerifyStatus.UNCLAIMED
        assert not report.equal
        assert report.detail == "範囲外（不一致）"

    def test_params_copied(self):
        params = {"n": 1}
        report = VerifyReport.create_comparison("BK_odd1", params, 0, 0)
        params["n"] = 2
        assert report.params == {"n": 1}


class TestCreateCheckAndError:
    def test_check(self):
        assert VerifyReport.create_check("gordon", {"w": 1}, True).status is VerifyStatus.PASS
        failed = VerifyReport.create_check("gordon", {"w": 1}, False, detail="G2")
        assert failed.status is VerifyStatus.FAIL
        assert failed.detail == "G2"

    def test_error(self):
        report = VerifyReport.create_error("kratt", {"n": 1}, "boom", seed=3)
        assert report.status is VerifyStatus.ERROR
        assert report.detail == "エラー: boom"
        assert report.seed == 3
        assert report.counts_as_failure


class TestToDict:
    """辞書化と時間の扱い"""

    def test_timing_hidden_by_default(self):
        report = VerifyReport.create_check("gordon", {"w": 1}, True, elapsed_ms=12.34)
        data = report.to_dict()
        assert data["elapsed_ms"] == 0
        assert data["status"] == "pass"
        assert data["theorem"] == "gordon"

    def test_timing_included(self):
        """--timing では整数ミリ秒に丸める"""
        report = VerifyReport.create_check("gordon", {"w": 1}, True, elapsed_ms=12.34)
        assert report.to_dict(include_timing=True)["elapsed_ms"] == 12
        slow = VerifyReport.create_check("gordon", {"w": 1}, True, elapsed_ms=12.6)
        value = slow.to_dict(include_timing=True)["elapsed_ms"]
        assert value == 13
        assert isinstance(value, int)

    def test_same_input_same_dict(self):
        """時間を除けば出力は再現可能"""
        a = VerifyReport.create_comparison("BK_odd1", {"n": 2}, 5, 5, elapsed_ms=1.0)
        b = VerifyReport.create_comparison("BK_odd1", {"n": 2}, 5, 5, elapsed_ms=9.0)
        assert a.to_dict() == b.to_dict()


class TestFingerprint:
    def test_polynomial_hash_is_canonical(self, x):
        x1, x2 = x(1, 2), x(2, 2)
        assert fingerprint(x1 + x2) == fingerprint(x2 + x1)

    def test_length(self):
        assert len(fingerprint(42)) == 16
        assert len(fingerprint(MultiPoly.constant(1, 1))) == 16

    def test_distinguishes_values(self):
        assert fingerprint(1) != fingerprint(2)


class TestIds:
    """検証名の列挙"""

    def test_k_free_theorems(self):
        assert not TheoremId.BK_ODD1.uses_k
        assert TheoremId.G_ODD_K.uses_k
        assert TheoremId.RG_ODD_PLUS.is_u_identity
        assert not TheoremId.POP_ODD_SUM.is_u_identity

    def test_counts_tableaux(self):
        assert CombinatorialId.SYT_ODD.counts_tableaux
        assert CombinatorialId.EU_ET_AL.counts_tableaux
        assert not CombinatorialId.UD_ODD1.counts_tableaux

    def test_resolve(self):
        assert resolve_check_name("BK_odd1") is TheoremId.BK_ODD1
        assert resolve_check_name("Zeilberger") is CombinatorialId.ZEILBERGER
        assert resolve_check_name("UD-lem3") is PathEquation.LEM3
        assert resolve_check_name("kratt") is MachineryCheck.KRATT

    def test_resolve_unknown_raises(self):
        with pytest.raises(ValueError):
            resolve_check_name("nope")

    def test_all_names_unique(self):
        names = all_check_names()
        assert len(names) == len(set(names)) == 20 + 15 + 5 + 11


class TestStopwatch:
    def test_measures(self):
        with Stopwatch() as sw:
            sum(range(1000))
        assert sw.ms >= 0
