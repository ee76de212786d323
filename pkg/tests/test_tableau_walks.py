#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
verifiers/tableau_walks.py のテスト
===================================
格子路の母関数・上下盤と振動盤による解釈・歩道の性質と数列表。
"""

import pytest

from core.partitions import Partition
from verifiers.base import CombinatorialId, PathEquation, VerifyStatus
from verifiers.tableau_walks import (
    combinatorial_k_range,
    motzkin,
    mud_star_decomposes,
    mvt_star_decomposes,
    oeis_rows,
    path_gf_sides,
    riordan,
    verify_combinatorial,
    verify_path_gf,
    verify_walk_properties,
    walk_count_rows,
    weight_degrees_conserved,
)


def _not_passed(reports):
    return [r.to_dict() for r in reports if r.status is not VerifyStatus.PASS]


class TestPathGf:
    """格子路の母関数"""

    def test_unmarked_one_step(self, x):
        """(1,0) → (1,2) の路は垂直と対角の 2 本で 1 + x₁²"""
        lhs, rhs = path_gf_sides("UD-lem0", 1, 1, 1)
        x1 = x(1, 1)
        assert lhs == rhs == 1 + x1 ** 2

    def test_odd_marked_one_step(self, x):
        x1 = x(1, 1)
        assert path_gf_sides("UD-lem1", 1, 1, 1) == (1 + x1 + x1 ** 2, 1 + x1 + x1 ** 2)
        assert path_gf_sides("UD-lem2", 1, 1, 1) == (1 - x1 + x1 ** 2, 1 - x1 + x1 ** 2)

    def test_bounded_start_below_t(self):
        """L_2 は列 1 から出られないので両辺 0"""
        lhs, rhs = path_gf_sides("UD-lem3", 1, 1, 2)
        assert lhs.is_zero() and rhs.is_zero()

    @pytest.mark.parametrize("eq", [e.value for e in PathEquation])
    def test_small_grid(self, eq):
        reports = [
            verify_path_gf(eq, i, j, n)
            for i in (1, 2, 3) for j in (1, 2, 3) for n in (1, 2)
        ]
        assert _not_passed(reports) == []

    def test_invalid_raises(self):
        with pytest.raises(ValueError):
            verify_path_gf("UD-lem0", 0, 1, 1)


class TestCombinatorial:
    """組合せ的解釈"""

    @pytest.mark.parametrize("theorem", [t.value for t in CombinatorialId])
    def test_small_grid(self, theorem):
        reports = []
        for n in (1, 2, 3):
            for w in (1, 2):
                for k in combinatorial_k_range(theorem, n, w):
                    reports.extend(verify_combinatorial(theorem, n, w, k))
        assert reports
        assert _not_passed(reports) == []

    def test_syt_odd_sides(self):
        reports = verify_combinatorial("SYTodd", 1, 1, 1)
        assert [r.params.get("side") for r in reports] == [None, "coefficient"]
        assert all(r.equal for r in reports)

    def test_syt_odd_parity_shortcut(self):
        reports = verify_combinatorial("SYTodd", 2, 1, 1)
        assert [r.params["side"] for r in reports] == ["parity"]

    def test_syt_even_split(self):
        reports = verify_combinatorial("SYTeven", 2, 1, 0)
        sides = [r.params["side"] for r in reports]
        assert sides == ["mvt0", "mvt1", "mvt_star", "coefficient_ee", "coefficient_eo"]

    def test_syt_zero_size(self):
        reports = verify_combinatorial("Zeilberger", 0, 1)
        assert reports[0].status is VerifyStatus.PASS
        assert reports[0].params == {"n": 0, "w": 1}

    def test_eu_unrefined(self):
        """k なしは幅 2 の SYT の総数と長さ < w でだけ止まれる歩道"""
        report = verify_combinatorial("EuEtAl", 4, 1)[0]
        assert report.status is VerifyStatus.PASS
        assert report.lhs_hash == report.rhs_hash

    def test_w_zero_unclaimed(self):
        reports = verify_combinatorial("GouldenMUDeven", 1, 0, 0)
        assert [r.status for r in reports] == [VerifyStatus.UNCLAIMED]
        assert reports[0].equal

    def test_k_ranges(self):
        assert combinatorial_k_range("UDeven", 3, 2) == [0, 1]
        assert combinatorial_k_range("UDevenH", 3, 2) == [2]
        assert combinatorial_k_range("SYTodd", 3, 1) == [0, 1, 2, 3]
        assert combinatorial_k_range("Zeilberger", 3, 1) == [None]
        assert combinatorial_k_range("EuEtAl", 2, 1) == [None, 0, 1, 2]
        assert combinatorial_k_range("UDodd1", 3, 2) == [0, 1, 2]

    def test_out_of_range_raises(self):
        with pytest.raises(ValueError):
            verify_combinatorial("UDeven", 2, 1, 1)
        with pytest.raises(ValueError):
            verify_combinatorial("UDodd1", 0, 1, 0)
        with pytest.raises(ValueError):
            verify_combinatorial("UDodd1", 2, 1, None)
        with pytest.raises(ValueError):
            verify_combinatorial("EuEtAl", 2, 1, -1)


class TestWalkProperties:
    """分解・次数・全単射"""

    @pytest.mark.parametrize("n", range(0, 4))
    def test_decompositions(self, n):
        empty = Partition.empty()
        for w in (1, 2):
            for mu in (empty, Partition.of(1), Partition.of(1, 1)):
                if mu.length > w:
                    continue
                assert mud_star_decomposes(n, w, mu, empty)
                assert mvt_star_decomposes(n, w, mu, empty)

    def test_weight_degree(self):
        assert weight_degrees_conserved(2, 1, Partition.of(1), Partition.empty())
        assert weight_degrees_conserved(2, 2, Partition.empty(), Partition.of(1, 1))

    def test_all(self):
        reports = verify_walk_properties(3, 2)
        assert reports
        assert _not_passed(reports) == []
        checks = {r.params["check"] for r in reports}
        assert {"path_bijection", "weight_degree", "mud_star_partition", "mvt_star_partition",
                "odd_column_total", "oeis_riordan"} <= checks

    def test_invalid_raises(self):
        with pytest.raises(ValueError):
            verify_walk_properties(3, 0)


class TestTables:
    """walk_counts と oeis_check の表"""

    def test_riordan_column(self):
        rows = walk_count_rows(6, 1)
        assert [r.counts["vt_gt"] for r in rows] == [1, 0, 1, 1, 3, 6, 15]
        assert [r.counts["vt"] for r in rows] == [1, 1, 2, 4, 9, 21, 51]

    def test_row_dict(self):
        row = walk_count_rows(0, 1)[0]
        assert row.to_dict()["n"] == 0
        assert row.to_dict()["mvt_star"] == 1

    def test_closed_forms(self):
        assert [riordan(n) for n in range(7)] == [1, 0, 1, 1, 3, 6, 15]
        assert [motzkin(n) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]

    def test_oeis_rows_consistent(self):
        rows = oeis_rows(6)
        assert all(r.consistent for r in rows)
        assert {r.name for r in rows} == {"riordan", "central_binomial", "catalan_square", "motzkin"}
        assert rows[0].to_dict()["oeis"] == "A005043"

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            walk_count_rows(-1, 1)
