#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
littlewood_lab.py（CLI）のテスト
"""

import json
from fractions import Fraction

import pytest

import littlewood_lab
from littlewood_lab import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    config_from_args,
    main,
    summarize,
    table_rows,
)
from verifiers.base import VerifyReport, VerifyStatus


def _json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestParser:
    """引数の解釈"""

    def test_verify_defaults(self):
        args = build_parser().parse_args(["verify"])
        cfg = config_from_args(args)
        assert cfg.runs_all
        assert cfg.output_format == "json"
        assert cfg.timing is False

    def test_repeated_theorem(self):
        args = build_parser().parse_args(["verify", "-t", "BK_odd1,gordon", "-t", "kratt", "--n", "1..2"])
        cfg = config_from_args(args)
        assert cfg.theorems == ["BK_odd1", "gordon", "kratt"]
        assert cfg.n_values == [1, 2]

    def test_c_option(self):
        args = build_parser().parse_args(["verify", "-t", "kratt", "--n", "1", "--w", "1", "--c", "2"])
        cfg = config_from_args(args)
        assert cfg.c_values == [Fraction(2)]
        assert cfg.w_values == [1]

    def test_missing_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_bad_format(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "--format", "xml"])


class TestSummarize:
    def test_counts(self):
        reports = [
            VerifyReport.create_comparison("a", {}, 1, 1),
            VerifyReport.create_comparison("a", {}, 1, 2),
            VerifyReport.create_error("b", {}, "boom"),
            VerifyReport.create_comparison("c", {}, 1, 2, claimed=False),
        ]
        summary = summarize(reports, seed=3)
        assert (summary.total, summary.passed, summary.failed, summary.errors, summary.unclaimed) == (4, 1, 1, 1, 1)
        assert summary.seed == 3
        assert not summary.all_passed


class TestVerifyCommand:
    """verify サブコマンド"""

    async def test_json_output(self, capsys):
        code = await main(["verify", "-t", "gordon", "--w", "1", "--n", "1", "--seed", "5"])
        assert code == EXIT_OK
        lines = _json_lines(capsys.readouterr().out)
        assert len(lines) == 5
        assert all(line["status"] == VerifyStatus.PASS.value for line in lines[:4])
        assert all(line["elapsed_ms"] == 0 for line in lines[:4])
        assert lines[-1]["summary"] is True
        assert lines[-1]["passed"] == 4
        assert lines[-1]["seed"] == 5

    async def test_timing(self, capsys):
        await main(["verify", "-t", "gordon", "--w", "1", "--n", "1", "--timing"])
        lines = _json_lines(capsys.readouterr().out)
        assert all(line["elapsed_ms"] >= 0 for line in lines[:-1])

    async def test_table_output(self, capsys):
        code = await main(["verify", "-t", "gordon", "--w", "1", "--n", "1", "--format", "table"])
        assert code == EXIT_OK
        assert "検証結果" in capsys.readouterr().out

    async def test_unknown_theorem(self, capsys):
        code = await main(["verify", "-t", "no_such"])
        assert code == EXIT_USAGE
        assert "エラー" in capsys.readouterr().err

    async def test_invalid_range(self, capsys):
        code = await main(["verify", "-t", "gordon", "--w", "-1"])
        assert code == EXIT_USAGE

    async def test_kratt_with_c(self, capsys):
        code = await main(["verify", "-t", "kratt", "--n", "1", "--w", "1", "--c", "2"])
        assert code == EXIT_OK
        lines = _json_lines(capsys.readouterr().out)
        main_lines = [line for line in lines[:-1] if "c" in line["params"]]
        assert [(line["params"]["c"], line["params"]["k"]) for line in main_lines] == [("2", k) for k in range(5)]
        assert lines[-1]["passed"] == 5 * 4

    async def test_bad_c(self, capsys):
        assert await main(["verify", "-t", "kratt", "--c", "1/3"]) == EXIT_USAGE

    async def test_failure_exit_code(self, capsys, monkeypatch):
        async def fake_run_suite(cfg):
            return [VerifyReport.create_comparison("BK_odd1", {"n": 1, "w": 1}, 1, 2, seed=cfg.seed)]

        monkeypatch.setattr(littlewood_lab, "run_suite", fake_run_suite)
        code = await main(["verify", "-t", "BK_odd1"])
        assert code == EXIT_FAILED
        lines = _json_lines(capsys.readouterr().out)
        assert lines[0]["status"] == VerifyStatus.FAIL.value
        assert lines[-1]["failed"] == 1

    async def test_unclaimed_does_not_fail(self, capsys, monkeypatch):
        async def fake_run_suite(cfg):
            return [VerifyReport.create_comparison("G_odd_k", {"n": 1, "w": 0}, 1, 2, claimed=False)]

        monkeypatch.setattr(littlewood_lab, "run_suite", fake_run_suite)
        assert await main(["verify", "-t", "G_odd_k"]) == EXIT_OK


class TestTableCommand:
    """table サブコマンド"""

    def test_rows(self):
        rows, consistent = table_rows("walk_counts", 4, [1])
        assert consistent
        assert [row["n"] for row in rows] == [0, 1, 2, 3, 4]

    def test_syt_rows_skip_zero_width(self):
        rows, consistent = table_rows("syt_counts", 3, [0, 1])
        assert consistent
        assert len(rows) == 2 * 4

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            table_rows("nope", 3, [1])

    async def test_json(self, capsys):
        code = await main(["table", "oeis_check", "--n-max", "5", "--format", "json"])
        assert code == EXIT_OK
        lines = _json_lines(capsys.readouterr().out)
        assert {line["oeis"] for line in lines} >= {"A005043"}

    async def test_rich_table(self, capsys):
        code = await main(["table", "syt_counts", "--n-max", "3", "--w", "1"])
        assert code == EXIT_OK
        assert "syt_counts" in capsys.readouterr().out

    async def test_bad_width(self, capsys):
        code = await main(["table", "walk_counts", "--w", "x"])
        assert code == EXIT_USAGE
