#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
有界 Littlewood 恒等式の検証ラボ
================================
Schur 和と行列式・Pfaffian・上下盤・振動盤・so_{2n} 指標の恒等式を
厳密な整数演算で確かめ、JSON 行か表で結果を出す。

【使い方】
    python littlewood_lab.py verify --theorem BK_even1 --n 1..3 --w 1..2
    python littlewood_lab.py verify --theorem all --n 1..2 --w 1 --format table
    python littlewood_lab.py table walk_counts --n-max 6 --w 1

【終了コード】
    0: 全て一致 / 1: 不一致かエラーがある / 2: 引数の誤り
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from core.async_helpers import run_async
from core.constants import DEFAULT_SEED, ENV_JOBS, __version__
from core.logger import setup_logging
from core.report_schemas import ReportLine, SuiteConfig, SummaryLine
from core.safe_parse import parse_int_range
from core.syt import Parity
from verifiers.base import VerifyReport, VerifyStatus
from verifiers.registry import UsageError, run_suite
from verifiers.syt_counting import syt_count_rows
from verifiers.tableau_walks import oeis_rows, walk_count_rows

logger = logging.getLogger(__name__)

# 環境変数読み込み（override=True で .env.local を優先）
load_dotenv(Path.home() / ".env.local", override=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_KINDS = ("syt_counts", "walk_counts", "oeis_check")

_STATUS_STYLE = {
    VerifyStatus.PASS: "green",
    VerifyStatus.FAIL: "bold red",
    VerifyStatus.UNCLAIMED: "yellow",
    VerifyStatus.ERROR: "bold magenta",
}


# ====================================
# 引数
# ====================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="有界 Littlewood 恒等式の検証ラボ")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="恒等式を検証して JSON 行か表を出力")
    verify.add_argument("--theorem", "-t", action="append", help="検証名（カンマ区切り・複数指定可、既定 all）")
    verify.add_argument("--n", default=None, help="変数の数の範囲（例: 1..3）")
    verify.add_argument("--w", default=None, help="幅パラメータの範囲（例: 1..2）")
    verify.add_argument("--k", default=None, help="k の範囲（省略時は定理ごとの全範囲）")
    verify.add_argument("--c", default=None, help="kratt の c（整数・半整数のカンマ区切り、例: 1/2,2）")
    verify.add_argument("--degree", type=int, default=None, help="Λ の切り捨て次数")
    verify.add_argument("--order", type=int, default=None, help="EGF の打ち切り次数")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="乱択検証のシード")
    verify.add_argument("--jobs", "-j", default=os.environ.get(ENV_JOBS), help=f"並列数（既定 ${ENV_JOBS} または 1）")
    verify.add_argument("--format", choices=("json", "table"), default="json", help="出力形式")
    verify.add_argument("--timing", action="store_true", help="elapsed_ms を出力する")

    table = sub.add_parser("table", help="個数の表を出力")
    table.add_argument("kind", choices=TABLE_KINDS, help="表の種類")
    table.add_argument("--n-max", type=int, default=6, help="n の上限")
    table.add_argument("--w", default="1", help="幅パラメータ（例: 1..2）")
    table.add_argument("--format", choices=("json", "table"), default="table", help="出力形式")
    return parser


def config_from_args(args: argparse.Namespace) -> SuiteConfig:
    """
    Raises:
        ValidationError: 値が不正な場合
    """
    raw = {
        "theorems": args.theorem,
        "n_values": args.n,
        "w_values": args.w,
        "k_values": args.k,
        "c_values": args.c,
        "degree": args.degree,
        "order": args.order,
        "seed": args.seed,
        "jobs": args.jobs,
        "output_format": args.format,
        "timing": args.timing,
    }
    return SuiteConfig.model_validate({key: value for key, value in raw.items() if value is not None})


# ====================================
# 出力
# ====================================
def summarize(reports: list[VerifyReport], seed: int) -> SummaryLine:
    counts = {status: 0 for status in VerifyStatus}
    for report in reports:
        counts[report.status] += 1
    return SummaryLine(
        total=len(reports),
        passed=counts[VerifyStatus.PASS],
        failed=counts[VerifyStatus.FAIL],
        errors=counts[VerifyStatus.ERROR],
        unclaimed=counts[VerifyStatus.UNCLAIMED],
        seed=seed,
        version=__version__,
    )


def _json_line(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, default=str)


def emit_json(reports: list[VerifyReport], summary: SummaryLine, timing: bool) -> None:
    for report in reports:
        line = ReportLine.model_validate(report.to_dict(include_timing=timing))
        print(_json_line(line.model_dump()))
    print(_json_line(summary.model_dump()))


def emit_report_table(reports: list[VerifyReport], summary: SummaryLine, timing: bool, console: Console) -> None:
    table = Table(title="検証結果")
    for column in ("theorem", "params", "status", "detail"):
        table.add_column(column)
    if timing:
        table.add_column("ms", justify="right")
    for report in reports:
        params = ", ".join(f"{k}={v}" for k, v in report.params.items())
        row = [report.theorem, params, f"[{_STATUS_STYLE[report.status]}]{report.status.value}[/]", report.detail]
        if timing:
            row.append(f"{report.elapsed_ms:.1f}")
        table.add_row(*row)
    console.print(table)
    console.print(
        f"合計 {summary.total} 件: 一致 {summary.passed} / 不一致 {summary.failed} / "
        f"エラー {summary.errors} / 範囲外 {summary.unclaimed}（seed={summary.seed}）"
    )


def table_rows(kind: str, n_max: int, w_values: list[int]) -> tuple[list[dict], bool]:
    """
    表の行（dict）と、全行が一致しているかを返す。

    Raises:
        ValueError: 未知の種類、または範囲外の引数
    """
    if kind == "syt_counts":
        rows = [
            row for w in w_values if w >= 1
            for parity in Parity
            for row in syt_count_rows(n_max, w, parity)
        ]
        return [row.to_dict() for row in rows], all(row.consistent for row in rows)
    if kind == "walk_counts":
        return [row.to_dict() for w in w_values for row in walk_count_rows(n_max, w)], True
    if kind == "oeis_check":
        rows = oeis_rows(n_max)
        return [row.to_dict() for row in rows], all(row.consistent for row in rows)
    raise ValueError(f"未知の表の種類です: {kind!r}")


def emit_table(kind: str, rows: list[dict], output_format: str, console: Console) -> None:
    if output_format == "json":
        for row in rows:
            print(_json_line(row))
        return
    table = Table(title=kind)
    columns = list(rows[0]) if rows else []
    for column in columns:
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(*(str(row[c]) for c in columns))
    console.print(table)


# ====================================
# CLI
# ====================================
async def main(argv: list[str] | None = None) -> int:
    """CLI エントリーポイント。終了コードを返す"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging()
    console = Console()

    if args.command == "table":
        try:
            rows, consistent = table_rows(args.kind, args.n_max, parse_int_range(args.w))
        except ValueError as e:
            parser.print_usage(sys.stderr)
            print(f"エラー: {e}", file=sys.stderr)
            return EXIT_USAGE
        emit_table(args.kind, rows, args.format, console)
        if not consistent:
            logger.error("表 %s に食い違いがあります", args.kind)
        return EXIT_OK if consistent else EXIT_FAILED

    try:
        cfg = config_from_args(args)
        reports = await run_suite(cfg)
    except (ValidationError, UsageError, ValueError) as e:
        parser.print_usage(sys.stderr)
        print(f"エラー: {e}", file=sys.stderr)
        return EXIT_USAGE

    summary = summarize(reports, cfg.seed)
    if cfg.output_format == "json":
        emit_json(reports, summary, cfg.timing)
    else:
        emit_report_table(reports, summary, cfg.timing, console)
    logger.info(
        "検証完了: 合計 %d / 一致 %d / 不一致 %d / エラー %d / 範囲外 %d",
        summary.total, summary.passed, summary.failed, summary.errors, summary.unclaimed,
    )
    return EXIT_OK if summary.all_passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(run_async(main()))
