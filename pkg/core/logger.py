#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
ロギング設定モジュール
======================
検証の経過を Logs/littlewood_lab.log に日次ローテーションで書き出す。

【動作】
- 0時にローテーション、30日分保持
- LL_LAB_LOG_DIR が設定されていればそのディレクトリを使う
- 出力先が作れない場合はコンソールのみで続行

【使い方】
    from core.logger import setup_logging
    setup_logging()   # 起動時に1回だけ呼ぶ
"""

import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path

from core.constants import ENV_LOG_DIR

LOG_FILE_NAME = "littlewood_lab.log"
LOG_FORMAT = "%(asctime)s [%(levelname)-8s] %(name)s: %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"

# 再インポートされても1回だけ設定する
_logging_configured = False


def default_log_dir() -> Path:
    """LL_LAB_LOG_DIR、なければ <プロジェクトルート>/Logs"""
    override = os.environ.get(ENV_LOG_DIR, "").strip()
    if override:
        return Path(override).expanduser()
    return Path(__file__).parent.parent / "Logs"


def setup_logging(
    log_dir: Path | None = None,
    level: int = logging.INFO,
) -> None:
    """
    ルートロガーに stderr ハンドラと日次ローテーションのファイルハンドラを付ける。

    Args:
        log_dir: ログ出力ディレクトリ。None なら default_log_dir()
        level:   ログレベル（デフォルト: INFO）
    """
    global _logging_configured
    if _logging_configured:
        return
    _logging_configured = True

    if log_dir is None:
        log_dir = default_log_dir()

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATEFMT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(level)
    root_logger.addHandler(console_handler)

    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / LOG_FILE_NAME

        file_handler = TimedRotatingFileHandler(
            filename=str(log_file),
            when="midnight",
            interval=1,
            backupCount=30,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        root_logger.addHandler(file_handler)

        root_logger.info("ロギング開始: 出力先: %s", log_file)

    except (OSError, PermissionError) as exc:
        root_logger.warning(
            "ログファイル設定失敗。コンソールのみに出力します。理由: %s", exc
        )
