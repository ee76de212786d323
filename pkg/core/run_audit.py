#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""検証の監査ログ（Logs/verify_audit.jsonl）"""
import json
import logging
import logging.handlers
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Optional

from core.logger import default_log_dir

_AUDIT_FILE_NAME = "verify_audit.jsonl"


class RunAuditLogger:
    """JSONL 形式で検証 1 件ごとの結果と実測時間を記録する。"""

    def __init__(self, log_dir: Optional[Path] = None):
        self._logger = logging.getLogger("verify_audit")
        self._logger.setLevel(logging.INFO)
        self._logger.propagate = False
        if self._logger.handlers:
            return
        directory = log_dir or default_log_dir()
        try:
            directory.mkdir(parents=True, exist_ok=True)
            handler: logging.Handler = logging.handlers.TimedRotatingFileHandler(
                str(directory / _AUDIT_FILE_NAME), when="midnight", backupCount=30,
                encoding="utf-8",
            )
        except OSError as exc:
            logging.getLogger(__name__).warning("監査ログを開けません。記録を省略します: %s", exc)
            handler = logging.NullHandler()
        handler.setFormatter(logging.Formatter("%(message)s"))
        self._logger.addHandler(handler)

    def log_result(
        self,
        theorem: str,
        params: Mapping[str, Any],
        equal: bool,
        elapsed_ms: float,
        seed: Optional[int] = None,
        status: str = "",
    ) -> None:
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "theorem": theorem,
            "params": dict(params),
            "equal": equal,
            "status": status,
            "elapsed_ms": round(elapsed_ms, 1),
            "seed": seed,
        }
        self._logger.info(json.dumps(entry, ensure_ascii=False, sort_keys=True, default=str))


_audit_logger: Optional[RunAuditLogger] = None


def _get_audit_logger() -> RunAuditLogger:
    global _audit_logger
    if _audit_logger is None:
        _audit_logger = RunAuditLogger()
    return _audit_logger


def log_result(
    theorem: str,
    params: Mapping[str, Any],
    equal: bool,
    elapsed_ms: float,
    seed: Optional[int] = None,
    status: str = "",
) -> None:
    _get_audit_logger().log_result(theorem, params, equal, elapsed_ms, seed, status)
