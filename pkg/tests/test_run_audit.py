#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
run_audit モジュールのテスト
"""

import json
import logging

import pytest


@pytest.fixture(autouse=True)
def _isolate_audit_logger(tmp_path, monkeypatch):
    """各テストで独立した監査ログディレクトリを使う。

    モジュールレベルのシングルトンとロガーハンドラをテストごとに作り直す。
    """
    import core.run_audit as mod

    logger = logging.getLogger("verify_audit")
    for h in logger.handlers[:]:
        logger.removeHandler(h)
        h.close()

    audit_dir = tmp_path / "Logs"
    monkeypatch.setattr(mod, "_audit_logger", mod.RunAuditLogger(audit_dir))

    yield audit_dir / "verify_audit.jsonl"

    for h in logger.handlers[:]:
        logger.removeHandler(h)
        h.close()


def _flush():
    for h in logging.getLogger("verify_audit").handlers:
        h.flush()


class TestRunAuditLogger:
    """RunAuditLogger のテスト群"""

    def test_log_creates_jsonl(self, _isolate_audit_logger):
        from core.run_audit import log_result

        log_result("BK_odd1", {"n": 2, "w": 1}, True, 12.345, seed=7, status="pass")
        _flush()

        entry = json.loads(_isolate_audit_logger.read_text(encoding="utf-8").strip())
        assert entry["theorem"] == "BK_odd1"
        assert entry["params"] == {"n": 2, "w": 1}
        assert entry["equal"] is True
        assert entry["elapsed_ms"] == 12.3
        assert entry["seed"] == 7
        assert entry["status"] == "pass"
        assert "timestamp" in entry

    def test_one_line_per_result(self, _isolate_audit_logger):
        from core.run_audit import log_result

        for n in range(3):
            log_result("SYTodd", {"n": n}, True, 1.0)
        _flush()

        lines = _isolate_audit_logger.read_text(encoding="utf-8").strip().splitlines()
        assert [json.loads(line)["params"]["n"] for line in lines] == [0, 1, 2]

    def test_not_propagated_to_root(self, _isolate_audit_logger):
        """監査ログはルートロガー（stderr）に流れない"""
        assert logging.getLogger("verify_audit").propagate is False
