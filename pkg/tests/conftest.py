#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
pytest共通フィクスチャ
"""

import logging
import os
import sys
from pathlib import Path

import pytest

# プロジェクトルートをパスに追加
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.constants import ENV_LOG_DIR  # noqa: E402
from core.partitions import Partition  # noqa: E402
from core.poly_ring import MultiPoly  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def isolated_log_dir(tmp_path_factory):
    """ログと監査ログの出力先をテスト用の一時ディレクトリにする"""
    log_dir = tmp_path_factory.mktemp("logs")
    previous = os.environ.get(ENV_LOG_DIR)
    os.environ[ENV_LOG_DIR] = str(log_dir)
    yield log_dir
    if previous is None:
        os.environ.pop(ENV_LOG_DIR, None)
    else:
        os.environ[ENV_LOG_DIR] = previous


@pytest.fixture(autouse=True)
def isolated_root_logger():
    """テスト間でルートロガーのハンドラと設定済みフラグが漏れないようにする"""
    import core.logger as logger_mod
    root = logging.getLogger()
    saved_handlers, saved_level = root.handlers[:], root.level
    saved_flag = logger_mod._logging_configured
    yield
    for handler in root.handlers:
        if handler not in saved_handlers:
            handler.close()
    root.handlers[:] = saved_handlers
    root.setLevel(saved_level)
    logger_mod._logging_configured = saved_flag


@pytest.fixture
def empty():
    """空の分割 ∅"""
    return Partition.empty()


@pytest.fixture
def x():
    """x(i, n) で n 変数の x_i を返す"""
    def _make(i: int, n: int, *, laurent: bool = False) -> MultiPoly:
        return MultiPoly.variable(i, n, laurent=laurent)
    return _make
