#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
定数定義モジュール
==================
バージョン情報、環境変数名、検証スイートの既定値を一元管理する。
"""

__version__ = "1.0"

# 環境変数（~/.env.local からも読み込まれる）
ENV_JOBS = "LL_LAB_JOBS"
ENV_LOG_DIR = "LL_LAB_LOG_DIR"

# 検証グリッドの既定値
DEFAULT_N_RANGE = "1..3"
DEFAULT_W_RANGE = "1..2"
DEFAULT_DEGREE = 8          # Λ の切り捨て次数
DEFAULT_ORDER = 8           # EGF の打ち切り次数
DEFAULT_SEED = 0
DEFAULT_TRIALS = 20         # 乱択検証の試行回数
ADJOINT_PAIRS = 50          # 随伴性チェックの組数
ADJOINT_DEGREE = 6

# 行列式のメモ化展開が現実的に回る上限
MAX_MATRIX_SIZE = 12

# 出力
REPORT_HASH_LENGTH = 16
