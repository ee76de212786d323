#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
有界 Littlewood 恒等式の検証ラボ - 検証モジュール群
==================================================
"""

from .base import (
    CombinatorialId,
    MachineryCheck,
    PathEquation,
    TheoremId,
    VerifyReport,
    VerifyStatus,
)
from .identity_suite import verify_identity
from .registry import UsageError, VerifyTask, run_suite
from .tableau_walks import verify_combinatorial, verify_path_gf

__all__ = [
    "CombinatorialId",
    "MachineryCheck",
    "PathEquation",
    "TheoremId",
    "VerifyReport",
    "VerifyStatus",
    "verify_identity",
    "UsageError",
    "VerifyTask",
    "run_suite",
    "verify_combinatorial",
    "verify_path_gf",
]
