#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
有界 Littlewood 恒等式の検証ラボ - コアモジュール
================================================
"""

from .async_helpers import gather_in_pool, run_async
from .partitions import Partition, PartitionError
from .poly_ring import EGFSeries, MultiPoly
from .safe_parse import parse_int_range, safe_int
from .symfunc import f_series, schur_poly

__all__ = [
    "gather_in_pool",
    "run_async",
    "Partition",
    "PartitionError",
    "EGFSeries",
    "MultiPoly",
    "parse_int_range",
    "safe_int",
    "f_series",
    "schur_poly",
]
