#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
安全な値変換ユーティリティ
==========================
環境変数や CLI 引数の文字列を整数・範囲・半整数に変換する。

- safe_int: 任意の値。変換できなければ既定値（クラッシュしない）
- parse_int_range / parse_half: 必須の引数。不正なら ValueError
"""

import logging
import re
from fractions import Fraction
from typing import Optional


logger = logging.getLogger(__name__)

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.|-|:)\s*(-?\d+)\s*$")


def safe_int(
    value,
    default: int = 0,
    min_val: Optional[int] = None,
    max_val: Optional[int] = None,
) -> int:
    """
    安全に int に変換する。

    Args:
        value: 変換対象の値
        default: 変換失敗時のデフォルト値
        min_val: 最小値（None でクランプなし）
        max_val: 最大値（None でクランプなし）

    Examples:
        >>> safe_int("4")
        4
        >>> safe_int(None, default=1)
        1
        >>> safe_int("many", default=2)
        2
        >>> safe_int("64", max_val=16)
        16
    """
    if value is None or (isinstance(value, str) and not value.strip()):
        return default

    try:
        result = int(float(value))  # "3.0" も受け付ける
    except (ValueError, TypeError, OverflowError):
        logger.debug("safe_int: 数値変換失敗 value=%r, default=%s を使用", value, default)
        return default

    if min_val is not None:
        result = max(min_val, result)
    if max_val is not None:
        result = min(max_val, result)

    return result


def parse_int_range(text) -> list[int]:
    """
    "1..3" / "1-3" / "1,2,4" / "2" を昇順の整数リストにする。

    Raises:
        ValueError: 解釈できない場合、または範囲が空の場合

    Examples:
        >>> parse_int_range("1..3")
        [1, 2, 3]
        >>> parse_int_range("0,2")
        [0, 2]
    """
    if isinstance(text, int):
        return [text]
    if isinstance(text, (list, tuple)):
        return sorted({int(v) for v in text})
    if text is None or not str(text).strip():
        raise ValueError("範囲が指定されていません")
    raw = str(text).strip()
    match = _RANGE_RE.match(raw)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low > high:
            raise ValueError(f"範囲の下限が上限より大きい: {raw}")
        return list(range(low, high + 1))
    try:
        values = sorted({int(piece) for piece in raw.split(",") if piece.strip()})
    except ValueError as exc:
        raise ValueError(f"整数の範囲として解釈できません: {raw!r}") from exc
    if not values:
        raise ValueError(f"整数の範囲として解釈できません: {raw!r}")
    return values


def parse_half(text) -> Fraction:
    """
    "3/2" / "1.5" / "2" を整数または半整数の Fraction にする。

    Raises:
        ValueError: 半整数でない場合
    """
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"数として解釈できません: {text!r}") from exc
    if value.denominator not in (1, 2):
        raise ValueError(f"整数か半整数を指定してください: {text!r}")
    return value
