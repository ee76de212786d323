#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
検証スイートの pydantic スキーマ
================================
CLI 引数を正規化し、JSON 行の形を決めるスキーマ定義。
VerifyReport（verifiers/base.py の dataclass）はそのまま維持し、
入出力の境界でだけこの層を通す。

【パイプライン】
CLI 引数 / dict → SuiteConfig.model_validate() → レジストリ
VerifyReport.to_dict() → ReportLine → JSON 行
フォールバック: ValidationError → 呼び出し側で使用法エラー（終了コード 2）
"""

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.constants import (
    DEFAULT_DEGREE,
    DEFAULT_N_RANGE,
    DEFAULT_ORDER,
    DEFAULT_SEED,
    DEFAULT_W_RANGE,
)
from core.safe_parse import parse_half, parse_int_range, safe_int


# ====================================
# 実行設定
# ====================================
class SuiteConfig(BaseModel):
    """検証スイートの設定（CLI 引数から組み立てる）"""

    model_config = ConfigDict(extra="ignore", arbitrary_types_allowed=True)

    theorems: list[str] = Field(default_factory=lambda: ["all"])
    n_values: list[int] = Field(default_factory=lambda: parse_int_range(DEFAULT_N_RANGE))
    w_values: list[int] = Field(default_factory=lambda: parse_int_range(DEFAULT_W_RANGE))
    k_values: Optional[list[int]] = None
    c_values: Optional[list[Fraction]] = None   # Kratt の c。None なら 1/2..max(w)
    degree: int = Field(default=DEFAULT_DEGREE, ge=0)
    order: int = Field(default=DEFAULT_ORDER, ge=0)
    seed: int = DEFAULT_SEED
    jobs: int = Field(default=1, ge=1)
    output_format: Literal["json", "table"] = "json"
    timing: bool = False

    @field_validator("theorems", mode="before")
    @classmethod
    def split_theorems(cls, v):
        """"BK_odd1,G_odd_k" のようなカンマ区切りをリストにする"""
        if v is None:
            return ["all"]
        if isinstance(v, str):
            v = [v]
        names = []
        for item in v:
            names.extend(piece.strip() for piece in str(item).split(",") if piece.strip())
        return names or ["all"]

    @field_validator("n_values", "w_values", mode="before")
    @classmethod
    def coerce_range(cls, v):
        """'1..3' / '1,2' / 2 を整数リストにする"""
        values = parse_int_range(v)
        if any(x < 0 for x in values):
            raise ValueError(f"負の値は指定できません: {values}")
        return values

    @field_validator("k_values", mode="before")
    @classmethod
    def coerce_optional_range(cls, v):
        if v is None or (isinstance(v, str) and not v.strip()):
            return None
        values = parse_int_range(v)
        if any(x < 0 for x in values):
            raise ValueError(f"負の値は指定できません: {values}")
        return values

    @field_validator("c_values", mode="before")
    @classmethod
    def coerce_half_values(cls, v):
        """'1/2,3/2,2' を正の整数・半整数のリストにする"""
        if v is None or (isinstance(v, str) and not v.strip()):
            return None
        pieces = v.split(",") if isinstance(v, str) else list(v)
        values = sorted({parse_half(piece) for piece in pieces if str(piece).strip()})
        if not values:
            raise ValueError(f"c の値がありません: {v!r}")
        if values[0] <= 0:
            raise ValueError(f"c は正の値が必要です: {[str(c) for c in values]}")
        return values

    @field_validator("jobs", mode="before")
    @classmethod
    def coerce_jobs(cls, v):
        """環境変数由来の文字列も受け付ける。不正値は 1"""
        return safe_int(v, default=1, min_val=1)

    @property
    def runs_all(self) -> bool:
        return "all" in self.theorems


# ====================================
# 出力行
# ====================================
class ReportLine(BaseModel):
    """JSON 行 1 件分（VerifyReport.to_dict() の形）"""

    model_config = ConfigDict(extra="ignore")

    theorem: str
    params: dict = Field(default_factory=dict)
    equal: bool = False
    status: str = ""
    elapsed_ms: int = 0
    lhs_hash: str = ""
    rhs_hash: str = ""
    detail: str = ""
    seed: Optional[int] = None

    @field_validator("params", mode="before")
    @classmethod
    def coerce_params(cls, v):
        """params が dict でなければ空 dict"""
        return v if isinstance(v, dict) else {}


class SummaryLine(BaseModel):
    """最終行の集計"""

    model_config = ConfigDict(extra="ignore")

    summary: bool = True
    total: int = 0
    passed: int = 0
    failed: int = 0
    errors: int = 0
    unclaimed: int = 0
    seed: Optional[int] = None
    version: str = ""

    @property
    def all_passed(self) -> bool:
        return self.failed == 0 and self.errors == 0
