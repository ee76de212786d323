#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
検証モジュール基底クラス・データ型定義
======================================
"""

import hashlib
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from core.constants import REPORT_HASH_LENGTH
from core.poly_ring import MultiPoly


class VerifyStatus(Enum):
    """検証ステータス"""
    PASS = "pass"            # 両辺が一致
    FAIL = "fail"            # 両辺が不一致
    UNCLAIMED = "unclaimed"  # 主張の範囲外。計算して記録するが合否に数えない
    ERROR = "error"          # 計算中の例外


class TheoremId(Enum):
    """Schur 和 = 行列式 の恒等式"""
    BK_ODD1 = "BK_odd1"
    BK_EVEN1 = "BK_even1"
    G_ODD_K = "G_odd_k"
    G_EVEN_K = "G_even_k"
    RG_EVEN_PLUS = "RG_even_plus"
    RG_EVEN_MINUS = "RG_even_minus"
    RG_ODD_PLUS = "RG_odd_plus"
    RG_ODD_MINUS = "RG_odd_minus"
    RG2_ODD_SUM = "RG2_odd_sum"
    RG2_ODD_DIFF = "RG2_odd_diff"
    RG2_EVEN_SUM = "RG2_even_sum"
    RG2_EVEN_DIFF = "RG2_even_diff"
    BK2_ODD = "BK2_odd"
    BK2_EVEN = "BK2_even"
    G2_ODD = "G2_odd"
    G2_EVEN = "G2_even"
    POP_ODD_SUM = "POP_odd_sum"
    POP_ODD_DIFF = "POP_odd_diff"
    POP_EVEN_SUM = "POP_even_sum"
    POP_EVEN_DIFF = "POP_even_diff"

    @property
    def uses_k(self) -> bool:
        return self not in _K_FREE

    @property
    def is_u_identity(self) -> bool:
        return self in _U_IDENTITIES


_K_FREE = frozenset({
    TheoremId.BK_ODD1, TheoremId.BK_EVEN1, TheoremId.BK2_ODD, TheoremId.BK2_EVEN,
    TheoremId.RG_EVEN_PLUS, TheoremId.RG_EVEN_MINUS, TheoremId.RG_ODD_PLUS, TheoremId.RG_ODD_MINUS,
})
_U_IDENTITIES = frozenset({
    TheoremId.RG_EVEN_PLUS, TheoremId.RG_EVEN_MINUS, TheoremId.RG_ODD_PLUS, TheoremId.RG_ODD_MINUS,
})


class CombinatorialId(Enum):
    """上下盤・振動盤による解釈"""
    GOULDEN_MUD_EVEN = "GouldenMUDeven"
    GOULDEN_MUD_ODD = "GouldenMUDodd"
    UD_ODD1 = "UDodd1"
    UD_ODD2 = "UDodd2"
    UD_EVEN = "UDeven"
    UD_EVEN_PRIME = "UDevenPrime"
    UD_EVEN_H = "UDevenH"
    SYT_ODD = "SYTodd"
    SYT_EVEN = "SYTeven"
    ZEILBERGER = "Zeilberger"
    EU_ET_AL = "EuEtAl"
    MUDO_PLUS = "MUDo_plus"
    MUDO_MINUS = "MUDo_minus"
    MUDSTAR_HALF = "MUDstar_half"
    MUDLT_SIGNED = "MUDlt_signed"

    @property
    def counts_tableaux(self) -> bool:
        """両辺が整数（SYT の個数と歩道の個数）"""
        return self in (
            CombinatorialId.SYT_ODD, CombinatorialId.SYT_EVEN,
            CombinatorialId.ZEILBERGER, CombinatorialId.EU_ET_AL,
        )


class PathEquation(Enum):
    """格子路の母関数"""
    LEM0 = "UD-lem0"
    LEM2 = "UD-lem2"
    LEM1 = "UD-lem1"
    LEM3 = "UD-lem3"
    LEM4 = "UD-lem4"


class MachineryCheck(Enum):
    """恒等式の周辺の検証"""
    CONSISTENCY = "consistency"
    GORDON = "gordon"
    MINOR_SUMMATION = "minor_summation"
    AUX_LEMMAS = "aux_lemmas"
    MATRIX_PROPERTIES = "matrix_properties"
    SKEW_LEMMAS = "skew_lemmas"
    SYT_METHODS = "syt_methods"
    KRATT = "kratt"
    CHARACTER_BRIDGE = "character_bridge"
    SO_PROPERTIES = "so_properties"
    WALK_PROPERTIES = "walk_properties"


# ====================================
# 計測
# ====================================
class Stopwatch:
    """with 文で経過ミリ秒を測る"""

    def __init__(self):
        self._start = 0.0
        self.ms = 0.0

    def __enter__(self) -> "Stopwatch":
        self._start = time.monotonic()
        return self

    def __exit__(self, *exc) -> None:
        self.ms = (time.monotonic() - self._start) * 1000


def fingerprint(value: Any) -> str:
    """多項式・整数・その他の正規ハッシュ"""
    if isinstance(value, MultiPoly):
        return value.canonical_hash(REPORT_HASH_LENGTH)
    return hashlib.sha256(repr(value).encode("utf-8")).hexdigest()[:REPORT_HASH_LENGTH]


# ====================================
# VerifyReport
# ====================================
@dataclass
class VerifyReport:
    """
    検証 1 件の結果

    【フィールド説明】
    - theorem: 検証名（TheoremId などの値）
    - params: パラメータ（n, w, k など）
    - status: 検証ステータス
    - equal: 両辺が項ごとに一致したか（UNCLAIMED でも実際の比較結果）
    - lhs_hash / rhs_hash: 両辺の正規ハッシュ
    - elapsed_ms: 実測時間（stdout には --timing のときだけ出す）
    - detail: 不一致や例外の短い説明
    - seed: 乱択検証のシード
    """
    theorem: str
    params: dict[str, Any]
    status: VerifyStatus
    equal: bool = False
    lhs_hash: str = ""
    rhs_hash: str = ""
    elapsed_ms: float = 0.0
    detail: str = ""
    seed: Optional[int] = None

    @property
    def counts_as_failure(self) -> bool:
        return self.status in (VerifyStatus.FAIL, VerifyStatus.ERROR)

    @classmethod
    def create_comparison(
        cls,
        theorem: str,
        params: dict[str, Any],
        lhs: Any,
        rhs: Any,
        *,
        elapsed_ms: float = 0.0,
        seed: Optional[int] = None,
        claimed: bool = True,
        detail: str = "",
    ) -> "VerifyReport":
        """両辺を比べた結果を作成。claimed=False なら一致しても UNCLAIMED"""
        same = lhs == rhs
        if not claimed:
            status = VerifyStatus.UNCLAIMED
            detail = detail or ("範囲外（一致）" if same else "範囲外（不一致）")
        else:
            status = VerifyStatus.PASS if same else VerifyStatus.FAIL
            if not same and not detail and not isinstance(lhs, MultiPoly):
                detail = f"{lhs!r} != {rhs!r}"
        return cls(
            theorem=theorem,
            params=dict(params),
            status=status,
            equal=same,
            lhs_hash=fingerprint(lhs),
            rhs_hash=fingerprint(rhs),
            elapsed_ms=elapsed_ms,
            detail=detail,
            seed=seed,
        )

    @classmethod
    def create_check(
        cls,
        theorem: str,
        params: dict[str, Any],
        ok: bool,
        *,
        elapsed_ms: float = 0.0,
        seed: Optional[int] = None,
        detail: str = "",
    ) -> "VerifyReport":
        """真偽だけの検証（性質チェックなど）の結果を作成"""
        return cls(
            theorem=theorem,
            params=dict(params),
            status=VerifyStatus.PASS if ok else VerifyStatus.FAIL,
            equal=ok,
            elapsed_ms=elapsed_ms,
            detail=detail,
            seed=seed,
        )

    @classmethod
    def create_error(
        cls,
        theorem: str,
        params: dict[str, Any],
        error_message: str = "",
        seed: Optional[int] = None,
    ) -> "VerifyReport":
        """エラー結果を作成"""
        return cls(
            theorem=theorem,
            params=dict(params),
            status=VerifyStatus.ERROR,
            detail=f"エラー: {error_message}",
            seed=seed,
        )

    def to_dict(self, include_timing: bool = False) -> dict:
        """辞書形式に変換。elapsed_ms は整数ミリ秒（include_timing=False なら 0）"""
        return {
            "theorem": self.theorem,
            "params": self.params,
            "equal": self.equal,
            "status": self.status.value,
            "elapsed_ms": int(round(self.elapsed_ms)) if include_timing else 0,
            "lhs_hash": self.lhs_hash,
            "rhs_hash": self.rhs_hash,
            "detail": self.detail,
            "seed": self.seed,
        }


def resolve_check_name(name: str) -> Enum:
    """
    CLI の検証名を列挙子に変換する。

    Raises:
        ValueError: どの列挙にもない名前
    """
    for enum_cls in (TheoremId, CombinatorialId, PathEquation, MachineryCheck):
        try:
            return enum_cls(name)
        except ValueError:
            continue
    raise ValueError(f"未知の検証名です: {name!r}")


def all_check_names() -> list[str]:
    return [
        member.value
        for enum_cls in (TheoremId, CombinatorialId, PathEquation, MachineryCheck)
        for member in enum_cls
    ]
