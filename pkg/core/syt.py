#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
標準 Young 盤の数え上げ
=======================
幅と奇数長の行・列の統計で絞った SYT の個数を、
総当たり・フック長の和・θ 写像による EGF 行列式・明示公式の 4 通りで求める。

【θ 写像】
θ(p₁) = x で定まる環準同型。θ(e_n) = x^n/n!、θ(f_n) = I_{|n|}(2x)、
θ(s_λ) = f^λ x^{|λ|}/|λ|!。θ∘p₁⊥ = d/dx。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Optional, Union

from core.lambda_ring import SchurExpansion
from core.partitions import Partition, hook_count, odd_counts, partitions_of
from core.poly_ring import EGFSeries
from core.ring_matrix import determinant
from core.symfunc import FComb

logger = logging.getLogger(__name__)

HalfInt = Union[int, Fraction]


class CountMethod(Enum):
    BRUTEFORCE = "bruteforce"
    HOOKSUM = "hooksum"


class KloVariant(Enum):
    """明示公式の種類"""
    KLO_ODD = "klo_odd"      # 幅 2w+1
    KLO_EVEN = "klo_even"    # 幅 2w
    REF_ODD = "ref_odd"      # 幅 2w+1、奇数長の行が k 本
    REF_EVEN = "ref_even"    # 幅 2w、奇数長の行が k 本


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"


# ====================================
# クエリ
# ====================================
@dataclass(frozen=True)
class SytQuery:
    """
    サイズ n、幅（列数）w 以下の SYT を数える問い合わせ。

    odd_columns / odd_rows を指定すると、その統計がちょうど k の形だけに絞る。
    """
    n: int
    w: int
    odd_columns: Optional[int] = None
    odd_rows: Optional[int] = None

    def __post_init__(self):
        if self.n < 0 or self.w < 0:
            raise ValueError(f"n と w は 0 以上: n={self.n}, w={self.w}")
        if self.odd_columns is not None and self.odd_rows is not None:
            raise ValueError("odd_columns と odd_rows は同時に指定できません")

    def accepts(self, shape: Partition) -> bool:
        if shape.width > self.w:
            return False
        counts = odd_counts(shape)
        if self.odd_columns is not None and counts.c != self.odd_columns:
            return False
        if self.odd_rows is not None and counts.r != self.odd_rows:
            return False
        return True


def _standard_tableaux(n: int, width: int) -> Iterator[Partition]:
    """1..n を順に置いて幅 width 以下の SYT を作り、その形を 1 つずつ返す"""
    rows: list[int] = []

    def _rec(placed: int):
        if placed == n:
            yield Partition(tuple(rows))
            return
        for i in range(len(rows) + 1):
            current = rows[i] if i < len(rows) else 0
            if current + 1 > width:
                continue
            if i > 0 and rows[i - 1] <= current:
                continue
            if i == len(rows):
                rows.append(1)
            else:
                rows[i] += 1
            yield from _rec(placed + 1)
            if rows[i] == 1 and i == len(rows) - 1:
                rows.pop()
            else:
                rows[i] -= 1

    yield from _rec(0)


def syt_count(q: SytQuery, method: CountMethod | str = CountMethod.BRUTEFORCE) -> int:
    """
    条件を満たす SYT の個数。

    Examples:
        >>> syt_count(SytQuery(n=3, w=3))
        4
        >>> syt_count(SytQuery(n=4, w=2, odd_columns=0))
        3
        >>> syt_count(SytQuery(n=4, w=2, odd_rows=0))
        2
    """
    method = CountMethod(method)
    if method is CountMethod.BRUTEFORCE:
        return sum(1 for shape in _standard_tableaux(q.n, q.w) if q.accepts(shape))
    return sum(hook_count(shape) for shape in partitions_of(q.n, q.w) if q.accepts(shape))


# ====================================
# 組合せ的スカラー
# ====================================
def _doubled(value: HalfInt) -> Optional[int]:
    scaled = Fraction(value) * 2
    return int(scaled) if scaled.denominator == 1 else None


def binomial(r: int, s: int) -> int:
    """C(r, s)。s < 0 や s > r なら 0"""
    if s < 0 or r < 0 or s > r:
        return 0
    return comb(r, s)


def catalan(q: HalfInt) -> int:
    """Cat(q)。q が非負整数でなければ 0"""
    doubled = _doubled(q)
    if doubled is None or doubled < 0 or doubled % 2:
        return 0
    m = doubled // 2
    return comb(2 * m, m) // (m + 1)


def ballot_f(r: int, s: HalfInt) -> int:
    """F(r, s) = C(r, s) − C(r, s−1)。s が奇数の半分なら 0"""
    doubled = _doubled(s)
    if doubled is None or doubled % 2:
        return 0
    s_int = doubled // 2
    return binomial(r, s_int) - binomial(r, s_int - 1)


def central_binom(r: int) -> int:
    """C(r, ⌊r/2⌋)"""
    return binomial(r, r // 2) if r >= 0 else 0


def combinatorial_scalars(kind: str, *args) -> int:
    """kind ∈ {catalan, central_binom, ballot_F} の振り分け"""
    if kind == "catalan":
        return catalan(*args)
    if kind == "central_binom":
        return central_binom(*args)
    if kind == "ballot_F":
        return ballot_f(*args)
    raise ValueError(f"未知のスカラー種別です: {kind}")


def multinomial(parts: tuple[int, ...]) -> int:
    total = factorial(sum(parts))
    for p in parts:
        total //= factorial(p)
    return total


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """非負整数への弱合成を辞書式で列挙する"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# ====================================
# θ 写像
# ====================================
def theta_elementary(k: int, order: int) -> EGFSeries:
    """θ(e_k) = x^k/k!"""
    if k < 0:
        return EGFSeries(order)
    return EGFSeries.monomial(k, Fraction(1, factorial(k)), order)


@lru_cache(maxsize=256)
def theta_f(r: int, order: int) -> EGFSeries:
    """θ(f_r) = I_{|r|}(2x) = Σ_m C(2m+|r|, m) x^{2m+|r|}/(2m+|r|)!"""
    r = abs(r)
    coeffs = [Fraction(0)] * (order + 1)
    m = 0
    while 2 * m + r <= order:
        k = 2 * m + r
        coeffs[k] = Fraction(comb(k, m), factorial(k))
        m += 1
    return EGFSeries(order, coeffs)


def theta_map(value: Union[int, FComb, SchurExpansion], order: int, *, elementary: bool = False) -> EGFSeries:
    """
    θ の像を order で打ち切って返す。

    Args:
        value: int（elementary=True なら e の添字、それ以外は f の添字）、FComb、SchurExpansion
        order: 打ち切り次数
    """
    if isinstance(value, int):
        return theta_elementary(value, order) if elementary else theta_f(value, order)
    if isinstance(value, FComb):
        total = EGFSeries(order)
        for r, c in value.terms.items():
            total = total + theta_f(r, order) * c
        return total
    if isinstance(value, SchurExpansion):
        coeffs = [Fraction(0)] * (order + 1)
        for lam, c in value.coeffs.items():
            if lam.size <= order:
                coeffs[lam.size] += Fraction(c * hook_count(lam), factorial(lam.size))
        return EGFSeries(order, coeffs)
    raise TypeError(f"θ を適用できない型です: {type(value).__name__}")


def gessel_series(w: int, parity: Parity | str, order: int) -> list[int]:
    """
    n!·[x^n] の列（n = 0..order）。

    odd:  exp(x)·det_w(I_{i−j} − I_{i+j})   → |SYT_{n,2w+1}|
    even: det_w(I_{i−j} + I_{i+j−1})        → |SYT_{n,2w}|
    """
    parity = Parity(parity)
    if parity is Parity.ODD:
        rows = [[theta_f(i - j, order) - theta_f(i + j, order) for j in range(1, w + 1)]
                for i in range(1, w + 1)]
    else:
        rows = [[theta_f(i - j, order) + theta_f(i + j - 1, order) for j in range(1, w + 1)]
                for i in range(1, w + 1)]
    det = determinant(rows)
    series = det if isinstance(det, EGFSeries) else EGFSeries.one(order) * det
    if parity is Parity.ODD:
        series = EGFSeries.exp(order) * series
    return series.egf_counts()


# ====================================
# 明示公式
# ====================================
def klo_count(variant: KloVariant | str, n: int, w: int, k: Optional[int] = None) -> int:
    """
    弱合成にわたる多項係数 × 行列式の和で SYT を数える。

    klo_odd:  Σ_{t₀+…+t_w=n} C(n; t)·det(Cat((t_i+2w−i−j)/2))
    klo_even: Σ_{t₁+…+t_w=n} C(n; t)·det(C(t_i+2w−i−j, ⌊(t_i+2w−i−j)/2⌋))
    ref_odd:  Σ_{t₁+…+t_w=n−k} C(n; k, t)·det(Cat((t_i+i+j−2)/2))
    ref_even: Σ_{t₁+…+t_w=n} C(n; t)·det(F(t_i+j−1, (t_i−i−kδ_{i,w}+j)/2))
    """
    variant = KloVariant(variant)
    if variant in (KloVariant.KLO_ODD, KloVariant.KLO_EVEN) and w < 1:
        raise ValueError(f"{variant.value} は w ≥ 1 が必要です: w={w}")
    if variant in (KloVariant.REF_ODD, KloVariant.REF_EVEN) and k is None:
        raise ValueError(f"{variant.value} には k が必要です")

    if variant is KloVariant.KLO_ODD:
        total = 0
        for t in compositions(n, w + 1):
            rows = [[catalan(Fraction(t[i] + 2 * w - i - j, 2)) for j in range(1, w + 1)]
                    for i in range(1, w + 1)]
            total += multinomial(t) * determinant(rows)
        return total

    if variant is KloVariant.KLO_EVEN:
        total = 0
        for t in compositions(n, w):
            rows = [[central_binom(t[i - 1] + 2 * w - i - j) for j in range(1, w + 1)]
                    for i in range(1, w + 1)]
            total += multinomial(t) * determinant(rows)
        return total

    if variant is KloVariant.REF_ODD:
        if k < 0 or k > n:
            return 0
        total = 0
        for t in compositions(n - k, w):
            rows = [[catalan(Fraction(t[i - 1] + i + j - 2, 2)) for j in range(1, w + 1)]
                    for i in range(1, w + 1)]
            total += multinomial((k,) + t) * determinant(rows)
        return total

    # REF_EVEN
    if w == 0:
        return 1 if n == 0 and k == 0 else 0
    total = 0
    for t in compositions(n, w):
        rows = [[ballot_f(t[i - 1] + j - 1,
                          Fraction(t[i - 1] - i - (k if i == w else 0) + j, 2))
                 for j in range(1, w + 1)]
                for i in range(1, w + 1)]
        total += multinomial(t) * determinant(rows)
    return total
