#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
偶数次直交群の指標（Laurent 多項式）
====================================
ほぼ長方形の最高ウェイトを持つ so_{2n} 指標を Laurent 行列式で組み立てる。

【記号】
- o_λ  = sorth_λ + sorth_{λ#}（λ_n ≠ 0 のとき）、それ以外は sorth_λ
- ō_λ  = sorth_λ − sorth_{λ#}（λ_n ≠ 0 のとき）、それ以外は 0
- λ# は最後の成分の符号を反転したウェイト
- shift_half=True は λ + (½,…,½) を表す

半整数の指数は poly_ring の Laurent モード（指数を 2 倍で保持）で表す。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from core.partitions import Partition, conjugate
from core.poly_ring import MultiPoly, as_poly, poly_sum
from core.ring_matrix import determinant

logger = logging.getLogger(__name__)


class CharacterKind(Enum):
    """組み立てる指標の種類"""
    O_PLUS = "o_plus"
    O_BAR = "o_bar"
    SORTH = "sorth"


# ====================================
# 最高ウェイト
# ====================================
@dataclass(frozen=True)
class HighestWeight:
    """
    λ₁ ≥ … ≥ λ_{n−1} ≥ |λ_n| を満たす整数列または半整数列。
    """
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(e) for e in self.entries)
        object.__setattr__(self, "entries", values)
        if not values:
            raise ValueError("最高ウェイトは 1 成分以上が必要です")
        halves = {v.denominator for v in values}
        if not (halves == {1} or halves == {2}):
            raise ValueError(f"整数と半整数が混在しています: {[str(v) for v in values]}")
        body = list(values[:-1]) + [abs(values[-1])]
        if any(a < b for a, b in zip(body, body[1:])):
            raise ValueError(f"λ₁ ≥ … ≥ λ_(n−1) ≥ |λ_n| を満たしません: {[str(v) for v in values]}")

    @classmethod
    def of(cls, *entries) -> "HighestWeight":
        return cls(tuple(Fraction(e) for e in entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_half(self) -> bool:
        return self.entries[0].denominator == 2

    @property
    def last_sign(self) -> int:
        last = self.entries[-1]
        return (last > 0) - (last < 0)

    def sharp(self) -> "HighestWeight":
        """λ#: 最後の成分の符号を反転"""
        return HighestWeight(self.entries[:-1] + (-self.entries[-1],))

    def base_partition(self) -> Partition:
        """
        |λ_n| に置き換え、半整数なら ½ を引いた分割 μ。
        λ = μ（整数）または λ = μ + ½（半整数）。
        """
        shift = Fraction(1, 2) if self.is_half else Fraction(0)
        values = list(self.entries[:-1]) + [abs(self.entries[-1])]
        return Partition.of(*(int(v - shift) for v in values))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.entries) + ")"


# ====================================
# Laurent 基本対称式
# ====================================
@lru_cache(maxsize=512)
def laurent_elementary(r: int, n: int) -> MultiPoly:
    """
    e_r(x₁^{±1}, …, x_n^{±1})。0 ≤ r ≤ 2n の外では 0。

    Examples:
        e_1(x₁^{±1}) = x₁ + x₁⁻¹、e_2(x₁^{±1}) = 1
    """
    if n < 1:
        raise ValueError(f"変数の数は 1 以上: {n}")
    if r < 0 or r > 2 * n:
        return MultiPoly.zero(n, laurent=True)
    letters = [(i, s) for i in range(n) for s in (1, -1)]
    terms: dict[tuple[int, ...], int] = {}
    for chosen in combinations(letters, r):
        exps = [0] * n
        for i, s in chosen:
            exps[i] += 2 * s
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(n, terms, laurent=True)


def half_factor(n: int, sign: int) -> MultiPoly:
    """∏(x_i^{1/2} ± x_i^{−1/2})"""
    result = MultiPoly.constant(1, n, laurent=True)
    for i in range(n):
        plus = [0] * n
        minus = [0] * n
        plus[i] = Fraction(1, 2)
        minus[i] = Fraction(-1, 2)
        result = result * (
            MultiPoly.monomial(plus, n, laurent=True)
            + MultiPoly.monomial(minus, n, laurent=True) * sign
        )
    return result


def _inverse_factor(n: int) -> MultiPoly:
    """∏(x_i − x_i^{−1})"""
    result = MultiPoly.constant(1, n, laurent=True)
    for i in range(n):
        plus = [0] * n
        minus = [0] * n
        plus[i] = 1
        minus[i] = -1
        result = result * (
            MultiPoly.monomial(plus, n, laurent=True) - MultiPoly.monomial(minus, n, laurent=True)
        )
    return result


def _laurent_det(lam: Partition, n: int, entry) -> MultiPoly:
    """λ₁ 次の行列式 det(entry(λ′_i, i, j))（1 始まり）"""
    conj = conjugate(lam).padded(lam.width)
    size = lam.width
    rows = [
        [entry(conj[i - 1], i, j) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return as_poly(determinant(rows), n, laurent=True)


# ====================================
# o と ō
# ====================================
@lru_cache(maxsize=512)
def _o_plus(lam: Partition, n: int, shift_half: bool) -> MultiPoly:
    e = laurent_elementary
    if shift_half:
        det = _laurent_det(lam, n, lambda c, i, j: e(c - i + j, n) - e(c - i - j + 1, n))
        return half_factor(n, +1) * det
    if not lam.parts:
        return MultiPoly.constant(1, n, laurent=True)
    det = _laurent_det(lam, n, lambda c, i, j: e(c - i + j, n) + e(c - i - j + 2, n))
    return det.exact_div(2)


@lru_cache(maxsize=512)
def _o_bar(lam: Partition, n: int, shift_half: bool) -> MultiPoly:
    e = laurent_elementary
    if shift_half:
        det = _laurent_det(lam, n, lambda c, i, j: e(c - i + j, n) + e(c - i - j + 1, n))
        return half_factor(n, -1) * det
    if lam.length < n:
        return MultiPoly.zero(n, laurent=True)
    # 2 ≤ i, j ≤ λ₁ の小行列（λ − (1ⁿ) の斜交 Jacobi–Trudi 行列式）
    conj = conjugate(lam).padded(lam.width)
    size = lam.width - 1
    rows = [
        [e(conj[i - 1] - i + j, n) - e(conj[i - 1] - i - j + 2, n) for j in range(2, size + 2)]
        for i in range(2, size + 2)
    ]
    return _inverse_factor(n) * as_poly(determinant(rows), n, laurent=True)


def orthogonal_character(
    lam: Partition,
    n: int,
    shift_half: bool = False,
    kind: CharacterKind | str = CharacterKind.SORTH,
) -> MultiPoly:
    """
    o_λ / ō_λ / sorth_λ（shift_half なら λ + ½）を Laurent 多項式で返す。

    sorth は λ_n = 0 なら o_λ、それ以外は (o_λ + ō_λ)/2。
    割り算は係数が偶数であることを確かめてから行う。

    Raises:
        ValueError: ℓ(λ) > n の場合
    """
    kind = CharacterKind(kind)
    if lam.length > n:
        raise ValueError(f"ℓ(λ)={lam.length} は n={n} 以下である必要があります")
    if kind is CharacterKind.O_PLUS:
        return _o_plus(lam, n, shift_half)
    if kind is CharacterKind.O_BAR:
        return _o_bar(lam, n, shift_half)
    if not shift_half and lam.length < n:
        return _o_plus(lam, n, False)
    return (_o_plus(lam, n, shift_half) + _o_bar(lam, n, shift_half)).exact_div(2)


def character_of_weight(weight: HighestWeight) -> MultiPoly:
    """
    符号付きの最高ウェイトに対する sorth。

    最後の成分が負なら (o_μ − ō_μ)/2 を使う。
    """
    lam = weight.base_partition()
    n = weight.n
    if weight.last_sign >= 0:
        return orthogonal_character(lam, n, weight.is_half, CharacterKind.SORTH)
    return (_o_plus(lam, n, weight.is_half) - _o_bar(lam, n, weight.is_half)).exact_div(2)


def nearly_rectangular_weight(c: Fraction, k: int, n: int) -> HighestWeight:
    """(c^{n−1}, c−k)"""
    c = Fraction(c)
    return HighestWeight(tuple([c] * (n - 1) + [c - k]))


def variable_product_power(n: int, power: Fraction) -> MultiPoly:
    """(x₁⋯x_n)^power（Laurent モード）"""
    return MultiPoly.monomial([Fraction(power)] * n, n, laurent=True)


def sum_of(values: Sequence[MultiPoly], n: int) -> MultiPoly:
    return poly_sum(values, n, laurent=True)
