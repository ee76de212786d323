#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
次数切り捨ての対称関数環 Λ_D
============================
Schur 基底で展開した元（SchurExpansion）と、その上の
Pieri 積・一般の積・歪作用素 p₁⊥・Hall 内積を扱う。

f の閉じた形とは独立に、Λ の中で歪作用素の補題を確かめるための層。

【表現】
- 係数は分割 → 整数の写像、|λ| ≤ D の項だけ保持する
- e_k と h_k は Pieri 積を通じてのみ現れる（e_k = s_{(1^k)}）
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from core.partitions import (
    Partition,
    add_vertical_strips,
    column_partition,
    conjugate,
    one_cell_neighbors,
)
from core.poly_ring import MultiPoly, poly_sum
from core.symfunc import schur_poly

logger = logging.getLogger(__name__)


class TruncationMismatchError(ValueError):
    """切り捨て次数 D が一致しない"""


# ====================================
# SchurExpansion
# ====================================
@dataclass(frozen=True)
class SchurExpansion:
    """Λ_D の元 Σ a_λ s_λ"""
    degree: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"切り捨て次数は 0 以上: {self.degree}")
        cleaned = {
            lam: c for lam, c in dict(self.coeffs).items()
            if c and lam.size <= self.degree
        }
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def zero(cls, degree: int) -> "SchurExpansion":
        return cls(degree, {})

    def _check(self, other: "SchurExpansion") -> None:
        if not isinstance(other, SchurExpansion):
            raise TypeError(f"SchurExpansion 以外とは演算できません: {type(other).__name__}")
        if other.degree != self.degree:
            raise TruncationMismatchError(f"切り捨て次数が一致しません: {self.degree} と {other.degree}")

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(self.degree, out)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + other.scale(-1)

    def __neg__(self) -> "SchurExpansion":
        return self.scale(-1)

    def scale(self, k: int) -> "SchurExpansion":
        return SchurExpansion(self.degree, {lam: c * k for lam, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def truncate(self, degree: int) -> "SchurExpansion":
        """より低い次数へ切り捨てる"""
        if degree > self.degree:
            raise TruncationMismatchError(f"次数 {self.degree} を {degree} に伸ばすことはできません")
        return SchurExpansion(degree, self.coeffs)

    def homogeneous(self, size: int) -> "SchurExpansion":
        return SchurExpansion(self.degree, {lam: c for lam, c in self.coeffs.items() if lam.size == size})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        ordered = sorted(self.coeffs.items(), key=lambda item: item[0].sort_key)
        return " + ".join(f"{c}*s{lam}" for lam, c in ordered)


def schur(lam: Partition, degree: int) -> SchurExpansion:
    """s_λ"""
    return SchurExpansion(degree, {lam: 1})


def one(degree: int) -> SchurExpansion:
    return schur(Partition.empty(), degree)


# ====================================
# Pieri 積と一般の積
# ====================================
@lru_cache(maxsize=8192)
def _vertical_strip_extensions(lam: Partition, k: int) -> tuple[Partition, ...]:
    """λ に縦 k-帯を足した分割"""
    return tuple(
        mu for mu in add_vertical_strips(lam, lam.length + k)
        if mu.size == lam.size + k
    )


def pieri_mul_e(a: SchurExpansion, k: int) -> SchurExpansion:
    """
    a·e_k を Schur 基底で展開する（次数 D で切り捨て）。

    Examples:
        s_∅·e_2 = s_{(1,1)}、s_{(1)}·e_1 = s_{(2)} + s_{(1,1)}
    """
    if k < 0:
        raise ValueError(f"k は 0 以上: {k}")
    out: dict[Partition, int] = {}
    for lam, c in a.coeffs.items():
        if lam.size + k > a.degree:
            continue
        for mu in _vertical_strip_extensions(lam, k):
            out[mu] = out.get(mu, 0) + c
    return SchurExpansion(a.degree, out)


def elementary(k: int, degree: int) -> SchurExpansion:
    """e_k = s_{(1^k)}（k < 0 なら 0）"""
    if k < 0:
        return SchurExpansion.zero(degree)
    return schur(column_partition(k), degree)


def to_elementary_basis(b: SchurExpansion) -> dict[tuple[int, ...], int]:
    """
    b を e の単項式 e_{ν₁}e_{ν₂}⋯ の一次結合に書き直す。

    e_{μ′} = s_μ + (支配順序で小さい s) なので、
    辞書式で最大の項から順に剥がしていけば有限回で終わる。
    """
    remaining = dict(b.coeffs)
    result: dict[tuple[int, ...], int] = {}
    while remaining:
        lead = max(remaining, key=lambda lam: lam.sort_key)
        c = remaining[lead]
        index = conjugate(lead).parts
        result[index] = result.get(index, 0) + c
        expansion = _e_product(index, b.degree)
        for lam, d in expansion.coeffs.items():
            value = remaining.get(lam, 0) - c * d
            if value:
                remaining[lam] = value
            else:
                remaining.pop(lam, None)
    return result


@lru_cache(maxsize=4096)
def _e_product(index: tuple[int, ...], degree: int) -> SchurExpansion:
    """e_{ν₁}e_{ν₂}⋯ を Pieri の連鎖で展開する"""
    value = one(degree)
    for k in index:
        value = pieri_mul_e(value, k)
    return value


def multiply(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    """Λ_D の一般の積（右因子を e 基底に直して Pieri で掛ける）"""
    total = SchurExpansion.zero(a.degree)
    for index, c in to_elementary_basis(b).items():
        value = a
        for k in index:
            value = pieri_mul_e(value, k)
        total = total + value.scale(c)
    return total


# ====================================
# 歪作用素と内積
# ====================================
def p1_perp(a: SchurExpansion) -> SchurExpansion:
    """p₁⊥: 各 s_λ を角のマスを 1 つ除いた s_μ の和に移す"""
    out: dict[Partition, int] = {}
    for lam, c in a.coeffs.items():
        for step, mu in one_cell_neighbors(lam, lam.length):
            if step.sign < 0:
                out[mu] = out.get(mu, 0) + c
    return SchurExpansion(a.degree, out)


def p1_perp_power(a: SchurExpansion, j: int) -> SchurExpansion:
    for _ in range(j):
        a = p1_perp(a)
    return a


def hall_inner(a: SchurExpansion, b: SchurExpansion) -> int:
    """⟨a, b⟩ = Σ a_λ b_λ（Schur 基底は正規直交）"""
    if a.degree != b.degree:
        raise TruncationMismatchError(f"切り捨て次数が一致しません: {a.degree} と {b.degree}")
    return sum(c * b.coeffs.get(lam, 0) for lam, c in a.coeffs.items())


@lru_cache(maxsize=256)
def f_series_schur(i: int, degree: int) -> SchurExpansion:
    """f_i = Σ_m e_m·e_{m+|i|} を Schur 基底で（2m+|i| ≤ D の項だけ）"""
    i = abs(i)
    total = SchurExpansion.zero(degree)
    m = 0
    while 2 * m + i <= degree:
        total = total + pieri_mul_e(elementary(m, degree), m + i)
        m += 1
    return total


def fcomb_to_schur(terms: Mapping[int, int], degree: int) -> SchurExpansion:
    """Σ c_r f_r を Λ_D の元にする"""
    total = SchurExpansion.zero(degree)
    for r, c in terms.items():
        total = total + f_series_schur(r, degree).scale(c)
    return total


def specialize(a: SchurExpansion, n: int) -> MultiPoly:
    """Σ a_λ s_λ(x₁..x_n)"""
    return poly_sum((schur_poly(lam, n) * c for lam, c in a.coeffs.items()), n)
