#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
分割（partition）の基本操作
============================
Young 図形で表される分割と、その統計量・列挙・形状判定をまとめる。
他のすべてのモジュールがここを土台にする。

【使い方】
    from core.partitions import Partition, conjugate, enumerate_partitions
    lam = Partition.of(3, 2, 2)
    conjugate(lam)            # Partition(parts=(3, 3, 1))
    odd_counts(lam)           # OddCounts(r=1, c=3)
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple, Optional

logger = logging.getLogger(__name__)


class PartitionError(ValueError):
    """不正な分割が与えられた"""


# ====================================
# 型
# ====================================
@dataclass(frozen=True)
class Partition:
    """
    弱減少な正整数列。正規形では末尾の 0 を持たない。

    Partition.of() は末尾 0 を取り除いてから生成する。
    直接コンストラクタを呼ぶ場合は正規形でなければ PartitionError。
    """
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if not isinstance(part, int) or part < 1:
                raise PartitionError(f"分割の成分は正整数である必要があります: {parts}")
            if i and parts[i - 1] < part:
                raise PartitionError(f"分割は弱減少である必要があります: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """末尾の 0 を除いて生成する。Partition.of(2, 1, 0) == Partition.of(2, 1)"""
        trimmed = list(parts)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(tuple(trimmed))

    @classmethod
    def empty(cls) -> "Partition":
        return cls(())

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """0 始まりの i 行目の長さ（範囲外は 0）"""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def padded(self, m: int) -> tuple[int, ...]:
        """長さ m まで 0 で埋めた成分列"""
        if self.length > m:
            raise PartitionError(f"長さ {self.length} の分割は {m} 成分に収まりません")
        return self.parts + (0,) * (m - self.length)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """サイズ優先、同サイズでは辞書式"""
        return (self.size, self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class OddCounts(NamedTuple):
    """奇数長の行数 r と列数 c"""
    r: int
    c: int


# ====================================
# 統計量
# ====================================
def conjugate(p: Partition) -> Partition:
    """共役（転置）分割 λ′ を返す"""
    if not p.parts:
        return p
    return Partition(tuple(
        sum(1 for part in p.parts if part >= j) for j in range(1, p.width + 1)
    ))


def odd_counts(p: Partition) -> OddCounts:
    """奇数長の行・列の数"""
    r = sum(1 for part in p.parts if part % 2)
    c = sum(1 for part in conjugate(p).parts if part % 2)
    return OddCounts(r=r, c=c)


def contains(inner: Partition, outer: Partition) -> bool:
    """inner ⊆ outer（Young 図形の包含）"""
    if inner.length > outer.length:
        return False
    return all(inner.parts[i] <= outer.parts[i] for i in range(inner.length))


def is_vertical_strip(inner: Partition, outer: Partition) -> bool:
    """outer/inner が各行高々 1 マスの縦帯かどうか"""
    if not contains(inner, outer):
        return False
    return all(outer.part(i) - inner.part(i) <= 1 for i in range(outer.length))


def skew_odd_columns(outer: Partition, inner: Partition) -> int:
    """歪形 outer/inner の奇数長の列の数"""
    if not contains(inner, outer):
        raise PartitionError(f"{inner} は {outer} に含まれていません")
    outer_c = conjugate(outer)
    inner_c = conjugate(inner)
    return sum(
        1 for j in range(outer.width)
        if (outer_c.part(j) - inner_c.part(j)) % 2
    )


@lru_cache(maxsize=4096)
def hook_count(p: Partition) -> int:
    """
    フック長公式による標準 Young 盤の個数 f^λ。

    Examples:
        >>> hook_count(Partition.of(2, 1))
        2
    """
    if not p.parts:
        return 1
    conj = conjugate(p)
    product = 1
    for i, row in enumerate(p.parts):
        for j in range(row):
            product *= (row - j - 1) + (conj.parts[j] - i - 1) + 1
    return factorial(p.size) // product


def index_sequence(p: Partition, m: int) -> tuple[int, ...]:
    """
    I_m(μ) = (μ_m+1, μ_{m−1}+2, …, μ_1+m) を返す。

    Raises:
        PartitionError: ℓ(μ) > m の場合
    """
    padded = p.padded(m)
    return tuple(padded[m - t] + t for t in range(1, m + 1))


def partition_from_index_sequence(indices: tuple[int, ...]) -> Partition:
    """index_sequence の逆写像。狭義増加な正整数列から μ を復元する"""
    m = len(indices)
    if any(b <= a for a, b in zip(indices, indices[1:])) or (indices and indices[0] < 1):
        raise PartitionError(f"狭義増加な正整数列ではありません: {indices}")
    return Partition.of(*(indices[m - i] - (m - i + 1) for i in range(1, m + 1)))


# ====================================
# 列挙
# ====================================
def partitions_of(
    size: int,
    width_bound: Optional[int] = None,
    length_bound: Optional[int] = None,
) -> Iterator[Partition]:
    """サイズ固定の分割を逆辞書式（大きい第1成分が先）で列挙する"""
    max_part = size if width_bound is None else min(size, width_bound)
    max_len = size if length_bound is None else length_bound

    def _rec(remaining: int, cap: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            # 残りを slots-1 行で埋められない枝は切る
            if part * slots < remaining:
                break
            yield from _rec(remaining - part, part, slots - 1, prefix + (part,))

    yield from _rec(size, max_part, max_len, ())


def enumerate_partitions(
    max_size: int,
    width_bound: Optional[int] = None,
    length_bound: Optional[int] = None,
) -> Iterator[Partition]:
    """
    サイズ max_size 以下で幅・長さの上限を満たす分割をすべて列挙する。

    順序はサイズ昇順、同サイズ内は逆辞書式。
    (max_size=3, width≤2) → ∅,(1),(2),(1,1),(2,1),(1,1,1)
    """
    for bound in (max_size, width_bound, length_bound):
        if bound is not None and bound < 0:
            raise PartitionError(f"上限は 0 以上である必要があります: {bound}")
    for size in range(max_size + 1):
        yield from partitions_of(size, width_bound, length_bound)


def bounded_box(width_bound: int, length_bound: int) -> Iterator[Partition]:
    """λ₁ ≤ width_bound かつ ℓ(λ) ≤ length_bound の分割（有限個）"""
    return enumerate_partitions(width_bound * length_bound, width_bound, length_bound)


# ====================================
# 隣接する形
# ====================================
def add_vertical_strips(p: Partition, max_length: int) -> Iterator[Partition]:
    """p に縦帯（空を含む）を足した分割で長さ max_length 以下のもの"""
    if p.length > max_length:
        return
    rows = p.padded(max_length)

    def _rec(i: int, prefix: tuple[int, ...]):
        if i == len(rows):
            yield Partition.of(*prefix)
            return
        for delta in (0, 1):
            value = rows[i] + delta
            if i and value > prefix[-1]:
                continue
            yield from _rec(i + 1, prefix + (value,))

    yield from _rec(0, ())


def remove_vertical_strips(p: Partition) -> Iterator[Partition]:
    """p から縦帯（空を含む）を取り除いた分割"""
    rows = p.parts

    def _rec(i: int, prefix: tuple[int, ...]):
        if i == len(rows):
            yield Partition.of(*prefix)
            return
        for delta in (0, 1):
            value = rows[i] - delta
            if i and value > prefix[-1]:
                continue
            yield from _rec(i + 1, prefix + (value,))

    yield from _rec(0, ())


class CellStep(NamedTuple):
    """1 マスの増減。row は 1 始まり、sign は +1 / -1"""
    row: int
    sign: int

    def label(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}e{self.row}"


def one_cell_neighbors(p: Partition, max_length: int) -> Iterator[tuple[CellStep, Partition]]:
    """1 マスだけ異なる分割を (ステップ, 分割) で返す。行番号の昇順、追加が先"""
    rows = list(p.padded(max(max_length, p.length)))
    for i in range(max_length):
        if i == 0 or rows[i - 1] > rows[i]:
            grown = rows.copy()
            grown[i] += 1
            yield CellStep(i + 1, +1), Partition.of(*grown)
    for i in range(len(rows)):
        if rows[i] > 0 and (i + 1 == len(rows) or rows[i + 1] < rows[i]):
            shrunk = rows.copy()
            shrunk[i] -= 1
            yield CellStep(i + 1, -1), Partition.of(*shrunk)


def rectangle(width: int, height: int) -> Partition:
    """(width^height) の長方形"""
    return Partition.of(*([width] * height)) if width > 0 else Partition.empty()


def column_partition(k: int) -> Partition:
    """(1^k)"""
    return Partition.of(*([1] * k))
