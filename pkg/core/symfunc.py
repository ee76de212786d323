#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
n 変数の対称多項式
==================
生成系（e, h, p）、Schur 多項式、f_r 級数、e(x) と ē(x)、
および f の歪作用素べき (p₁⊥)^j f_i の閉じた形を提供する。

f_r = Σ_m e_m·e_{m+r} は右辺の行列式成分の基本単位で、f_{−r} = f_r。

【使い方】
    from core.symfunc import f_series, schur_poly
    f_series(0, 1)                          # 1 + x1^2
    schur_poly(Partition.of(2, 1), 2)       # x1^2*x2 + x1*x2^2
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Mapping, Optional

from core.partitions import Partition, conjugate
from core.poly_ring import MultiPoly, as_poly, poly_sum
from core.ring_matrix import determinant

logger = logging.getLogger(__name__)


class BasisKind(Enum):
    """生成系の種類"""
    ELEMENTARY = "elementary"
    COMPLETE = "complete"
    POWERSUM = "powersum"


class SchurMethod(Enum):
    """Schur 多項式の計算方法"""
    JT_H = "jt_h"               # h による Jacobi–Trudi
    JT_E = "jt_e"               # e による双対 Jacobi–Trudi
    SSYT_ORACLE = "ssyt_oracle"  # 半標準盤の列挙


# ====================================
# 生成系
# ====================================
@lru_cache(maxsize=1024)
def generator_basis(kind: BasisKind | str, k: int, n: int) -> MultiPoly:
    """
    e_k / h_k / p_k を n 変数で返す。

    k < 0 なら 0、e_0 = h_0 = 1、k > n なら e_k = 0。p_0 は n（Σ x_i^0）とする。

    Examples:
        >>> generator_basis("elementary", 2, 3)   # x1*x2 + x1*x3 + x2*x3
    """
    kind = BasisKind(kind)
    if n < 1:
        raise ValueError(f"変数の数は 1 以上: {n}")
    if k < 0:
        return MultiPoly.zero(n)
    if kind is BasisKind.ELEMENTARY:
        chooser = combinations(range(n), k)
    elif kind is BasisKind.COMPLETE:
        chooser = combinations_with_replacement(range(n), k)
    else:
        if k == 0:
            return MultiPoly.constant(n, n)
        return poly_sum(
            (MultiPoly.monomial([k if i == j else 0 for j in range(n)], n) for i in range(n)), n,
        )
    terms: dict[tuple[int, ...], int] = {}
    for chosen in chooser:
        exps = [0] * n
        for i in chosen:
            exps[i] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(n, terms)


def elementary(k: int, n: int) -> MultiPoly:
    return generator_basis(BasisKind.ELEMENTARY, k, n)


def complete(k: int, n: int) -> MultiPoly:
    return generator_basis(BasisKind.COMPLETE, k, n)


# ====================================
# Schur 多項式
# ====================================
@lru_cache(maxsize=4096)
def schur_poly(
    lam: Partition,
    n: int,
    method: SchurMethod | str = SchurMethod.JT_H,
    size: Optional[int] = None,
) -> MultiPoly:
    """
    s_λ(x₁..x_n)。

    Args:
        lam: 分割 λ
        n: 変数の数
        method: jt_h / jt_e / ssyt_oracle
        size: Jacobi–Trudi 行列のサイズ（None で最小。jt_h は ℓ(λ) 以上、jt_e は λ₁ 以上）

    Returns:
        ℓ(λ) > n なら 0 になる多項式
    """
    method = SchurMethod(method)
    if method is SchurMethod.SSYT_ORACLE:
        return _schur_by_tableaux(lam, n)
    if method is SchurMethod.JT_H:
        p = lam.length if size is None else size
        if p < lam.length:
            raise ValueError(f"jt_h の行列サイズ {p} は ℓ(λ)={lam.length} 以上が必要です")
        parts = lam.padded(p)
        entries = [[complete(parts[i] - i + j, n) for j in range(p)] for i in range(p)]
    else:
        q = lam.width if size is None else size
        if q < lam.width:
            raise ValueError(f"jt_e の行列サイズ {q} は λ₁={lam.width} 以上が必要です")
        parts = conjugate(lam).padded(q)
        entries = [[elementary(parts[i] - i + j, n) for j in range(q)] for i in range(q)]
    return as_poly(determinant(entries), n)


def _schur_by_tableaux(lam: Partition, n: int) -> MultiPoly:
    """半標準 Young 盤を直接列挙して Σ x^T を作る"""
    cells = [(i, j) for i, row in enumerate(lam.parts) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}
    terms: dict[tuple[int, ...], int] = {}

    def _rec(idx: int) -> None:
        if idx == len(cells):
            exps = [0] * n
            for value in filling.values():
                exps[value - 1] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + 1
            return
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])       # 行は弱増加
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)   # 列は狭義増加
        for value in range(low, n + 1):
            filling[(i, j)] = value
            _rec(idx + 1)
        filling.pop((i, j), None)

    _rec(0)
    return MultiPoly(n, terms)


# ====================================
# f 級数と e(x)
# ====================================
@lru_cache(maxsize=1024)
def f_series(r: int, n: int) -> MultiPoly:
    """
    f_r(x_n) = Σ_m e_m·e_{m+r}。e_m は m > n で 0 なので有限和。f_{−r} = f_r。

    Examples:
        >>> f_series(0, 1)   # 1 + x1^2
        >>> f_series(1, 1)   # x1
    """
    if n < 1:
        raise ValueError(f"変数の数は 1 以上: {n}")
    r = abs(r)
    return poly_sum((elementary(m, n) * elementary(m + r, n) for m in range(n + 1)), n)


@lru_cache(maxsize=64)
def e_sum_series(n: int, signed: bool = False) -> MultiPoly:
    """e(x_n) = Σ_k e_k = ∏(1+x_i)、signed なら ē(x_n) = Σ (−1)^k e_k = ∏(1−x_i)"""
    if n < 1:
        raise ValueError(f"変数の数は 1 以上: {n}")
    return poly_sum(
        (elementary(k, n) * ((-1) ** k if signed else 1) for k in range(n + 1)), n,
    )


# ====================================
# FComb: f の形式的な一次結合
# ====================================
@dataclass(frozen=True)
class FComb:
    """
    Σ c_r f_r の形式和。添字は f_{−r} = f_r で非負に正規化して保持する。
    """
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        normalized: dict[int, int] = {}
        for r, c in dict(self.terms).items():
            key = abs(r)
            normalized[key] = normalized.get(key, 0) + c
        object.__setattr__(self, "terms", {r: c for r, c in sorted(normalized.items()) if c})

    @classmethod
    def single(cls, r: int, coeff: int = 1) -> "FComb":
        return cls({r: coeff})

    def __add__(self, other: "FComb") -> "FComb":
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, 0) + c
        return FComb(out)

    def __sub__(self, other: "FComb") -> "FComb":
        return self + other.scale(-1)

    def scale(self, k: int) -> "FComb":
        return FComb({r: c * k for r, c in self.terms.items()})

    def apply_p1_perp(self) -> "FComb":
        """置換規則 f_i ↦ f_{i−1} + f_{i+1} を 1 回適用する"""
        out: dict[int, int] = {}
        for r, c in self.terms.items():
            for s in (r - 1, r + 1):
                out[s] = out.get(s, 0) + c
        return FComb(out)

    def materialize(self, n: int) -> MultiPoly:
        """n 変数の多項式として実体化する"""
        return poly_sum((f_series(r, n) * c for r, c in self.terms.items()), n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*f{r}" if c != 1 else f"f{r}" for r, c in self.terms.items())


def f_skew_power(j: int, i: int) -> FComb:
    """
    (p₁⊥)^j f_i = Σ_{r=0}^{j} C(j,r) f_{i−j+2r} の閉じた形。

    Examples:
        >>> f_skew_power(1, 0)   # 2*f1
        >>> f_skew_power(2, 1)   # 3*f1 + f3
    """
    if j < 0:
        raise ValueError(f"べき j は 0 以上: {j}")
    return FComb({i - j + 2 * r: comb(j, r) for r in range(j + 1)})
