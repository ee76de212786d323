#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
可換環上の行列・行列式・Pfaffian
================================
成分は int / MultiPoly / SkewSymbolPoly のいずれでもよい（+ - * と 0 比較ができれば何でも）。
割り算を使わないので、多項式成分でも厳密に計算できる。

【アルゴリズム】
- determinant: 先頭行からの余因子展開を「残り列集合」でメモ化（サイズ 12 程度まで）
- pfaffian: 先頭行展開を「残り添字集合」でメモ化

【ラベル】
行・列は任意のラベル列で添字付けできる。例えば 0 < 0′ < 1 < 2 < … のような
全順序付き集合は、その順に並べたラベル列で表す。
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

from core.constants import MAX_MATRIX_SIZE

logger = logging.getLogger(__name__)


class MatrixShapeError(ValueError):
    """正方でない・奇数サイズ・交代でない等、形が不正"""


# ====================================
# SkewSymbolPoly
# ====================================
class SkewSymbolPoly:
    """
    自由な記号 z_i（i ≥ 1）の整数係数多項式。

    z_0 = 0, z_{−i} = −z_i は生成時に正規化される。
    単項式はソート済みの添字タプル（重複可）で表す。
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None):
        self._terms = {
            tuple(sorted(k)): v for k, v in (terms or {}).items() if v
        }

    @classmethod
    def z(cls, i: int) -> "SkewSymbolPoly":
        """z_i を正規化して返す"""
        if i == 0:
            return cls()
        if i < 0:
            return cls({(-i,): -1})
        return cls({(i,): 1})

    @classmethod
    def constant(cls, value: int) -> "SkewSymbolPoly":
        return cls({(): value})

    def _coerce(self, other):
        if isinstance(other, SkewSymbolPoly):
            return other
        if isinstance(other, int):
            return SkewSymbolPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return SkewSymbolPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SkewSymbolPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                key = tuple(sorted(k1 + k2))
                out[key] = out.get(key, 0) + v1 * v2
        return SkewSymbolPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key in sorted(self._terms, key=lambda k: (-len(k), k)):
            coeff = self._terms[key]
            body = "*".join(f"z{i}" for i in key) or "1"
            pieces.append(f"{coeff:+d}*{body}" if body != "1" else f"{coeff:+d}")
        return " ".join(pieces)

    def __repr__(self):
        return f"SkewSymbolPoly({self.to_text()})"


# ====================================
# RingMatrix
# ====================================
@dataclass(frozen=True)
class RingMatrix:
    """
    ラベル付きの稠密行列（不変）。

    entries[r][c] が行ラベル rows[r]、列ラベル cols[c] の成分。
    """
    rows: tuple[Hashable, ...]
    cols: tuple[Hashable, ...]
    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        if len(self.entries) != len(self.rows):
            raise MatrixShapeError(f"行数 {len(self.entries)} がラベル数 {len(self.rows)} と一致しません")
        for row in self.entries:
            if len(row) != len(self.cols):
                raise MatrixShapeError(f"列数 {len(row)} がラベル数 {len(self.cols)} と一致しません")
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise MatrixShapeError("ラベルが重複しています")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "RingMatrix":
        """ラベル 1..m, 1..n の行列"""
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls(tuple(range(1, m + 1)), tuple(range(1, n + 1)), rows)

    @classmethod
    def from_function(
        cls,
        rows: Sequence[Hashable],
        cols: Sequence[Hashable],
        entry: Callable[[Hashable, Hashable], Any],
    ) -> "RingMatrix":
        """成分関数 entry(r, c) から生成する"""
        return cls(tuple(rows), tuple(cols), tuple(tuple(entry(r, c) for c in cols) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def __getitem__(self, key: tuple[Hashable, Hashable]) -> Any:
        r, c = key
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def submatrix(self, rows: Iterable[Hashable], cols: Iterable[Hashable]) -> "RingMatrix":
        """行ラベル rows、列ラベル cols の小行列（与えた順に並ぶ）"""
        rows, cols = tuple(rows), tuple(cols)
        try:
            ri = [self.rows.index(r) for r in rows]
            ci = [self.cols.index(c) for c in cols]
        except ValueError as exc:
            raise MatrixShapeError(f"存在しないラベルです: {exc}") from exc
        return RingMatrix(rows, cols, tuple(tuple(self.entries[i][j] for j in ci) for i in ri))

    def principal(self, labels: Iterable[Hashable]) -> "RingMatrix":
        """主小行列 A^K"""
        labels = tuple(labels)
        return self.submatrix(labels, labels)

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def matmul(self, other: "RingMatrix") -> "RingMatrix":
        """積。self の列数と other の行数が一致する必要がある（ラベルは位置で対応）"""
        if len(self.cols) != len(other.rows):
            raise MatrixShapeError(f"積の形が合いません: {self.shape} × {other.shape}")
        entries = []
        for row in self.entries:
            out_row = []
            for j in range(len(other.cols)):
                total = 0
                for k, a in enumerate(row):
                    b = other.entries[k][j]
                    if a != 0 and b != 0:
                        total = total + a * b
                out_row.append(total)
            entries.append(tuple(out_row))
        return RingMatrix(self.rows, other.cols, tuple(entries))

    def is_skew_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        n = len(self.rows)
        for i in range(n):
            if self.entries[i][i] != 0:
                return False
            for j in range(i + 1, n):
                if self.entries[i][j] != -self.entries[j][i]:
                    return False
        return True

    def map(self, fn: Callable[[Any], Any]) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, tuple(tuple(fn(x) for x in row) for row in self.entries))


# ====================================
# 行列式・Pfaffian
# ====================================
def determinant(m: RingMatrix | Sequence[Sequence[Any]]) -> Any:
    """
    厳密な行列式（割り算なし）。

    空行列の行列式は 1。

    Raises:
        MatrixShapeError: 正方でない場合

    Examples:
        >>> determinant([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
        30
    """
    rows = m.entries if isinstance(m, RingMatrix) else tuple(tuple(r) for r in m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MatrixShapeError(f"正方行列ではありません: {n} 行")
    if n == 0:
        return 1
    if n > MAX_MATRIX_SIZE:
        logger.warning("サイズ %d の行列式はメモ化展開には大きすぎる可能性があります", n)

    memo: dict[int, Any] = {}

    def _det(row: int, mask: int) -> Any:
        # mask: まだ使っていない列の集合
        if row == n:
            return 1
        if mask in memo:
            return memo[mask]
        total = 0
        sign = 1
        for col in range(n):
            if not mask >> col & 1:
                continue
            entry = rows[row][col]
            if entry != 0:
                minor = _det(row + 1, mask & ~(1 << col))
                if minor != 0:
                    term = entry * minor
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return _det(0, (1 << n) - 1)


def pfaffian(m: RingMatrix | Sequence[Sequence[Any]], check: bool = True) -> Any:
    """
    交代行列の Pfaffian を先頭行展開で求める。空行列は 1。

    Raises:
        MatrixShapeError: 奇数サイズ、または交代でない場合
    """
    matrix = m if isinstance(m, RingMatrix) else RingMatrix.from_rows(m)
    n = len(matrix.rows)
    if matrix.shape[0] != matrix.shape[1]:
        raise MatrixShapeError(f"正方行列ではありません: {matrix.shape}")
    if n % 2:
        raise MatrixShapeError(f"奇数サイズ {n} の Pfaffian は定義しません")
    if check and not matrix.is_skew_symmetric():
        raise MatrixShapeError("交代行列ではありません")
    a = matrix.entries
    memo: dict[int, Any] = {}

    def _pf(mask: int) -> Any:
        if mask == 0:
            return 1
        if mask in memo:
            return memo[mask]
        first = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << first)
        total = 0
        sign = 1
        for j in range(first + 1, n):
            if not rest >> j & 1:
                continue
            entry = a[first][j]
            if entry != 0:
                sub = _pf(rest & ~(1 << j))
                if sub != 0:
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return _pf((1 << n) - 1)


def permutation_sign(perm: Sequence[int]) -> int:
    """置換の符号（転倒数の偶奇）"""
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign
