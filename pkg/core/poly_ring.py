#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
疎な多変数多項式環
==================
x₁..x_n の整数係数多項式。すべての恒等式チェックが乗る共通の環。

【モード】
- 通常モード: 指数は 0 以上の整数
- Laurent モード: 指数を半単位で保持する（保存値 e は x^(e/2) を表す）。
  負の指数と半整数の指数をそのまま扱える。
- u 付き: 指数ベクトルの末尾に中心的な不定元 u の指数を持つ。

係数 0 の項は保持しない。演算結果は常に正規形。

【使い方】
    from core.poly_ring import MultiPoly
    x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
    (x1 + x2) * (x1 - x2)          # x1^2 - x2^2
"""

import hashlib
import logging
import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]
Number = Union[int, Fraction]


class ModeMismatchError(ValueError):
    """変数の数・u の有無・Laurent モードが一致しない"""


# ====================================
# MultiPoly
# ====================================
class MultiPoly:
    """
    疎な整数係数多項式（不変オブジェクト）。

    terms は「保存単位での指数ベクトル → 整数係数」の写像。
    保存単位は通常モードで 1、Laurent モードで 1/2。
    """

    __slots__ = ("nvars", "has_u", "laurent", "_terms", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Optional[Mapping[Exponent, int]] = None,
        *,
        has_u: bool = False,
        laurent: bool = False,
    ):
        if nvars < 0:
            raise ModeMismatchError(f"変数の数は 0 以上: {nvars}")
        width = nvars + (1 if has_u else 0)
        cleaned: dict[Exponent, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != width:
                raise ModeMismatchError(
                    f"指数ベクトルの長さ {len(exps)} が {width} と一致しません"
                )
            if not laurent and any(e < 0 for e in exps):
                raise ModeMismatchError(f"通常モードで負の指数は使えません: {exps}")
            if coeff:
                cleaned[exps] = int(coeff)
        self.nvars = nvars
        self.has_u = has_u
        self.laurent = laurent
        self._terms = cleaned
        self._hash: Optional[int] = None

    # ------------------------------------------------------------------
    # 生成
    # ------------------------------------------------------------------
    @property
    def unit(self) -> int:
        """保存指数 1 あたりの分母（Laurent なら 2）"""
        return 2 if self.laurent else 1

    @property
    def width(self) -> int:
        return self.nvars + (1 if self.has_u else 0)

    def _like(self, terms: Mapping[Exponent, int]) -> "MultiPoly":
        # 演算結果は指数の形が保証されているので検証を省く
        poly = object.__new__(MultiPoly)
        poly.nvars = self.nvars
        poly.has_u = self.has_u
        poly.laurent = self.laurent
        poly._terms = {e: c for e, c in terms.items() if c}
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, nvars: int, *, has_u: bool = False, laurent: bool = False) -> "MultiPoly":
        return cls(nvars, {}, has_u=has_u, laurent=laurent)

    @classmethod
    def constant(
        cls, value: int, nvars: int, *, has_u: bool = False, laurent: bool = False,
    ) -> "MultiPoly":
        width = nvars + (1 if has_u else 0)
        return cls(nvars, {(0,) * width: value}, has_u=has_u, laurent=laurent)

    @classmethod
    def monomial(
        cls,
        exponents: Sequence[Number],
        nvars: int,
        coeff: int = 1,
        *,
        u_exponent: Optional[int] = None,
        laurent: bool = False,
    ) -> "MultiPoly":
        """
        自然単位の指数で単項式を作る。Laurent モードでは半整数も可。

        Examples:
            >>> MultiPoly.monomial([Fraction(1, 2)], 1, laurent=True)   # x1^(1/2)
        """
        unit = 2 if laurent else 1
        raw = [_to_raw(e, unit) for e in exponents]
        if len(raw) != nvars:
            raise ModeMismatchError(f"指数の個数 {len(raw)} が変数の数 {nvars} と一致しません")
        has_u = u_exponent is not None
        if has_u:
            raw.append(_to_raw(u_exponent, unit))
        return cls(nvars, {tuple(raw): coeff}, has_u=has_u, laurent=laurent)

    @classmethod
    def variable(
        cls, i: int, nvars: int, *, has_u: bool = False, laurent: bool = False,
    ) -> "MultiPoly":
        """x_i（1 始まり）"""
        if not 1 <= i <= nvars:
            raise ModeMismatchError(f"変数番号 {i} は 1..{nvars} の範囲外です")
        unit = 2 if laurent else 1
        exps = [0] * (nvars + (1 if has_u else 0))
        exps[i - 1] = unit
        return cls(nvars, {tuple(exps): 1}, has_u=has_u, laurent=laurent)

    @classmethod
    def u_variable(cls, nvars: int, *, laurent: bool = False) -> "MultiPoly":
        """中心的な不定元 u"""
        exps = [0] * nvars + [2 if laurent else 1]
        return cls(nvars, {tuple(exps): 1}, has_u=True, laurent=laurent)

    # ------------------------------------------------------------------
    # 参照
    # ------------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient_of(self, monomial: Sequence[Number], u_exponent: Optional[int] = None) -> int:
        """
        自然単位の指数ベクトルに対応する係数（無ければ 0）。

        Raises:
            ModeMismatchError: 次元が合わない場合
        """
        raw = [_to_raw(e, self.unit) for e in monomial]
        if len(raw) != self.nvars:
            raise ModeMismatchError(
                f"単項式の次元 {len(raw)} が変数の数 {self.nvars} と一致しません"
            )
        if self.has_u:
            raw.append(_to_raw(u_exponent or 0, self.unit))
        elif u_exponent:
            raise ModeMismatchError("u を持たない多項式に u の指数が指定されました")
        return self._terms.get(tuple(raw), 0)

    def multilinear_coefficient(self) -> int:
        """x₁x₂⋯x_n の係数"""
        return self.coefficient_of([1] * self.nvars)

    def total_degree(self) -> Fraction:
        """x 部分の全次数の最大値（u は数えない）"""
        if not self._terms:
            return Fraction(-1)
        return max(Fraction(sum(e[: self.nvars]), self.unit) for e in self._terms)

    def u_degree(self) -> int:
        if not self.has_u or not self._terms:
            return 0
        return max(e[-1] for e in self._terms) // self.unit

    # ------------------------------------------------------------------
    # 演算
    # ------------------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if (other.nvars, other.has_u, other.laurent) != (self.nvars, self.has_u, self.laurent):
                raise ModeMismatchError(
                    "多項式のモードが一致しません: "
                    f"(n={self.nvars}, u={self.has_u}, laurent={self.laurent}) と "
                    f"(n={other.nvars}, u={other.has_u}, laurent={other.laurent})"
                )
            return other
        if isinstance(other, int):
            return MultiPoly.constant(
                other, self.nvars, has_u=self.has_u, laurent=self.laurent,
            )
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            result[exps] = result.get(exps, 0) + coeff
        return self._like(result)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return self._like({e: -c for e, c in self._terms.items()})

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
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
        return self._like(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ModeMismatchError(f"べき指数は 0 以上の整数: {exponent!r}")
        result = MultiPoly.constant(1, self.nvars, has_u=self.has_u, laurent=self.laurent)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: int) -> "MultiPoly":
        """整数での割り算。割り切れない係数があれば ValueError"""
        if divisor == 0:
            raise ZeroDivisionError("0 で割ることはできません")
        out = {}
        for exps, coeff in self._terms.items():
            q, r = divmod(coeff, divisor)
            if r:
                raise ValueError(f"係数 {coeff} は {divisor} で割り切れません")
            out[exps] = q
        return self._like(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.nvars, has_u=self.has_u, laurent=self.laurent)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.has_u == other.has_u
            and self.laurent == other.laurent
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.has_u, self.laurent, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # 変換
    # ------------------------------------------------------------------
    def with_u(self) -> "MultiPoly":
        """u の指数 0 の枠を追加する"""
        if self.has_u:
            return self
        return MultiPoly(
            self.nvars, {e + (0,): c for e, c in self._terms.items()},
            has_u=True, laurent=self.laurent,
        )

    def substitute_u(self, value: int) -> "MultiPoly":
        """u に整数を代入して u の枠を落とす"""
        if not self.has_u:
            raise ModeMismatchError("u を持たない多項式です")
        result: dict[Exponent, int] = {}
        for exps, coeff in self._terms.items():
            power = exps[-1] // self.unit
            key = exps[:-1]
            result[key] = result.get(key, 0) + coeff * value ** power
        return MultiPoly(self.nvars, result, laurent=self.laurent)

    def u_coefficient(self, degree: int) -> "MultiPoly":
        """u^degree の係数（u を持たない多項式）"""
        if not self.has_u:
            raise ModeMismatchError("u を持たない多項式です")
        raw = degree * self.unit
        return MultiPoly(
            self.nvars,
            {e[:-1]: c for e, c in self._terms.items() if e[-1] == raw},
            laurent=self.laurent,
        )

    def to_laurent(self) -> "MultiPoly":
        """Laurent モード（半単位指数）に埋め込む"""
        if self.laurent:
            return self
        return MultiPoly(
            self.nvars, {tuple(2 * x for x in e): c for e, c in self._terms.items()},
            has_u=self.has_u, laurent=True,
        )

    def truncated(self, max_degree: int) -> "MultiPoly":
        """x 部分の全次数が max_degree 以下の項だけ残す"""
        bound = max_degree * self.unit
        return self._like({
            e: c for e, c in self._terms.items() if sum(e[: self.nvars]) <= bound
        })

    def times_monomial(self, exponents: Sequence[Number]) -> "MultiPoly":
        """自然単位の指数ベクトルの単項式を掛ける（Laurent なら負も可）"""
        raw = [_to_raw(e, self.unit) for e in exponents]
        if len(raw) != self.nvars:
            raise ModeMismatchError(f"指数の個数 {len(raw)} が変数の数 {self.nvars} と一致しません")
        if self.has_u:
            raw.append(0)
        return self._like({
            tuple(a + b for a, b in zip(e, raw)): c for e, c in self._terms.items()
        })

    def evaluate_at(self, point: Sequence[Number], u: Optional[Number] = None) -> Fraction:
        """
        有理点での厳密な値。

        Laurent モードの半整数指数は、値が有理数の平方のときだけ評価できる。

        Raises:
            ModeMismatchError: 次元が合わない場合
            ValueError: 0 に負の指数や半整数の指数を代入した場合
        """
        if len(point) != self.nvars:
            raise ModeMismatchError(f"点の次元 {len(point)} が変数の数 {self.nvars} と一致しません")
        values = [Fraction(v) for v in point]
        if self.has_u:
            if u is None:
                raise ModeMismatchError("u の値が必要です")
            values.append(Fraction(u))
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = Fraction(coeff)
            for value, raw in zip(values, exps):
                if raw:
                    term *= _raw_power(value, raw, self.unit)
            total += term
        return total

    # ------------------------------------------------------------------
    # 表示
    # ------------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """grevlex（全次数降順、同次数は最後の変数の指数が小さい方が先）"""
        return sorted(
            self._terms.items(),
            key=lambda item: (-sum(item[0]), tuple(item[0][::-1])),
        )

    def to_text(self) -> str:
        """正規テキスト表現。例: 3*x1^2*x2 - u + 1"""
        if not self._terms:
            return "0"
        names = [f"x{i + 1}" for i in range(self.nvars)] + (["u"] if self.has_u else [])
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, raw in zip(names, exps):
                if raw == 0:
                    continue
                power = Fraction(raw, self.unit)
                if power == 1:
                    factors.append(name)
                elif power.denominator == 1 and power > 0:
                    factors.append(f"{name}^{power.numerator}")
                else:
                    factors.append(f"{name}^({power})")
            magnitude = abs(coeff)
            body = "*".join(([str(magnitude)] if magnitude != 1 or not factors else []) + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def canonical_hash(self, length: int = 16) -> str:
        """モードとテキスト表現の SHA-256（先頭 length 文字）"""
        header = f"n={self.nvars};u={int(self.has_u)};laurent={int(self.laurent)};"
        return hashlib.sha256((header + self.to_text()).encode("utf-8")).hexdigest()[:length]

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def as_poly(value, nvars: int, *, has_u: bool = False, laurent: bool = False) -> MultiPoly:
    """int または MultiPoly を指定モードの MultiPoly にそろえる"""
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(int(value), nvars, has_u=has_u, laurent=laurent)


def poly_sum(values: Iterable[MultiPoly], nvars: int, *, has_u: bool = False, laurent: bool = False) -> MultiPoly:
    """空でも正しいモードの 0 を返す総和"""
    total = MultiPoly.zero(nvars, has_u=has_u, laurent=laurent)
    for value in values:
        total = total + value
    return total


def _to_raw(exponent: Number, unit: int) -> int:
    scaled = Fraction(exponent) * unit
    if scaled.denominator != 1:
        raise ModeMismatchError(f"指数 {exponent} はこのモードで表現できません")
    return int(scaled)


def _exact_sqrt(value: Fraction) -> Fraction:
    if value < 0:
        raise ValueError(f"負の値 {value} の平方根は有理数になりません")
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise ValueError(f"{value} は有理数の平方ではありません")
    return Fraction(num, den)


def _raw_power(value: Fraction, raw: int, unit: int) -> Fraction:
    if value == 0:
        if raw < 0:
            raise ValueError("0 に負の指数を代入できません")
        if raw % unit:
            raise ValueError("0 に半整数の指数を代入できません")
        return Fraction(0)
    if raw % unit:
        root = _exact_sqrt(value)
        return root ** raw
    return value ** (raw // unit)


# ====================================
# EGFSeries
# ====================================
class EGFSeries:
    """
    次数 order で打ち切った冪級数 Σ a_k x^k（係数は有理数）。

    θ 写像の像（指数型母関数）を保持する。積も同じ order で打ち切る。
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Number] = ()):
        if order < 0:
            raise ValueError(f"order は 0 以上: {order}")
        values = [Fraction(c) for c in coeffs][: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        self.order = order
        self.coeffs: tuple[Fraction, ...] = tuple(values)

    @classmethod
    def monomial(cls, k: int, coeff: Number, order: int) -> "EGFSeries":
        values = [Fraction(0)] * (order + 1)
        if 0 <= k <= order:
            values[k] = Fraction(coeff)
        return cls(order, values)

    @classmethod
    def one(cls, order: int) -> "EGFSeries":
        return cls.monomial(0, 1, order)

    @classmethod
    def exp(cls, order: int) -> "EGFSeries":
        """exp(x)"""
        return cls(order, [Fraction(1, math.factorial(k)) for k in range(order + 1)])

    @classmethod
    def from_counts(cls, counts: Sequence[int], order: int) -> "EGFSeries":
        """Σ counts[k] x^k / k!"""
        return cls(order, [Fraction(c, math.factorial(k)) for k, c in enumerate(counts)])

    def _check(self, other: "EGFSeries") -> None:
        if not isinstance(other, EGFSeries):
            raise TypeError(f"EGFSeries 以外とは演算できません: {type(other).__name__}")
        if other.order != self.order:
            raise ModeMismatchError(f"打ち切り次数が一致しません: {self.order} と {other.order}")

    def _lift(self, other) -> "EGFSeries":
        """整数・有理数は定数級数として扱う"""
        if isinstance(other, (int, Fraction)):
            return EGFSeries.monomial(0, other, self.order)
        self._check(other)
        return other

    def __add__(self, other) -> "EGFSeries":
        other = self._lift(other)
        return EGFSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> "EGFSeries":
        other = self._lift(other)
        return EGFSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other) -> "EGFSeries":
        return (-self) + other

    def __neg__(self) -> "EGFSeries":
        return EGFSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return EGFSeries(self.order, [a * other for a in self.coeffs])
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return EGFSeries(self.order, out)

    __rmul__ = __mul__

    def derivative(self) -> "EGFSeries":
        """d/dx。最高次の情報が失われるので order は 1 下がる"""
        if self.order == 0:
            return EGFSeries(0, [0])
        return EGFSeries(self.order - 1, [k * self.coeffs[k] for k in range(1, self.order + 1)])

    def truncate(self, order: int) -> "EGFSeries":
        if order > self.order:
            raise ModeMismatchError(f"order {self.order} を {order} に伸ばすことはできません")
        return EGFSeries(order, self.coeffs[: order + 1])

    def egf_counts(self) -> list[int]:
        """n!·a_n の列。整数にならなければ ValueError"""
        counts = []
        for k, a in enumerate(self.coeffs):
            value = a * math.factorial(k)
            if value.denominator != 1:
                raise ValueError(f"{k} 次の係数 {a} に {k}! を掛けても整数になりません")
            counts.append(int(value))
        return counts

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = EGFSeries.monomial(0, other, self.order)
        if not isinstance(other, EGFSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"EGFSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"
