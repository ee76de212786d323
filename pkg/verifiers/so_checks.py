#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
so_{2n} 指標による言い換えの検証
================================
ほぼ長方形の最高ウェイトの指標と長方形に含まれる Schur 和の一致、
u 付き恒等式の行列式ブロックと指標の対応を Laurent 多項式で確かめる。

【使い方】
    from fractions import Fraction
    from verifiers.so_checks import verify_kratt
    reports = verify_kratt(Fraction(1, 2), 0, 1)
"""

import logging
from fractions import Fraction

from core.partitions import Partition, contains, enumerate_partitions, odd_counts, rectangle, skew_odd_columns
from core.poly_ring import MultiPoly
from core.so_characters import (
    CharacterKind,
    character_of_weight,
    half_factor,
    laurent_elementary,
    nearly_rectangular_weight,
    orthogonal_character,
    sum_of,
    variable_product_power,
)
from core.symfunc import e_sum_series, f_series, schur_poly
from verifiers.base import MachineryCheck, Stopwatch, VerifyReport
from verifiers.identity_suite import row_goulden_block

logger = logging.getLogger(__name__)

_KRATT = MachineryCheck.KRATT.value
_BRIDGE = MachineryCheck.CHARACTER_BRIDGE.value
_PROPS = MachineryCheck.SO_PROPERTIES.value


def _report(name: str, params: dict, lhs, rhs, sw: Stopwatch) -> VerifyReport:
    report = VerifyReport.create_comparison(name, params, lhs, rhs, elapsed_ms=sw.ms)
    if not report.equal:
        logger.error("指標の恒等式が一致しません: %s %s", name, params)
    return report


def _as_half(c) -> Fraction:
    c = Fraction(c)
    if (2 * c).denominator != 1 or c < 0:
        raise ValueError(f"c は 0 以上の整数か半整数: {c}")
    return c


# ====================================
# 長方形の中の Schur 和
# ====================================
def rectangle_schur_sum(c: Fraction, n: int, k: int | None = None) -> MultiPoly:
    """Σ s_λ(x_n)（λ ⊆ ((2c)^n)、k を与えたら c(((2c)^n)/λ) = k のものだけ）"""
    width = int(2 * c)
    rect = rectangle(width, n)
    terms = [
        schur_poly(lam, n).to_laurent()
        for lam in enumerate_partitions(width * n, width, n)
        if contains(lam, rect) and (k is None or skew_odd_columns(rect, lam) == k)
    ]
    return sum_of(terms, n)


def kratt_sides(c, k: int, n: int) -> tuple[MultiPoly, MultiPoly]:
    """((x₁⋯x_n)^c · sorth_{(c^{n−1}, c−k)}, 長方形の中の Schur 和)"""
    c = _as_half(c)
    if not 0 <= k <= 2 * c:
        raise ValueError(f"0 ≤ k ≤ 2c が必要です: c={c}, k={k}")
    if n < 1:
        raise ValueError(f"n は 1 以上: {n}")
    weight = nearly_rectangular_weight(c, k, n)
    lhs = variable_product_power(n, c) * character_of_weight(weight)
    return lhs, rectangle_schur_sum(c, n, k)


def verify_kratt(c, k: int, n: int) -> list[VerifyReport]:
    """
    (x₁⋯x_n)^c · sorth_{(c^{n−1}, c−k)}(x_n) = Σ s_λ(x_n) を確かめ、
    特殊化 f_r(x_n) = (x₁⋯x_n)·e_{n−r}(x_n^{±1})（|r| ≤ n）も添える。

    Args:
        c: 0 以上の整数か半整数
        k: 0 ≤ k ≤ 2c
        n: 変数の数

    Raises:
        ValueError: c, k, n が範囲外
    """
    c = _as_half(c)
    params = {"c": str(c), "k": k, "n": n}
    with Stopwatch() as sw:
        lhs, rhs = kratt_sides(c, k, n)
    reports = [_report(_KRATT, params, lhs, rhs, sw)]
    for r in range(-n, n + 1):
        with Stopwatch() as sw:
            spec_lhs = f_series(r, n).to_laurent()
            spec_rhs = variable_product_power(n, 1) * laurent_elementary(n - r, n)
        reports.append(_report(_KRATT, {"check": "specialization", "r": r, "n": n}, spec_lhs, spec_rhs, sw))
    return reports


# ====================================
# u 付き恒等式との対応
# ====================================
def verify_character_bridge(w: int, k: int, n: int) -> list[VerifyReport]:
    """
    - ½det(even_plus ブロック) = (x₁⋯x_n)^w · o_{(w^{n−1}, w−k)}
    - k ≤ w−1 なら e·ē·det(even_minus ブロック) = (−1)^n (x₁⋯x_n)^w · ō_{(w^{n−1}, w−k)}

    Raises:
        ValueError: w < 1、n < 1、k が 0..w の外
    """
    if w < 1 or n < 1 or not 0 <= k <= w:
        raise ValueError(f"w ≥ 1, n ≥ 1, 0 ≤ k ≤ w が必要です: w={w}, k={k}, n={n}")
    lam = Partition.of(*([w] * (n - 1) + [w - k]))
    scale = variable_product_power(n, w)
    params = {"w": w, "k": k, "n": n}
    reports = []
    with Stopwatch() as sw:
        lhs = row_goulden_block(n, w, k, "even_plus").exact_div(2).to_laurent()
        rhs = scale * orthogonal_character(lam, n, False, CharacterKind.O_PLUS)
    reports.append(_report(_BRIDGE, {**params, "side": "plus"}, lhs, rhs, sw))
    if k <= w - 1:
        with Stopwatch() as sw:
            e, ebar = e_sum_series(n), e_sum_series(n, signed=True)
            lhs = (e * ebar * row_goulden_block(n, w, k, "even_minus")).to_laurent()
            rhs = scale * orthogonal_character(lam, n, False, CharacterKind.O_BAR) * (-1) ** n
        reports.append(_report(_BRIDGE, {**params, "side": "minus"}, lhs, rhs, sw))
    return reports


# ====================================
# 性質
# ====================================
def verify_so_properties(w_max: int = 2, n_max: int = 3) -> list[VerifyReport]:
    """
    - k について足すと長方形全体の Schur 和（c ≤ 3/2、n ≤ 2）
    - 補集合の規則 c((2w)^n/λ) = c(λ)（n 偶数）、2w − c(λ)（n 奇数）
    - e(x_n) と ē(x_n) の半整数べきの積表示
    """
    reports: list[VerifyReport] = []
    for twice_c in range(1, 4):
        c = Fraction(twice_c, 2)
        for n in range(1, 3):
            with Stopwatch() as sw:
                total = sum_of([kratt_sides(c, k, n)[0] for k in range(twice_c + 1)], n)
                full = rectangle_schur_sum(c, n)
            reports.append(_report(_PROPS, {"check": "rectangle_total", "c": str(c), "n": n}, total, full, sw))

    for w in range(1, w_max + 1):
        for n in range(1, n_max + 1):
            rect = rectangle(2 * w, n)
            with Stopwatch() as sw:
                bad = [
                    str(lam) for lam in enumerate_partitions(2 * w * n, 2 * w, n)
                    if skew_odd_columns(rect, lam) != (odd_counts(lam).c if n % 2 == 0 else 2 * w - odd_counts(lam).c)
                ]
            if bad:
                logger.error("補集合の規則が成り立ちません: w=%d n=%d %s", w, n, bad)
            reports.append(VerifyReport.create_check(
                _PROPS, {"check": "complement_rule", "w": w, "n": n}, not bad,
                elapsed_ms=sw.ms, detail=", ".join(bad),
            ))

    for n in range(1, n_max + 1):
        root = variable_product_power(n, Fraction(1, 2))
        with Stopwatch() as sw:
            plus = (e_sum_series(n).to_laurent(), root * half_factor(n, 1))
            minus = (e_sum_series(n, signed=True).to_laurent(), root * half_factor(n, -1) * (-1) ** n)
        reports.append(_report(_PROPS, {"check": "e_half_product", "n": n}, *plus, sw))
        reports.append(_report(_PROPS, {"check": "ebar_half_product", "n": n}, *minus, sw))
    return reports
