#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
SYT の数え上げ方法の突き合わせ
==============================
同じ個数を 4 通り（総当たり・フック長の和・EGF 行列式・明示公式）で求めて比べ、
θ 写像の性質も確かめる。

【使い方】
    from verifiers.syt_counting import verify_syt_methods
    reports = verify_syt_methods(n_max=6, w=1)
"""

import logging
from dataclasses import dataclass

from core.constants import DEFAULT_ORDER
from core.lambda_ring import elementary as schur_elementary
from core.lambda_ring import multiply
from core.symfunc import f_skew_power
from core.syt import (
    CountMethod,
    KloVariant,
    Parity,
    SytQuery,
    catalan,
    central_binom,
    gessel_series,
    klo_count,
    syt_count,
    theta_elementary,
    theta_f,
    theta_map,
)
from verifiers.base import MachineryCheck, Stopwatch, VerifyReport

logger = logging.getLogger(__name__)

_NAME = MachineryCheck.SYT_METHODS.value


@dataclass
class SytCountRow:
    """表示用の 1 行（n ごとの各方法の値）"""
    n: int
    width: int
    bruteforce: int
    hooksum: int
    gessel: int
    klo: int

    @property
    def consistent(self) -> bool:
        return self.bruteforce == self.hooksum == self.gessel == self.klo

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "width": self.width,
            "bruteforce": self.bruteforce,
            "hooksum": self.hooksum,
            "gessel": self.gessel,
            "klo": self.klo,
            "consistent": self.consistent,
        }


def syt_count_rows(n_max: int, w: int, parity: Parity | str) -> list[SytCountRow]:
    """
    幅 2w+1（odd）または 2w（even）の SYT の個数を n = 0..n_max で 4 通りに求める。

    Raises:
        ValueError: w < 1（明示公式は w ≥ 1 が必要）
    """
    parity = Parity(parity)
    if w < 1:
        raise ValueError(f"w は 1 以上が必要です: w={w}")
    width = 2 * w + 1 if parity is Parity.ODD else 2 * w
    variant = KloVariant.KLO_ODD if parity is Parity.ODD else KloVariant.KLO_EVEN
    gessel = gessel_series(w, parity, n_max)
    rows = []
    for n in range(n_max + 1):
        q = SytQuery(n=n, w=width)
        rows.append(SytCountRow(
            n=n,
            width=width,
            bruteforce=syt_count(q, CountMethod.BRUTEFORCE),
            hooksum=syt_count(q, CountMethod.HOOKSUM),
            gessel=gessel[n],
            klo=klo_count(variant, n, w),
        ))
    logger.debug("SYT 個数表: w=%d, %s, %d 行", w, parity.value, len(rows))
    return rows


def _report(params: dict, lhs, rhs, sw: Stopwatch | None = None) -> VerifyReport:
    return VerifyReport.create_comparison(_NAME, params, lhs, rhs, elapsed_ms=sw.ms if sw else 0.0)


def verify_theta(order: int = DEFAULT_ORDER) -> list[VerifyReport]:
    """
    - θ(e_i·e_j) = θ(e_i)·θ(e_j)（積は Λ の Schur 基底で取る）
    - θ((p₁⊥)^j f_i) = (d/dx)^j θ(f_i)
    - θ(f_0) − θ(f_2) の係数が Cat(n/2)、θ(f_0) + θ(f_1) の係数が C(n, ⌊n/2⌋)
    """
    reports = []
    for i in range(order + 1):
        for j in range(order + 1 - i):
            with Stopwatch() as sw:
                product = multiply(schur_elementary(i, order), schur_elementary(j, order))
                lhs = theta_map(product, order)
                rhs = theta_elementary(i, order) * theta_elementary(j, order)
            reports.append(_report({"check": "theta_homomorphism", "i": i, "j": j}, lhs, rhs, sw))

    for j in range(order + 1):
        for i in range(-2, 4):
            with Stopwatch() as sw:
                lhs = theta_map(f_skew_power(j, i), order)
                rhs = theta_f(i, order + j)
                for _ in range(j):
                    rhs = rhs.derivative()
            reports.append(_report({"check": "theta_intertwining", "i": i, "j": j}, lhs, rhs, sw))

    bessel_order = max(order, 10)
    with Stopwatch() as sw:
        catalan_side = (theta_f(0, bessel_order) - theta_f(2, bessel_order)).egf_counts()
        binom_side = (theta_f(0, bessel_order) + theta_f(1, bessel_order)).egf_counts()
    reports.append(_report(
        {"check": "bessel_catalan", "order": bessel_order},
        catalan_side, [catalan(n // 2) if n % 2 == 0 else 0 for n in range(bessel_order + 1)], sw,
    ))
    reports.append(_report(
        {"check": "bessel_central_binom", "order": bessel_order},
        binom_side, [central_binom(n) for n in range(bessel_order + 1)],
    ))
    return reports


def verify_syt_methods(n_max: int, w: int, order: int = DEFAULT_ORDER) -> list[VerifyReport]:
    """
    - 幅 2w+1 / 2w の SYT の個数が 4 通りの方法で一致する（n ≤ n_max）
    - 奇数長の行が k 本の個数が明示公式と総当たりで一致する
    - θ 写像の性質（verify_theta）

    Args:
        n_max: 0 以上
        w: 1 以上
        order: θ の検証の打ち切り次数
    """
    if n_max < 0:
        raise ValueError(f"n_max は 0 以上: {n_max}")
    reports: list[VerifyReport] = []
    for parity in Parity:
        with Stopwatch() as sw:
            rows = syt_count_rows(n_max, w, parity)
        for row in rows:
            report = VerifyReport.create_check(
                _NAME, {"check": "count_methods", "parity": parity.value, "n": row.n, "w": w},
                row.consistent, elapsed_ms=sw.ms / max(len(rows), 1),
                detail="" if row.consistent else str(row.to_dict()),
            )
            if not report.equal:
                logger.error("SYT 個数が方法ごとに食い違います: %s", row.to_dict())
            reports.append(report)

    for n in range(n_max + 1):
        for k in range(n + 1):
            for variant, width in ((KloVariant.REF_ODD, 2 * w + 1), (KloVariant.REF_EVEN, 2 * w)):
                with Stopwatch() as sw:
                    formula = klo_count(variant, n, w, k)
                    brute = syt_count(SytQuery(n=n, w=width, odd_rows=k))
                reports.append(_report(
                    {"check": variant.value, "n": n, "w": w, "k": k}, formula, brute, sw,
                ))

    reports.extend(verify_theta(order))
    return reports

