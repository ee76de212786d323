#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
p₁⊥ と f 級数の補題の検証
=========================
Λ_D（Schur 基底、次数 D で切り捨て）の中で、p₁⊥ の f_i への作用と、
列操作で使う 2 つの変形、p₁⊥ の微分性・随伴性を確かめる。

【使い方】
    from verifiers.skew_lemmas import verify_skew_lemmas
    reports = verify_skew_lemmas(degree=6, i_values=range(0, 4), j_max=2)

【切り捨て】
p₁⊥ は次数を 1 下げるので、j 回作用させた結果は次数 D − j まで比べる。
"""

import logging
import random
from math import comb
from typing import Iterable

from core.constants import ADJOINT_DEGREE, ADJOINT_PAIRS, DEFAULT_SEED
from core.lambda_ring import (
    SchurExpansion,
    elementary,
    f_series_schur,
    fcomb_to_schur,
    hall_inner,
    multiply,
    p1_perp,
    p1_perp_power,
    pieri_mul_e,
    schur,
    specialize,
)
from core.partitions import enumerate_partitions
from core.symfunc import FComb, f_skew_power
from verifiers.base import MachineryCheck, Stopwatch, VerifyReport

logger = logging.getLogger(__name__)

_NAME = MachineryCheck.SKEW_LEMMAS.value
_COEFF_RANGE = 3
_SPECIALIZE_MAX_N = 3


def _report(check: str, params: dict, lhs, rhs, sw: Stopwatch, seed=None) -> VerifyReport:
    report = VerifyReport.create_comparison(
        _NAME, {"check": check, **params}, lhs, rhs, elapsed_ms=sw.ms, seed=seed,
    )
    if not report.equal:
        logger.error("p₁⊥ の補題が成り立ちません: %s %s", check, params)
    return report


def random_element(rng: random.Random, max_size: int, degree: int, terms: int = 3) -> SchurExpansion:
    """サイズ max_size 以下の s_λ を terms 個まで選んだ整数係数の和"""
    pool = list(enumerate_partitions(max_size))
    coeffs = {}
    for lam in rng.sample(pool, min(terms, len(pool))):
        coeffs[lam] = rng.choice([c for c in range(-_COEFF_RANGE, _COEFF_RANGE + 1) if c])
    return SchurExpansion(degree, coeffs)


# ====================================
# f への作用
# ====================================
def pop_h_sides(i: int, j: int, sign: int, degree: int) -> tuple[SchurExpansion, SchurExpansion]:
    """
    (p₁⊥)^{j−1}(f_{i−1} ± f_{i+1}) と
    f_{i−j} ± f_{i+j} + Σ_{r=1}^{j−1} C(j−1, r)(f_{i−j+2r} ± f_{i+j−2r})
    """
    if j < 1:
        raise ValueError(f"j は 1 以上: {j}")
    top = degree - (j - 1)
    start = fcomb_to_schur(FComb({i - 1: 1}).terms, degree) + fcomb_to_schur(FComb({i + 1: sign}).terms, degree)
    lhs = p1_perp_power(start, j - 1).truncate(top)
    rhs = FComb({i - j: 1}) + FComb({i + j: sign})
    for r in range(1, j):
        rhs = rhs + (FComb({i - j + 2 * r: 1}) + FComb({i + j - 2 * r: sign})).scale(comb(j - 1, r))
    return lhs, fcomb_to_schur(rhs.terms, top)


def pop_p_sides(i: int, j: int, sign: int, degree: int) -> tuple[SchurExpansion, SchurExpansion]:
    """
    (p₁⊥)^{j−1}(f_{i−1} ± f_i) と
    f_{i−j} ± f_{i+j−1} + Σ_{r=1}^{j−1} C(j−1, r)(f_{i−j+2r} ± f_{i+j−2r−1})
    """
    if j < 1:
        raise ValueError(f"j は 1 以上: {j}")
    top = degree - (j - 1)
    start = fcomb_to_schur(FComb({i - 1: 1}).terms, degree) + fcomb_to_schur(FComb({i: sign}).terms, degree)
    lhs = p1_perp_power(start, j - 1).truncate(top)
    rhs = FComb({i - j: 1}) + FComb({i + j - 1: sign})
    for r in range(1, j):
        rhs = rhs + (FComb({i - j + 2 * r: 1}) + FComb({i + j - 2 * r - 1: sign})).scale(comb(j - 1, r))
    return lhs, fcomb_to_schur(rhs.terms, top)


def verify_skew_lemmas(
    degree: int,
    i_values: Iterable[int],
    j_max: int,
    *,
    seed: int = DEFAULT_SEED,
    trials: int = 10,
) -> list[VerifyReport]:
    """
    - (p₁⊥)^j f_i = Σ_r C(j, r) f_{i−j+2r}（置換規則の反復とも比べる）
    - 列操作の 2 つの変形（± の両方）
    - p₁⊥ の微分性（ランダムな積と e_2·e_3）
    - 随伴性、特殊化と積の可換性、次数がちょうど 1 下がること

    Args:
        degree: 切り捨て次数 D（D ≥ 2·j_max）
        i_values: f の添字
        j_max: p₁⊥ のべきの上限

    Raises:
        ValueError: D < 2·j_max
    """
    if j_max < 0 or degree < 2 * j_max:
        raise ValueError(f"D ≥ 2·j_max ≥ 0 が必要です: D={degree}, j_max={j_max}")
    i_values = list(i_values)
    reports: list[VerifyReport] = []

    for i in i_values:
        for j in range(j_max + 1):
            params = {"D": degree, "i": i, "j": j}
            with Stopwatch() as sw:
                top = degree - j
                lhs = p1_perp_power(f_series_schur(i, degree), j).truncate(top)
                closed = f_skew_power(j, i)
                rhs = fcomb_to_schur(closed.terms, top)
                iterated = FComb({i: 1})
                for _ in range(j):
                    iterated = iterated.apply_p1_perp()
            reports.append(_report("pop", params, lhs, rhs, sw))
            reports.append(_report("pop_rule", params, iterated, closed, sw))
            if j == 0:
                continue
            for sign in (1, -1):
                with Stopwatch() as sw:
                    h_sides = pop_h_sides(i, j, sign, degree)
                    p_sides = pop_p_sides(i, j, sign, degree)
                reports.append(_report("pop_h", {**params, "sign": sign}, *h_sides, sw))
                reports.append(_report("pop_p", {**params, "sign": sign}, *p_sides, sw))

    rng = random.Random(seed)
    half = degree // 2
    pairs = [(elementary(2, degree), elementary(3, degree))] if degree >= 5 else []
    pairs += [(random_element(rng, half, degree), random_element(rng, half, degree)) for _ in range(trials)]
    for trial, (a, b) in enumerate(pairs if degree >= 1 else []):
        with Stopwatch() as sw:
            lhs = p1_perp(multiply(a, b)).truncate(degree - 1)
            rhs = (multiply(p1_perp(a), b) + multiply(a, p1_perp(b))).truncate(degree - 1)
        reports.append(_report("derivation", {"D": degree, "trial": trial}, lhs, rhs, sw, seed))

    reports.extend(verify_adjointness(seed=seed))

    for trial in range(trials):
        a = random_element(rng, half, degree)
        b = random_element(rng, degree - half, degree)
        for n in range(1, _SPECIALIZE_MAX_N + 1):
            with Stopwatch() as sw:
                lhs = specialize(multiply(a, b), n)
                rhs = specialize(a, n) * specialize(b, n)
            reports.append(_report("specialize_product", {"D": degree, "n": n, "trial": trial}, lhs, rhs, sw, seed))

    for lam in enumerate_partitions(degree):
        if lam.size == 0:
            continue
        with Stopwatch() as sw:
            lowered = p1_perp(schur(lam, degree))
            sizes = {mu.size for mu in lowered.coeffs}
        reports.append(_report("degree_lowering", {"D": degree, "lambda": str(lam)}, sizes, {lam.size - 1}, sw))
    return reports


def verify_adjointness(
    pairs: int = ADJOINT_PAIRS,
    degree: int = ADJOINT_DEGREE,
    seed: int = DEFAULT_SEED,
) -> list[VerifyReport]:
    """⟨p₁⊥ a, b⟩ = ⟨a, s_{(1)}·b⟩（b は次数 D − 1 まで、s_{(1)}·b は Pieri で作る）"""
    if degree < 1:
        raise ValueError(f"D は 1 以上: {degree}")
    rng = random.Random(seed)
    reports = []
    for trial in range(pairs):
        a = random_element(rng, degree, degree)
        b = random_element(rng, degree - 1, degree)
        with Stopwatch() as sw:
            lhs = hall_inner(p1_perp(a), b)
            rhs = hall_inner(a, pieri_mul_e(b, 1))
        reports.append(_report("adjoint", {"D": degree, "trial": trial}, lhs, rhs, sw, seed))
    return reports
