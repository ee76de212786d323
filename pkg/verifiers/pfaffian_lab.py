#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Pfaffian まわりの補題の検証
===========================
小行列式の和公式、Pfaffian を行列式に直す 4 通りの変形、
部分 Pfaffian の閉じた式、行列式・Pfaffian 自体の性質を確かめる。

【使い方】
    from verifiers.pfaffian_lab import verify_gordon
    reports = verify_gordon(2, "G1")

乱択の検証は random.Random(seed) を使い、seed をレポートに残す。
"""

import logging
import random
from enum import Enum
from itertools import combinations
from typing import Hashable

from core.constants import DEFAULT_SEED, DEFAULT_TRIALS
from core.partitions import (
    conjugate,
    enumerate_partitions,
    index_sequence,
    odd_counts,
    partition_from_index_sequence,
)
from core.poly_ring import MultiPoly, as_poly
from core.ring_matrix import RingMatrix, SkewSymbolPoly, determinant, pfaffian, permutation_sign
from core.symfunc import elementary, schur_poly
from verifiers.base import MachineryCheck, Stopwatch, VerifyReport

logger = logging.getLogger(__name__)

ZERO = "0"
ZERO_PRIME = "0'"
_ENTRY_RANGE = 5
_PF_SIZES = (2, 4, 6)


class GordonVariant(Enum):
    G1 = "G1"
    G2 = "G2"    # 右辺に 1/2 が付く。Pf を 2 倍して比べる
    G3 = "G3"
    G4 = "G4"


# ====================================
# 乱数行列
# ====================================
def random_skew(rng: random.Random, size: int) -> RingMatrix:
    """成分が ±_ENTRY_RANGE の整数交代行列"""
    labels = tuple(range(1, size + 1))
    upper = {(i, j): rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for i in range(size) for j in range(i + 1, size)}

    def entry(r, c):
        i, j = labels.index(r), labels.index(c)
        if i == j:
            return 0
        return upper[(i, j)] if i < j else -upper[(j, i)]

    return RingMatrix.from_function(labels, labels, entry)


def random_matrix(rng: random.Random, rows: int, cols: int) -> RingMatrix:
    return RingMatrix.from_rows([
        [rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(cols)] for _ in range(rows)
    ])


# ====================================
# Gordon の変形
# ====================================
def toeplitz_skew(w: int) -> RingMatrix:
    """(z_{j−i})_{1≤i,j≤2w}"""
    labels = tuple(range(1, 2 * w + 1))
    return RingMatrix.from_function(labels, labels, lambda i, j: SkewSymbolPoly.z(j - i))


def _z_sum(indices) -> SkewSymbolPoly:
    total = SkewSymbolPoly()
    for index, sign in indices:
        total = total + SkewSymbolPoly.z(index) * sign
    return total


def gordon_entry(variant: GordonVariant, i: int, j: int) -> SkewSymbolPoly:
    """w×w 行列式の (i, j) 成分"""
    if variant is GordonVariant.G1:
        return _z_sum((i - j + 1 + 2 * t, 1) for t in range(j))
    if variant is GordonVariant.G2:
        if j == 1:
            return _z_sum(((i, 1), (i - 2, -1)))
        return _z_sum(((i - j + 1, 1), (i - j - 1, -1), (i + j - 1, 1), (i + j - 3, -1)))
    if variant is GordonVariant.G3:
        return _z_sum(
            pair for k in range(1, 2 * j) for pair in ((i - j + k, 1), (i - j + k - 1, 1))
        )
    sign = 1
    pairs = []
    for k in range(1, 2 * j):
        pairs.extend(((i - j + k, sign), (i - j + k - 1, -sign)))
        sign = -sign
    return _z_sum(pairs)


def gordon_determinant(w: int, variant: GordonVariant | str) -> SkewSymbolPoly:
    variant = GordonVariant(variant)
    labels = tuple(range(1, w + 1))
    det = determinant(RingMatrix.from_function(labels, labels, lambda i, j: gordon_entry(variant, i, j)))
    return det if isinstance(det, SkewSymbolPoly) else SkewSymbolPoly.constant(det)


def verify_gordon(w: int, variant: GordonVariant | str) -> VerifyReport:
    """
    Pf(z_{j−i})_{2w} と w×w 行列式が記号として一致するか確かめる。

    Args:
        w: 1 以上
        variant: G1..G4（G2 は Pf を 2 倍して比べる）
    """
    variant = GordonVariant(variant)
    if w < 1:
        raise ValueError(f"w は 1 以上が必要です: w={w}")
    with Stopwatch() as sw:
        pf = pfaffian(toeplitz_skew(w))
        if variant is GordonVariant.G2:
            pf = pf * 2
        det = gordon_determinant(w, variant)
    report = VerifyReport.create_comparison(
        MachineryCheck.GORDON.value, {"w": w, "variant": variant.value}, pf, det, elapsed_ms=sw.ms,
    )
    if not report.equal:
        logger.error("Gordon %s (w=%d) で不一致: %s != %s", variant.value, w, pf, det)
    return report


# ====================================
# 小行列式の和公式
# ====================================
def minor_summation_sides(a: RingMatrix, m: RingMatrix):
    """Σ_K Pf(A^K)·det(M_K) と Pf(M·A·Mᵀ) の組"""
    size = len(m.rows)
    total = 0
    for subset in combinations(a.rows, size):
        sub_pf = pfaffian(a.principal(subset), check=False)
        if sub_pf != 0:
            total = total + sub_pf * determinant(m.submatrix(m.rows, subset))
    return total, pfaffian(m.matmul(a).matmul(m.transpose()))


def verify_minor_summation(
    m: int,
    p: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> list[VerifyReport]:
    """
    乱数の交代行列 A（p×p）と行列 M（m×p）で小行列式の和公式を確かめる。

    Raises:
        ValueError: m が奇数、または 2 ≤ m ≤ p ≤ 8 を満たさない場合
    """
    if m % 2 or not 2 <= m <= p <= 8:
        raise ValueError(f"m は偶数で 2 ≤ m ≤ p ≤ 8 が必要です: m={m}, p={p}")
    rng = random.Random(seed)
    reports = []
    for trial in range(trials):
        a = random_skew(rng, p)
        mat = random_matrix(rng, m, p)
        with Stopwatch() as sw:
            lhs, rhs = minor_summation_sides(a, mat)
        reports.append(VerifyReport.create_comparison(
            MachineryCheck.MINOR_SUMMATION.value, {"m": m, "p": p, "trial": trial},
            lhs, rhs, elapsed_ms=sw.ms, seed=seed,
        ))
    failed = sum(1 for r in reports if not r.equal)
    if failed:
        logger.error("小行列式の和公式が %d/%d 試行で不一致 (m=%d, p=%d)", failed, trials, m, p)
    return reports


# ====================================
# 補助補題
# ====================================
def sum_det_sides(vectors, betas, gammas):
    """
    行 β_i v_{i−1} + γ_i v_i を持つ行列式と、
    Σ_k ∏_{i≤k} β_i ∏_{j>k} γ_j det(v_k を除いた行) の組。
    """
    n = len(betas)
    rows = [
        [betas[i - 1] * a + gammas[i - 1] * b for a, b in zip(vectors[i - 1], vectors[i])]
        for i in range(1, n + 1)
    ]
    lhs = determinant(rows)
    rhs = 0
    for k in range(n + 1):
        coeff = 1
        for i in range(1, k + 1):
            coeff *= betas[i - 1]
        for j in range(k + 1, n + 1):
            coeff *= gammas[j - 1]
        rhs += coeff * determinant([v for idx, v in enumerate(vectors) if idx != k])
    return lhs, rhs


def parity_matrix(n: int) -> RingMatrix:
    """j − i が奇数の上三角成分だけが 1 の交代行列"""
    def entry(i, j):
        if i == j or (j - i) % 2 == 0:
            return 0
        return 1 if i < j else -1

    labels = tuple(range(1, n + 1))
    return RingMatrix.from_function(labels, labels, entry)


def signed_pair_matrix(signs: tuple[int, ...]) -> RingMatrix:
    """
    u₁..u_n 上の交代行列。i < j で
    ε_iε_j = (−1)^{i+j+1} なら 1 + u_iu_j、そうでなければ u_i + u_j。
    """
    n = len(signs)
    u = [MultiPoly.variable(i, n) for i in range(1, n + 1)]

    def upper(i, j):
        if signs[i - 1] * signs[j - 1] == (-1) ** (i + j + 1):
            return 1 + u[i - 1] * u[j - 1]
        return u[i - 1] + u[j - 1]

    def entry(i, j):
        if i == j:
            return MultiPoly.zero(n)
        return upper(i, j) if i < j else -upper(j, i)

    labels = tuple(range(1, n + 1))
    return RingMatrix.from_function(labels, labels, entry)


def signed_pair_pfaffian(signs: tuple[int, ...]) -> MultiPoly:
    """2^{n/2−1}(∏_{ε=+1} u_i + ∏_{ε=−1} u_i)"""
    n = len(signs)
    plus = MultiPoly.monomial([1 if s > 0 else 0 for s in signs], n)
    minus = MultiPoly.monomial([1 if s < 0 else 0 for s in signs], n)
    return (plus + minus) * 2 ** (n // 2 - 1)


def _label_rank(label: Hashable) -> int:
    if label == ZERO:
        return -2
    if label == ZERO_PRIME:
        return -1
    return int(label)


def weight_matrix_entry(r: Hashable, s: Hashable) -> MultiPoly:
    """
    0 < 0′ < 1 < 2 < … 上の無限交代行列の (r, s) 成分（u の多項式）。

    a_{0,0′} = 0、a_{0,j} = 1+u、a_{0′,j} = (−1)^{j−1}(1−u)、
    a_{i,j} = 1+u²（j−i 奇数）/ 2u（j−i 偶数）。
    """
    u = MultiPoly.u_variable(0)
    one = MultiPoly.constant(1, 0, has_u=True)
    if _label_rank(r) == _label_rank(s):
        return MultiPoly.zero(0, has_u=True)
    if _label_rank(r) > _label_rank(s):
        return -weight_matrix_entry(s, r)
    if r == ZERO:
        return MultiPoly.zero(0, has_u=True) if s == ZERO_PRIME else one + u
    if r == ZERO_PRIME:
        return (one - u) * (-1) ** (int(s) - 1)
    return one + u * u if (int(s) - int(r)) % 2 else u * 2


def weight_subpfaffian(labels: tuple) -> MultiPoly:
    """必要なラベルの主小行列だけを組み立てて Pf を取る"""
    ordered = tuple(sorted(labels, key=_label_rank))
    sub = RingMatrix.from_function(ordered, ordered, weight_matrix_entry)
    return as_poly(pfaffian(sub, check=False), 0, has_u=True)


def weight_subpfaffian_expected(prefix: tuple, h: int, r: int) -> MultiPoly:
    """接頭辞ごとの閉じた式"""
    u = MultiPoly.u_variable(0)
    if prefix == ():
        return (u ** r + u ** (2 * h - r)) * 2 ** (h - 1)
    if prefix == (ZERO, ZERO_PRIME):
        return (u ** r - u ** (2 * h - r)) * 2 ** h
    if prefix == (ZERO,):
        return (u ** r + u ** (2 * h + 1 - r)) * 2 ** h
    return (u ** r - u ** (2 * h + 1 - r)) * 2 ** h


def elementary_block(m: int, max_col: int, n: int) -> RingMatrix:
    """
    行 0, 0′, 1..m、列 0, 0′, 1..max_col の区分行列。
    左上は単位行列、右下は (e_{c−r})、ほかは 0。
    """
    rows = (ZERO, ZERO_PRIME) + tuple(range(1, m + 1))
    cols = (ZERO, ZERO_PRIME) + tuple(range(1, max_col + 1))

    def entry(r, c):
        r_special, c_special = r in (ZERO, ZERO_PRIME), c in (ZERO, ZERO_PRIME)
        if r_special and c_special:
            return 1 if r == c else 0
        if r_special or c_special:
            return 0
        return elementary(c - r, n)

    return RingMatrix.from_function(rows, cols, entry)


def _aux_report(check: str, params: dict, lhs, rhs, sw: Stopwatch, seed=None) -> VerifyReport:
    return VerifyReport.create_comparison(
        MachineryCheck.AUX_LEMMAS.value, {"check": check, **params}, lhs, rhs, elapsed_ms=sw.ms, seed=seed,
    )


def verify_aux_lemmas(
    n_max: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    nvars: int = 3,
) -> list[VerifyReport]:
    """
    - 隣接する行の一次結合の行列式の展開（乱数、n ≤ n_max）
    - 奇偶行列の Pfaffian = 2^{n/2−1}（偶数 n ≤ n_max）
    - 符号つき行列の Pfaffian（u₁..u_n、n ≤ min(n_max, 6)）
    - 無限交代行列の部分 Pfaffian（|μ| ≤ 4, h ≤ 2）
    - 区分行列の小行列式 = s_{μ′} または 0（m ≤ min(n_max, 3)）

    Raises:
        ValueError: n_max が 0..8 の範囲外
    """
    if not 0 <= n_max <= 8:
        raise ValueError(f"n_max は 0..8 の範囲: {n_max}")
    rng = random.Random(seed)
    reports: list[VerifyReport] = []

    for n in range(1, n_max + 1):
        for trial in range(trials):
            vectors = [[rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(n)] for _ in range(n + 1)]
            betas = [rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(n)]
            gammas = [rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(n)]
            with Stopwatch() as sw:
                lhs, rhs = sum_det_sides(vectors, betas, gammas)
            reports.append(_aux_report("sum_det", {"n": n, "trial": trial}, lhs, rhs, sw, seed))

    for n in range(2, n_max + 1, 2):
        with Stopwatch() as sw:
            pf = pfaffian(parity_matrix(n))
        reports.append(_aux_report("parity_pfaffian", {"n": n}, pf, 2 ** (n // 2 - 1), sw))

    for n in range(2, min(n_max, 6) + 1, 2):
        for trial in range(trials):
            signs = tuple(rng.choice((1, -1)) for _ in range(n))
            with Stopwatch() as sw:
                pf = as_poly(pfaffian(signed_pair_matrix(signs)), n)
                expected = signed_pair_pfaffian(signs)
            reports.append(_aux_report(
                "signed_pair_pfaffian", {"n": n, "signs": list(signs)}, pf, expected, sw, seed,
            ))

    for h in range(0, 3):
        cases = []
        if h >= 1:
            cases += [((), 2 * h), ((ZERO, ZERO_PRIME), 2 * h)]
        cases += [((ZERO,), 2 * h + 1), ((ZERO_PRIME,), 2 * h + 1)]
        for prefix, m in cases:
            for mu in enumerate_partitions(4, length_bound=m):
                labels = prefix + index_sequence(mu, m)
                with Stopwatch() as sw:
                    pf = weight_subpfaffian(labels)
                    expected = weight_subpfaffian_expected(prefix, h, odd_counts(mu).r)
                reports.append(_aux_report(
                    "weight_subpfaffian", {"prefix": list(prefix), "h": h, "mu": str(mu)}, pf, expected, sw,
                ))

    for m in range(1, min(n_max, 3) + 1):
        max_col = m + 2
        block = elementary_block(m, max_col, nvars)
        body = tuple(range(1, m + 1))
        columns = (ZERO, ZERO_PRIME) + tuple(range(1, max_col + 1))
        for cols in combinations(columns, m):
            with Stopwatch() as sw:
                minor = as_poly(determinant(block.submatrix(body, cols)), nvars)
                if ZERO in cols or ZERO_PRIME in cols:
                    expected = MultiPoly.zero(nvars)
                else:
                    mu = partition_from_index_sequence(cols)
                    expected = schur_poly(conjugate(mu), nvars)
            reports.append(_aux_report(
                "elementary_minor", {"m": m, "prefix": [], "cols": [str(c) for c in cols]}, minor, expected, sw,
            ))
        for prefix in ((ZERO, ZERO_PRIME), (ZERO,), (ZERO_PRIME,)):
            for cols in combinations(range(1, max_col + 1), m):
                with Stopwatch() as sw:
                    minor = as_poly(determinant(block.submatrix(prefix + body, prefix + cols)), nvars)
                    expected = schur_poly(conjugate(partition_from_index_sequence(cols)), nvars)
                reports.append(_aux_report(
                    "elementary_minor",
                    {"m": m, "prefix": list(prefix), "cols": [str(c) for c in cols]}, minor, expected, sw,
                ))

    failed = [r for r in reports if not r.equal]
    for r in failed:
        logger.error("補助補題の検証に失敗: %s", r.params)
    logger.info("補助補題: %d 件中 %d 件一致", len(reports), len(reports) - len(failed))
    return reports


# ====================================
# 行列式・Pfaffian の性質
# ====================================
def _replace_row(rows: list[list[int]], index: int, new_row: list[int]) -> list[list[int]]:
    out = [list(r) for r in rows]
    out[index] = list(new_row)
    return out


def verify_matrix_properties(
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    max_size: int = 4,
) -> list[VerifyReport]:
    """
    - Pf² = det（乱数の整数交代行列と、記号成分の (z_{j−i})）
    - 行列式の行についての多重線形性と交代性
    - ラベルの並べ替えで Pf が置換の符号倍になる
    """
    rng = random.Random(seed)
    name = MachineryCheck.MATRIX_PROPERTIES.value
    reports: list[VerifyReport] = []

    for size in _PF_SIZES:
        for trial in range(trials):
            a = random_skew(rng, size)
            with Stopwatch() as sw:
                pf = pfaffian(a)
                det = determinant(a)
            reports.append(VerifyReport.create_comparison(
                name, {"check": "pf_squared", "size": size, "trial": trial}, pf * pf, det,
                elapsed_ms=sw.ms, seed=seed,
            ))
    for w in (1, 2):
        z = toeplitz_skew(w)
        with Stopwatch() as sw:
            pf = pfaffian(z)
            det = determinant(z)
        reports.append(VerifyReport.create_comparison(
            name, {"check": "pf_squared_symbolic", "size": 2 * w}, pf * pf, det, elapsed_ms=sw.ms,
        ))

    for size in range(1, max_size + 1):
        for trial in range(trials):
            rows = [[rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(size)] for _ in range(size)]
            index = rng.randrange(size)
            x = [rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(size)]
            y = [rng.randint(-_ENTRY_RANGE, _ENTRY_RANGE) for _ in range(size)]
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            combined = [a * p + b * q for p, q in zip(x, y)]
            lhs = determinant(_replace_row(rows, index, combined))
            rhs = a * determinant(_replace_row(rows, index, x)) + b * determinant(_replace_row(rows, index, y))
            reports.append(VerifyReport.create_comparison(
                name, {"check": "multilinear", "size": size, "trial": trial}, lhs, rhs, seed=seed,
            ))
            if size >= 2:
                i, j = rng.sample(range(size), 2)
                swapped = [list(r) for r in rows]
                swapped[i], swapped[j] = swapped[j], swapped[i]
                repeated = _replace_row(rows, j, rows[i])
                ok = determinant(swapped) == -determinant(rows) and determinant(repeated) == 0
                reports.append(VerifyReport.create_check(
                    name, {"check": "alternating", "size": size, "trial": trial}, ok, seed=seed,
                ))

    for size in _PF_SIZES:
        for trial in range(trials):
            a = random_skew(rng, size)
            perm = list(range(1, size + 1))
            rng.shuffle(perm)
            lhs = pfaffian(a.principal(perm))
            rhs = permutation_sign([p - 1 for p in perm]) * pfaffian(a)
            reports.append(VerifyReport.create_comparison(
                name, {"check": "label_permutation", "size": size, "trial": trial, "perm": perm},
                lhs, rhs, seed=seed,
            ))
    return reports


__all__ = [
    "GordonVariant",
    "gordon_determinant",
    "minor_summation_sides",
    "parity_matrix",
    "signed_pair_matrix",
    "signed_pair_pfaffian",
    "sum_det_sides",
    "toeplitz_skew",
    "verify_aux_lemmas",
    "verify_gordon",
    "verify_matrix_properties",
    "verify_minor_summation",
    "weight_matrix_entry",
    "weight_subpfaffian",
    "elementary_block",
]
