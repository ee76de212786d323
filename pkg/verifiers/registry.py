#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
検証タスクのレジストリ
======================
SuiteConfig から検証タスクの列を作り、プロセスプールで実行してレポートを集める。

【動作】
1. 検証名を列挙子に解決（未知の名前は UsageError）
2. 検証ごとにパラメータ格子を展開して VerifyTask を作る
3. gather_in_pool で実行し、投入順に結果を並べる
4. 例外はタスク単位で ERROR レポートに変える（他のタスクは続行）

【使い方】
    from core.report_schemas import SuiteConfig
    from verifiers.registry import run_suite
    reports = await run_suite(SuiteConfig(theorems=["BK_even1"], n_values="1..3", w_values="1..2"))
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Any, Callable

from core.async_helpers import gather_in_pool
from core.constants import DEFAULT_TRIALS
from core.report_schemas import SuiteConfig
from core.run_audit import log_result
from verifiers.base import (
    CombinatorialId,
    MachineryCheck,
    PathEquation,
    TheoremId,
    VerifyReport,
    all_check_names,
    resolve_check_name,
)
from verifiers.identity_suite import verify_consistency, verify_identity
from verifiers.pfaffian_lab import (
    GordonVariant,
    verify_aux_lemmas,
    verify_gordon,
    verify_matrix_properties,
    verify_minor_summation,
)
from verifiers.skew_lemmas import verify_skew_lemmas
from verifiers.so_checks import verify_character_bridge, verify_kratt, verify_so_properties
from verifiers.syt_counting import verify_syt_methods
from verifiers.tableau_walks import (
    combinatorial_k_range,
    verify_combinatorial,
    verify_path_gf,
    verify_walk_properties,
)

logger = logging.getLogger(__name__)

# 小行列式の和公式は既定の試行回数、その他の乱択検証は件数を抑える
_SUITE_TRIALS = min(DEFAULT_TRIALS, 5)
_MAX_AUX_N = 8
_SKEW_I_VALUES = tuple(range(-1, 5))


class UsageError(ValueError):
    """設定の誤り（CLI では終了コード 2）"""
    pass


@dataclass(frozen=True)
class VerifyTask:
    """
    プロセスプールに渡す 1 単位。fn はモジュールレベルの関数（picklable）。
    """
    name: str
    fn: Callable[..., Any]
    args: tuple = ()
    params: dict = field(default_factory=dict)


def execute_task(task: VerifyTask) -> list[VerifyReport]:
    """タスクを実行し、レポートのリストを返す。例外は ERROR レポートにする"""
    try:
        result = task.fn(*task.args)
        reports = result if isinstance(result, list) else [result]
    except Exception as e:
        logger.error("検証中に例外: %s %s: %s: %s", task.name, task.params, type(e).__name__, e)
        reports = [VerifyReport.create_error(task.name, task.params, f"{type(e).__name__}: {e}")]
    for report in reports:
        log_result(
            report.theorem, report.params, report.equal, report.elapsed_ms,
            seed=report.seed, status=report.status.value,
        )
    return reports


# ====================================
# タスクの展開
# ====================================
def _positive(values: list[int]) -> list[int]:
    return [v for v in values if v >= 1]


def _identity_tasks(theorem: TheoremId, cfg: SuiteConfig) -> list[VerifyTask]:
    return [
        VerifyTask(theorem.value, verify_identity, (theorem, [n], [w], cfg.k_values), {"n": n, "w": w})
        for n in _positive(cfg.n_values)
        for w in cfg.w_values
    ]


def _combinatorial_tasks(theorem: CombinatorialId, cfg: SuiteConfig) -> list[VerifyTask]:
    tasks = []
    ns = cfg.n_values if theorem.counts_tableaux else _positive(cfg.n_values)
    for n in ns:
        for w in cfg.w_values:
            for k in combinatorial_k_range(theorem, n, w):
                if k is not None and cfg.k_values is not None and k not in cfg.k_values:
                    continue
                params = {"n": n, "w": w, "k": k}
                tasks.append(VerifyTask(theorem.value, verify_combinatorial, (theorem, n, w, k), params))
    return tasks


def _path_tasks(eq: PathEquation, cfg: SuiteConfig) -> list[VerifyTask]:
    top = max(cfg.w_values) + 1
    return [
        VerifyTask(eq.value, verify_path_gf, (eq, i, j, n), {"i": i, "j": j, "n": n})
        for n in _positive(cfg.n_values)
        for i in range(1, top + 1)
        for j in range(1, top + 1)
    ]


def _machinery_tasks(check: MachineryCheck, cfg: SuiteConfig) -> list[VerifyTask]:
    name = check.value
    ns, ws = _positive(cfg.n_values), _positive(cfg.w_values)
    n_max, w_max = max(cfg.n_values), max(max(cfg.w_values), 1)
    seed = cfg.seed
    m = MachineryCheck

    if check is m.CONSISTENCY:
        return [VerifyTask(name, verify_consistency, (n, w), {"n": n, "w": w}) for n in ns for w in cfg.w_values]
    if check is m.GORDON:
        return [
            VerifyTask(name, verify_gordon, (w, v), {"w": w, "variant": v.value})
            for w in ws for v in GordonVariant
        ]
    if check is m.MINOR_SUMMATION:
        return [
            VerifyTask(name, verify_minor_summation, (mm, p, DEFAULT_TRIALS, seed), {"m": mm, "p": p})
            for mm in (2, 4) for p in range(mm, 7)
        ]
    if check is m.AUX_LEMMAS:
        n_aux = min(max(n_max, 2), _MAX_AUX_N)
        return [VerifyTask(name, verify_aux_lemmas, (n_aux, _SUITE_TRIALS, seed), {"n_max": n_aux})]
    if check is m.MATRIX_PROPERTIES:
        return [VerifyTask(name, verify_matrix_properties, (_SUITE_TRIALS, seed), {})]
    if check is m.SKEW_LEMMAS:
        j_max = min(cfg.degree // 2, 3)
        return [VerifyTask(
            name, partial(verify_skew_lemmas, seed=seed), (cfg.degree, _SKEW_I_VALUES, j_max),
            {"D": cfg.degree, "j_max": j_max},
        )]
    if check is m.SYT_METHODS:
        return [
            VerifyTask(name, verify_syt_methods, (cfg.order, w, cfg.order), {"n_max": cfg.order, "w": w})
            for w in ws
        ]
    if check is m.KRATT:
        cs = cfg.c_values or [Fraction(twice_c, 2) for twice_c in range(1, 2 * w_max + 1)]
        return [
            VerifyTask(name, verify_kratt, (c, k, n), {"c": str(c), "k": k, "n": n})
            for c in cs
            for n in ns
            for k in range(int(2 * c) + 1)
        ]
    if check is m.CHARACTER_BRIDGE:
        return [
            VerifyTask(name, verify_character_bridge, (w, k, n), {"w": w, "k": k, "n": n})
            for w in ws for n in ns for k in range(w + 1)
        ]
    if check is m.SO_PROPERTIES:
        return [VerifyTask(name, verify_so_properties, (w_max, max(n_max, 1)), {})]
    return [VerifyTask(name, verify_walk_properties, (n_max, w_max), {"n_max": n_max, "w_max": w_max})]


def resolve_names(cfg: SuiteConfig) -> list[Enum]:
    """
    Raises:
        UsageError: 未知の検証名
    """
    names = all_check_names() if cfg.runs_all else cfg.theorems
    resolved = []
    for name in names:
        try:
            resolved.append(resolve_check_name(name))
        except ValueError as e:
            raise UsageError(str(e)) from e
    return resolved


def build_tasks(cfg: SuiteConfig) -> list[VerifyTask]:
    """設定から実行順のタスク列を作る"""
    tasks: list[VerifyTask] = []
    for member in resolve_names(cfg):
        if isinstance(member, TheoremId):
            tasks.extend(_identity_tasks(member, cfg))
        elif isinstance(member, CombinatorialId):
            tasks.extend(_combinatorial_tasks(member, cfg))
        elif isinstance(member, PathEquation):
            tasks.extend(_path_tasks(member, cfg))
        else:
            tasks.extend(_machinery_tasks(member, cfg))
    logger.info("検証タスク %d 件を作成しました", len(tasks))
    return tasks


async def run_suite(cfg: SuiteConfig) -> list[VerifyReport]:
    """
    設定された検証を全て実行し、タスクの投入順にレポートを並べて返す。

    Raises:
        UsageError: 未知の検証名
    """
    tasks = build_tasks(cfg)
    results = await gather_in_pool([(execute_task, (task,)) for task in tasks], cfg.jobs)
    reports = [report for batch in results for report in batch]
    for report in reports:
        report.seed = cfg.seed if report.seed is None else report.seed
    return reports
