#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
非同期実行ヘルパー
==================
検証タスクをプロセスプールに流し、結果を投入順で受け取る。

【構成】
- gather_in_pool: loop.run_in_executor + asyncio.Semaphore で並列数を絞り、
  asyncio.gather で投入順に結果を揃える。jobs == 1 ならプールを作らずその場で実行
- run_async: 既にイベントループが走っていればスレッドに逃がして実行する
- optimal_concurrency: タスク数と CPU 数から既定の並列数を決める

タスクは picklable な関数と引数の組で渡す（ProcessPoolExecutor の制約）。
"""

import asyncio
import atexit
import logging
import os
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, Callable, Optional, Sequence, TypeVar

T = TypeVar("T")

logger = logging.getLogger(__name__)

Call = tuple[Callable[..., Any], tuple]


def optimal_concurrency(total: int, cpu_count: Optional[int] = None) -> int:
    """タスク数に応じた既定の並列数

    Args:
        total: タスクの総数
        cpu_count: 使える CPU 数（None なら os.cpu_count()）

    Returns:
        1 以上 total 以下（total ≤ 0 なら 1）
    """
    if total <= 0:
        return 1
    cpus = cpu_count if cpu_count is not None else (os.cpu_count() or 1)
    if total <= 2:
        return 1               # プール起動のほうが高くつく
    return max(1, min(total, cpus, 8))


# 共有のスレッドプール（run_async 用、遅延初期化）
_executor: ThreadPoolExecutor | None = None


def _get_executor() -> ThreadPoolExecutor:
    """遅延初期化でスレッドプールを取得する。シャットダウン済みなら作り直す。"""
    global _executor
    try:
        is_shutdown = _executor._shutdown
    except AttributeError:
        is_shutdown = False
    if _executor is None or is_shutdown:
        _executor = ThreadPoolExecutor(max_workers=2, thread_name_prefix="async_runner")
        atexit.register(_cleanup_executor)
        logger.debug("ThreadPoolExecutor を初期化しました")
    return _executor


def _cleanup_executor():
    global _executor
    if _executor is not None:
        logger.debug("ThreadPoolExecutor をシャットダウンします")
        _executor.shutdown(wait=True)
        _executor = None


def _run_in_new_loop(coro):
    """新しいイベントループでコルーチンを実行（サブスレッド用）"""
    loop = asyncio.new_event_loop()
    try:
        return loop.run_until_complete(coro)
    finally:
        loop.close()


def run_async(coro) -> T:
    """
    コルーチンを実行して結果を返す。

    - 既存のイベントループが走っている場合: 新スレッドの新ループで実行
    - ない場合: asyncio.run()

    Examples:
        >>> async def answer():
        ...     return 42
        >>> run_async(answer())
        42
    """
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(coro)

    future = _get_executor().submit(_run_in_new_loop, coro)
    return future.result()


async def gather_in_pool(calls: Sequence[Call], jobs: int = 1) -> list[Any]:
    """
    (関数, 引数タプル) の列をプロセスプールで実行し、投入順で結果を返す。

    Args:
        calls: picklable な (fn, args) の列
        jobs: 同時実行数。1 以下ならプールを使わず順に実行する

    Returns:
        calls と同じ順の結果リスト（例外はそのまま送出される）
    """
    if not calls:
        return []
    if jobs <= 1:
        return [fn(*args) for fn, args in calls]

    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(jobs)
    logger.info("プロセスプールで %d タスクを実行します（並列数 %d）", len(calls), jobs)

    with ProcessPoolExecutor(max_workers=jobs) as pool:

        async def _one(fn: Callable[..., Any], args: tuple) -> Any:
            async with semaphore:
                return await loop.run_in_executor(pool, fn, *args)

        return await asyncio.gather(*(_one(fn, args) for fn, args in calls))
