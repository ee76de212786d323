#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
上下盤・振動盤・重み付き格子路
==============================
分割の列として表した組合せ構造を列挙する。

【構造】
- UpDownTableau: T₀ ⊆ T₁ ⊇ T₂ ⊆ … ⊇ T₂ₙ、隣同士は縦帯だけ異なり、長さは w 以下
- MarkedUpDown: 上下盤と印の集合 S ⊆ [n] の組（クラスごとに S の条件が違う）
- VacillatingTableau: 隣同士が高々 1 マス異なる分割の列（Weyl 領域の歩道と同一視）
- WeightedLatticePath: 垂直・前進対角・後退対角の 3 種のステップからなる格子路

【使い方】
    from core.tableaux import enumerate_ud, enumerate_walks, WalkClass
    for t, weight in enumerate_ud(2, 1, Partition.of(1), Partition.empty()):
        ...
    sum(1 for _ in enumerate_walks(WalkClass.VT_GT, 4, 1, empty, empty))   # 3
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import chain, combinations
from typing import Iterable, Iterator, Optional

from core.partitions import (
    CellStep,
    Partition,
    add_vertical_strips,
    is_vertical_strip,
    one_cell_neighbors,
    remove_vertical_strips,
)
from core.poly_ring import MultiPoly

logger = logging.getLogger(__name__)

Point = tuple[int, int]


class MarkClass(Enum):
    """印付き上下盤のクラス"""
    MUD = "mud"            # S ⊆ [n] は自由
    MUD_O = "mud_o"        # 山は印必須、長さ < w の奇数位置は印禁止
    MUD_STAR = "mud_star"  # S ⊆ E_w(T)
    MUD_LT = "mud_lt"      # 全ての長さ < w、S は自由
    MUD_1 = "mud_1"        # E_w ≠ ∅、S ⊆ E_w ∖ {min E_w}
    MUD_0E = "mud_0e"      # E_w = ∅、S = ∅、山の数が偶数
    MUD_0O = "mud_0o"      # E_w = ∅、S = ∅、山の数が奇数
    MUD_EE = "mud_ee"      # MUD_1 ∪ MUD_0E
    MUD_EO = "mud_eo"      # MUD_1 ∪ MUD_0O


class MarkRule(Enum):
    """印の重みの付け方"""
    NONE = "none"                # 1
    PLAIN = "plain"              # ∏ x_j
    SIGNED = "signed"            # ∏ (−x_j)
    NEG_SQUARE = "neg_square"    # ∏ (−x_j²)


class WalkClass(Enum):
    """振動盤のクラス"""
    VT = "vt"                # ゼロステップ自由
    VT_GT = "vt_gt"          # ゼロステップは長さ w のときだけ
    VT_EU = "vt_eu"          # ゼロステップは長さ < w のときだけ
    MVT_STAR = "mvt_star"    # ゼロステップなし、印は x_w = 0 から出る +e_w のみ
    MVT_0 = "mvt_0"          # MVT_STAR のうち最初の +e_w に印がない
    MVT_1 = "mvt_1"          # MVT_STAR のうち最初の +e_w に印がある


class PathClass(Enum):
    """格子路のクラス"""
    L = "L"                          # 領域制約なし
    L_T = "L_t"                      # 偶数の高さで列 ≥ t
    L_ODD_MARKED = "L_odd_marked"    # L_t と奇分岐点の印
    L_EVEN_MARKED = "L_even_marked"  # L_t と偶分岐点の印


def _subsets(items: Iterable[int]) -> Iterator[frozenset[int]]:
    items = sorted(items)
    return (
        frozenset(c)
        for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))
    )


# ====================================
# 上下盤
# ====================================
@dataclass(frozen=True)
class UpDownTableau:
    """
    w-上下盤（長さ 2n）。

    Raises:
        ValueError: 包含の向き・縦帯・長さの条件のどれかを満たさない場合
    """
    w: int
    shapes: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        if len(self.shapes) % 2 == 0:
            raise ValueError(f"上下盤の長さは偶数（分割は奇数個）: {len(self.shapes)} 個")
        for i, shape in enumerate(self.shapes):
            if shape.length > self.w:
                raise ValueError(f"T_{i}={shape} の長さが w={self.w} を超えています")
        for i in range(1, len(self.shapes)):
            prev, cur = self.shapes[i - 1], self.shapes[i]
            inner, outer = (prev, cur) if i % 2 else (cur, prev)
            if not is_vertical_strip(inner, outer):
                raise ValueError(f"T_{i - 1}={prev} と T_{i}={cur} が縦帯で隣接していません")

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    @property
    def start(self) -> Partition:
        return self.shapes[0]

    @property
    def end(self) -> Partition:
        return self.shapes[-1]

    def exponents(self) -> tuple[int, ...]:
        """x_i の指数 −|T₂ᵢ₋₂| + 2|T₂ᵢ₋₁| − |T₂ᵢ|"""
        sizes = [s.size for s in self.shapes]
        return tuple(
            -sizes[2 * i - 2] + 2 * sizes[2 * i - 1] - sizes[2 * i]
            for i in range(1, self.n + 1)
        )

    def weight(self, nvars: Optional[int] = None) -> MultiPoly:
        """ω(T)。nvars は n 以上（余った変数の指数は 0）"""
        nvars = self.n if nvars is None else nvars
        if nvars < self.n:
            raise ValueError(f"変数の数 {nvars} は n={self.n} 以上が必要です")
        exps = list(self.exponents()) + [0] * (nvars - self.n)
        return MultiPoly.monomial(exps, nvars)

    def lengths(self) -> tuple[int, ...]:
        return tuple(s.length for s in self.shapes)

    def to_path_family(self) -> tuple[tuple[Point, ...], ...]:
        """
        P_i（i = 1..w）は点 ((T_j)_{w+1−i} + i, j) をたどる。
        列は各高さで狭義増加になる。
        """
        return tuple(
            tuple((shape.part(self.w - i) + i, j) for j, shape in enumerate(self.shapes))
            for i in range(1, self.w + 1)
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.shapes) + ")"


@dataclass(frozen=True)
class PeakProfile:
    """
    長さの山の情報。

    peaks / full は奇数位置 2j−1、e_w は添字 j の集合。
    """
    peaks: frozenset[int]
    full: frozenset[int]
    e_w: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.peaks)

    @property
    def all_full(self) -> bool:
        return self.peaks == self.full

    def peak_steps(self) -> frozenset[int]:
        """山の位置 2j−1 を j に直したもの"""
        return frozenset((pos + 1) // 2 for pos in self.peaks)


def classify_peaks(t: UpDownTableau) -> PeakProfile:
    """
    山 {2j−1 : ℓ(T₂ⱼ₋₂) < ℓ(T₂ⱼ₋₁) > ℓ(T₂ⱼ)}、そのうち長さ w のもの、
    E_w = {j : ℓ(T₂ⱼ₋₂) < ℓ(T₂ⱼ₋₁) = ℓ(T₂ⱼ) = w} を求める。
    """
    lengths = t.lengths()
    peaks, full, e_w = set(), set(), set()
    for j in range(1, t.n + 1):
        before, mid, after = lengths[2 * j - 2], lengths[2 * j - 1], lengths[2 * j]
        if before < mid > after:
            peaks.add(2 * j - 1)
            if mid == t.w:
                full.add(2 * j - 1)
        if before < mid == after == t.w:
            e_w.add(j)
    return PeakProfile(frozenset(peaks), frozenset(full), frozenset(e_w))


def enumerate_ud(
    n: int,
    w: int,
    mu: Partition,
    nu: Partition,
    *,
    exponent_cap: Optional[int] = None,
) -> Iterator[tuple[UpDownTableau, MultiPoly]]:
    """
    UD_n(w; μ → ν) を深さ優先で列挙し、(T, ω(T)) を返す。

    残りのステップで |ν| に届かない枝は刈る。exponent_cap を与えると
    ω(T) の指数がそれを超える枝も刈る（x₁⋯x_n の係数だけ欲しいときに使う）。

    Args:
        n: 変数の数（長さは 2n）
        w: 行数の上限
        mu, nu: 始点と終点

    Returns:
        (UpDownTableau, 単項式 ω(T)) のイテレータ
    """
    if n < 0 or w < 0:
        raise ValueError(f"n と w は 0 以上: n={n}, w={w}")
    if mu.length > w or nu.length > w:
        return
    shapes: list[Partition] = [mu]
    exps: list[int] = []

    def _rec(pos: int):
        if pos == 2 * n:
            if shapes[-1] == nu:
                t = UpDownTableau(w, tuple(shapes))
                yield t, MultiPoly.monomial(exps, n)
            return
        current = shapes[-1]
        remaining = 2 * n - pos - 1
        ups = (remaining + 1) // 2 if pos % 2 else remaining // 2
        downs = remaining - ups
        candidates = (
            remove_vertical_strips(current) if pos % 2 else add_vertical_strips(current, w)
        )
        for nxt in candidates:
            size = nxt.size
            if size + w * ups < nu.size or size - w * downs > nu.size:
                continue
            shapes.append(nxt)
            if pos % 2:
                e = -shapes[-3].size + 2 * shapes[-2].size - size
                if exponent_cap is None or e <= exponent_cap:
                    exps.append(e)
                    yield from _rec(pos + 1)
                    exps.pop()
            else:
                yield from _rec(pos + 1)
            shapes.pop()

    yield from _rec(0)


def count_nonintersecting_families(n: int, w: int, mu: Partition, nu: Partition) -> int:
    """
    w 本の非交差格子路の組を座標だけで数える。

    P_i は (μ_{w+1−i}+i, 0) から (ν_{w+1−i}+i, 2n) へ、偶数の高さでは前進か垂直、
    奇数の高さでは後退か垂直に進み、偶数の高さで列 ≥ 1。
    同じ高さの列が狭義増加なら交わらない。
    """
    if mu.length > w or nu.length > w:
        return 0
    start = tuple(mu.part(w - i) + i for i in range(1, w + 1))
    goal = tuple(nu.part(w - i) + i for i in range(1, w + 1))
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def _rec(height: int, cols: tuple[int, ...]) -> int:
        if height == 2 * n:
            return 1 if cols == goal else 0
        key = (height, cols)
        if key in memo:
            return memo[key]
        delta = 1 if height % 2 == 0 else -1
        total = 0
        for moves in range(1 << w):
            nxt = tuple(c + delta if moves >> i & 1 else c for i, c in enumerate(cols))
            if any(a >= b for a, b in zip(nxt, nxt[1:])):
                continue
            if (height + 1) % 2 == 0 and nxt and nxt[0] < 1:
                continue
            total += _rec(height + 1, nxt)
        memo[key] = total
        return total

    return _rec(0, start)


# ====================================
# 印付き上下盤
# ====================================
@dataclass(frozen=True)
class MarkedUpDown:
    base: UpDownTableau
    marks: frozenset[int]
    mark_class: MarkClass

    def weight(self, rule: MarkRule | str = MarkRule.NONE, nvars: Optional[int] = None) -> MultiPoly:
        """ω(T) に印の重みを掛けたもの"""
        rule = MarkRule(rule)
        nvars = self.base.n if nvars is None else nvars
        value = self.base.weight(nvars)
        if rule is MarkRule.NONE or not self.marks:
            return value
        exps = [0] * nvars
        power = 2 if rule is MarkRule.NEG_SQUARE else 1
        for j in self.marks:
            exps[j - 1] += power
        sign = 1 if rule is MarkRule.PLAIN or len(self.marks) % 2 == 0 else -1
        return value * MultiPoly.monomial(exps, nvars, sign)


def _marks_for(cls: MarkClass, t: UpDownTableau, profile: PeakProfile) -> Iterator[frozenset[int]]:
    """クラスごとに許される S を列挙する"""
    steps = range(1, t.n + 1)
    if cls is MarkClass.MUD:
        yield from _subsets(steps)
        return
    if cls is MarkClass.MUD_LT:
        if all(length < t.w for length in t.lengths()):
            yield from _subsets(steps)
        return
    if not profile.all_full:
        return
    if cls is MarkClass.MUD_O:
        forced = profile.peak_steps()
        lengths = t.lengths()
        free = [j for j in steps if j not in forced and lengths[2 * j - 1] >= t.w]
        for extra in _subsets(free):
            yield forced | extra
        return
    if cls is MarkClass.MUD_STAR:
        yield from _subsets(profile.e_w)
        return
    if profile.e_w:
        if cls in (MarkClass.MUD_1, MarkClass.MUD_EE, MarkClass.MUD_EO):
            yield from _subsets(profile.e_w - {min(profile.e_w)})
        return
    parity = profile.p % 2
    if cls in (MarkClass.MUD_0E, MarkClass.MUD_EE) and parity == 0:
        yield frozenset()
    elif cls in (MarkClass.MUD_0O, MarkClass.MUD_EO) and parity == 1:
        yield frozenset()


def enumerate_marked(
    cls: MarkClass | str,
    n: int,
    w: int,
    mu: Partition,
    nu: Partition,
    *,
    exponent_cap: Optional[int] = None,
) -> Iterator[MarkedUpDown]:
    """
    クラス cls の印付き上下盤 (T, S) を全て返す。

    Raises:
        ValueError: 未知のクラス
    """
    cls = MarkClass(cls)
    for t, _ in enumerate_ud(n, w, mu, nu, exponent_cap=exponent_cap):
        profile = classify_peaks(t)
        for marks in _marks_for(cls, t, profile):
            yield MarkedUpDown(t, marks, cls)


def marked_generating_function(
    cls: MarkClass | str,
    n: int,
    w: int,
    mu: Partition,
    nu: Partition,
    rule: MarkRule | str = MarkRule.NONE,
    *,
    mark_count: Optional[int] = None,
    mark_parity: Optional[int] = None,
    exponent_cap: Optional[int] = None,
) -> MultiPoly:
    """
    Σ ω(T)·(印の重み) を n 変数多項式で返す。

    mark_count は |S| を固定、mark_parity は |S| の偶奇（0 / 1）を固定する。
    """
    total = MultiPoly.zero(n)
    count = 0
    for item in enumerate_marked(cls, n, w, mu, nu, exponent_cap=exponent_cap):
        if mark_count is not None and len(item.marks) != mark_count:
            continue
        if mark_parity is not None and len(item.marks) % 2 != mark_parity:
            continue
        total = total + item.weight(rule, n)
        count += 1
    logger.debug("%s n=%d w=%d %s→%s: %d 個", MarkClass(cls).value, n, w, mu, nu, count)
    return total


# ====================================
# 振動盤
# ====================================
@dataclass(frozen=True)
class VacillatingTableau:
    """
    w-振動盤。隣同士は高々 1 マス異なる。

    steps() は各ステップを CellStep（ゼロステップは None）で返す。
    """
    w: int
    shapes: tuple[Partition, ...]
    walk_class: WalkClass = WalkClass.VT
    marks: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        for shape in self.shapes:
            if shape.length > self.w:
                raise ValueError(f"{shape} の長さが w={self.w} を超えています")
        self.steps()

    @property
    def n(self) -> int:
        return len(self.shapes) - 1

    def steps(self) -> list[Optional[CellStep]]:
        out: list[Optional[CellStep]] = []
        for prev, cur in zip(self.shapes, self.shapes[1:]):
            if prev == cur:
                out.append(None)
                continue
            step = next((s for s, q in one_cell_neighbors(prev, self.w) if q == cur), None)
            if step is None:
                raise ValueError(f"{prev} と {cur} は 1 マスだけ異なる分割ではありません")
            out.append(step)
        return out

    def as_walk(self) -> tuple[list[tuple[int, ...]], list[str]]:
        """座標ベクトル（w 成分）の列と、ステップのラベル（"0", "+e1", "-e2" など）"""
        coords = [shape.padded(self.w) for shape in self.shapes]
        labels = ["0" if s is None else s.label() for s in self.steps()]
        return coords, labels

    def __str__(self) -> str:
        body = ", ".join(str(s) for s in self.shapes)
        if self.marks:
            return f"({body}) S={sorted(self.marks)}"
        return f"({body})"


def _zero_step_allowed(cls: WalkClass, shape: Partition, w: int) -> bool:
    if cls is WalkClass.VT:
        return True
    if cls is WalkClass.VT_GT:
        return shape.length == w
    if cls is WalkClass.VT_EU:
        return shape.length < w
    return False


def _markable_steps(w: int, shapes: list[Partition]) -> list[int]:
    """x_w = 0 の点から出る +e_w ステップの番号（1 始まり）"""
    out = []
    for j in range(1, len(shapes)):
        prev, cur = shapes[j - 1], shapes[j]
        if w >= 1 and prev.part(w - 1) == 0 and cur.part(w - 1) == 1:
            out.append(j)
    return out


def enumerate_walks(
    cls: WalkClass | str,
    n: int,
    w: int,
    mu: Partition,
    nu: Partition,
) -> Iterator[VacillatingTableau]:
    """
    クラス cls の振動盤（印付きクラスは (T, S) の組ごと）を全て返す。

    Examples:
        VT_GT, n=4, w=1, ∅→∅ は 3 個（Riordan 数）
        MVT_STAR, n=4, w=2, ∅→∅ は 4 個
    """
    cls = WalkClass(cls)
    if n < 0 or w < 0:
        raise ValueError(f"n と w は 0 以上: n={n}, w={w}")
    if mu.length > w or nu.length > w:
        return
    shapes: list[Partition] = [mu]

    def _rec(pos: int):
        if pos == n:
            if shapes[-1] == nu:
                yield from _emit()
            return
        current = shapes[-1]
        remaining = n - pos - 1
        for _, nxt in one_cell_neighbors(current, w):
            if abs(nxt.size - nu.size) <= remaining:
                shapes.append(nxt)
                yield from _rec(pos + 1)
                shapes.pop()
        if _zero_step_allowed(cls, current, w) and abs(current.size - nu.size) <= remaining:
            shapes.append(current)
            yield from _rec(pos + 1)
            shapes.pop()

    def _emit():
        shape_tuple = tuple(shapes)
        if cls in (WalkClass.VT, WalkClass.VT_GT, WalkClass.VT_EU):
            yield VacillatingTableau(w, shape_tuple, cls)
            return
        markable = _markable_steps(w, shapes)
        first = _first_top_row_step(w, shapes)
        for marks in _subsets(markable):
            if cls is WalkClass.MVT_0 and first is not None and first in marks:
                continue
            if cls is WalkClass.MVT_1 and (first is None or first not in marks):
                continue
            yield VacillatingTableau(w, shape_tuple, cls, marks)

    yield from _rec(0)


def _first_top_row_step(w: int, shapes: list[Partition]) -> Optional[int]:
    """最初の +e_w ステップの番号"""
    if w < 1:
        return None
    for j in range(1, len(shapes)):
        if shapes[j].part(w - 1) > shapes[j - 1].part(w - 1):
            return j
    return None


def count_walks(cls: WalkClass | str, n: int, w: int, mu: Partition, nu: Partition) -> int:
    count = sum(1 for _ in enumerate_walks(cls, n, w, mu, nu))
    logger.debug("%s n=%d w=%d %s→%s: %d 個", WalkClass(cls).value, n, w, mu, nu, count)
    return count


def zero_step_count(t: VacillatingTableau) -> int:
    return sum(1 for s in t.steps() if s is None)


# ====================================
# 重み付き格子路
# ====================================
@dataclass(frozen=True)
class WeightedLatticePath:
    """
    点列と印の集合 M。

    高さ 2j−2 からの前進対角と高さ 2j−1 からの後退対角の重みは x_j、垂直は 1。
    """
    points: tuple[Point, ...]
    marks: frozenset[int] = field(default_factory=frozenset)
    path_class: PathClass = PathClass.L

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        for (c0, h0), (c1, h1) in zip(self.points, self.points[1:]):
            if h1 != h0 + 1:
                raise ValueError(f"高さが 1 ずつ増えていません: {(c0, h0)} → {(c1, h1)}")
            allowed = {0, 1} if h0 % 2 == 0 else {0, -1}
            if c1 - c0 not in allowed:
                raise ValueError(f"許されないステップです: {(c0, h0)} → {(c1, h1)}")

    def diagonal_levels(self) -> list[int]:
        """対角ステップの重みの添字 j を並べたもの"""
        out = []
        for (c0, h0), (c1, _) in zip(self.points, self.points[1:]):
            if c1 != c0:
                out.append(h0 // 2 + 1 if h0 % 2 == 0 else (h0 + 1) // 2)
        return out

    def weight(self, nvars: int) -> MultiPoly:
        exps = [0] * nvars
        for j in self.diagonal_levels():
            exps[j - 1] += 1
        return MultiPoly.monomial(exps, nvars)

    def mark_weight(self, nvars: int) -> MultiPoly:
        """ω(M) = ∏_{j∈M} x_j"""
        exps = [0] * nvars
        for j in self.marks:
            exps[j - 1] += 1
        return MultiPoly.monomial(exps, nvars)

    def _visits(self, *points: Point) -> bool:
        present = set(self.points)
        return all(p in present for p in points)

    def odd_branch_points(self) -> list[int]:
        """(1,2j−2), (1,2j−1), (1,2j) を通る j"""
        height = self.points[-1][1] if self.points else 0
        return [j for j in range(1, height // 2 + 1) if self._visits((1, 2 * j - 2), (1, 2 * j - 1), (1, 2 * j))]

    def even_branch_points(self) -> list[int]:
        """(1,2j−2), (2,2j−1), (2,2j) を通る j"""
        height = self.points[-1][1] if self.points else 0
        return [j for j in range(1, height // 2 + 1) if self._visits((1, 2 * j - 2), (2, 2 * j - 1), (2, 2 * j))]


def enumerate_paths(
    path_class: PathClass | str,
    start: int,
    end: int,
    n: int,
    t: int = 1,
) -> Iterator[WeightedLatticePath]:
    """
    (start, 0) から (end, 2n) への格子路（印付きクラスは (P, M) ごと）を返す。

    L 以外は偶数の高さの点で列 ≥ t を課す。
    """
    path_class = PathClass(path_class)
    bounded = path_class is not PathClass.L
    if bounded and start < t:
        return
    points: list[Point] = [(start, 0)]

    def _rec(col: int, height: int):
        if height == 2 * n:
            if col == end:
                yield from _emit()
            return
        remaining = 2 * n - height
        delta = 1 if height % 2 == 0 else -1
        for step in (0, delta):
            nxt = col + step
            if abs(nxt - end) > remaining - 1:
                continue
            if bounded and (height + 1) % 2 == 0 and nxt < t:
                continue
            points.append((nxt, height + 1))
            yield from _rec(nxt, height + 1)
            points.pop()

    def _emit():
        base = WeightedLatticePath(tuple(points), frozenset(), path_class)
        if path_class is PathClass.L_ODD_MARKED:
            choices = base.odd_branch_points()
        elif path_class is PathClass.L_EVEN_MARKED:
            choices = base.even_branch_points()
        else:
            yield base
            return
        for marks in _subsets(choices):
            yield WeightedLatticePath(base.points, marks, path_class)

    yield from _rec(start, 0)
