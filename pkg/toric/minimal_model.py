"""等变极小模型纲领

反复收缩 G-不变的、两两不相交的环面不变 (-1)-曲线，直到曲面 G-极小，
再把极小端点归入 P2 / F(a) / P1xP1 / dP6 四类并与群的共轭类配对。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from toric.errors import NotMinimal, TableViolation
from toric.lattice_fan import (
    CompleteFan2D,
    PrimitiveVector,
    blow_down,
    del_pezzo6,
    fans_isomorphic,
    hirzebruch,
    projective_plane,
    square,
)
from toric.symmetry import (
    DEFAULT_CONJUGATOR_BOUND,
    ConjugacyLabel,
    SymmetryGroup,
    classify_subgroup,
)
from toric.unimodular import UnimodularMatrix

logger = logging.getLogger(__name__)

KIND_P2 = 'P2'
KIND_HIRZEBRUCH = 'F'
KIND_P1XP1 = 'P1xP1'
KIND_DP6 = 'dP6'

L = ConjugacyLabel
# 只含 P1xP1 的行
_QUADRIC_GROUPS = {L.C2, L.C4, L.D4, L.D4_PRIME, L.D8}
_PLANE_GROUPS = {L.C3, L.D6}
_HEXAGON_GROUPS = {L.C6, L.D6_PRIME, L.D12}


@dataclass(frozen=True)
class ContractionStep:
    """一次收缩：一个 G-轨道的 (-1)-曲线"""

    before: CompleteFan2D
    contracted: Tuple[PrimitiveVector, ...]
    after: CompleteFan2D

    def to_dict(self) -> Dict:
        return {
            'before': self.before.to_dict()['rays'],
            'contracted': [[v.x, v.y] for v in self.contracted],
            'after': self.after.to_dict()['rays'],
        }


@dataclass(frozen=True)
class ContractionTrace:
    """从输入扇到 G-极小扇的收缩序列，群在每一步上的作用不变"""

    initial: CompleteFan2D
    group: SymmetryGroup
    steps: Tuple[ContractionStep, ...] = ()

    @property
    def terminal(self) -> CompleteFan2D:
        return self.steps[-1].after if self.steps else self.initial

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> Dict:
        return {
            'steps': [s.to_dict() for s in self.steps],
            'terminal': self.terminal.to_dict()['rays'],
        }


@dataclass(frozen=True)
class MinimalLabel:
    """G-极小曲面的类型与群标签

    to_standard 把端点扇映到标准模型扇，不参与比较。
    """

    kind: str
    group: ConjugacyLabel
    a: Optional[int] = None
    to_standard: Optional[UnimodularMatrix] = field(default=None, compare=False, repr=False)

    @property
    def kind_name(self) -> str:
        if self.kind == KIND_HIRZEBRUCH:
            return f'F({self.a})'
        return self.kind

    @property
    def family(self) -> str:
        return surface_family(self.kind)

    def to_dict(self) -> Dict:
        return {'kind': self.kind_name, 'group': str(self.group), 'family': self.family}

    def __str__(self) -> str:
        return f'({self.kind_name}, {self.group})'


def surface_family(kind: str) -> str:
    """极小曲面所属的族：圆锥曲线上的 P1-丛 (i)、Severi-Brauer 曲面 (ii)、对合曲面 (iii)、六次 del Pezzo 曲面 (iv)"""
    families = {KIND_HIRZEBRUCH: 'i', KIND_P2: 'ii', KIND_P1XP1: 'iii', KIND_DP6: 'iv'}
    try:
        return families[kind]
    except KeyError:
        raise NotMinimal(f'未知的极小曲面类型 {kind!r}')


def standard_model(label: MinimalLabel) -> CompleteFan2D:
    if label.kind == KIND_P2:
        return projective_plane()
    if label.kind == KIND_P1XP1:
        return square()
    if label.kind == KIND_DP6:
        return del_pezzo6()
    return hirzebruch(label.a)


def _orbits_compatible(fan: CompleteFan2D, first, second) -> bool:
    return not any(fan.adjacent(i, j) for i in first for j in second)


def contractible_orbits(fan: CompleteFan2D, g: SymmetryGroup) -> List[Tuple[int, ...]]:
    """
    所有可收缩的射线轨道：轨道内每条射线自交数为 -1 且两两不相邻

    Returns:
        List: 射线编号元组，按最小编号排序
    """
    a = fan.self_intersections
    result = []
    for orbit in g.ray_orbits(fan):
        if all(a[i] == -1 for i in orbit) and _orbits_compatible(fan, orbit, orbit):
            result.append(orbit)
    return result


def is_g_minimal(fan: CompleteFan2D, g: SymmetryGroup) -> bool:
    return not contractible_orbits(fan, g)


def _canonical_form(fan: CompleteFan2D, g: SymmetryGroup) -> Tuple[Tuple, Dict[int, int]]:
    a = fan.self_intersections
    perms = list(g.attach(fan).values())
    n = fan.n
    best_key, best_position = None, None
    for start in range(n):
        for direction in (1, -1):
            order = [(start + direction * j) % n for j in range(n)]
            position = {i: j for j, i in enumerate(order)}
            key = (tuple(a[i] for i in order),
                   tuple(sorted(tuple(position[p[i]] for i in order) for p in perms)))
            if best_key is None or key < best_key:
                best_key, best_position = key, position
    return best_key, best_position


def canonical_positions(fan: CompleteFan2D, g: SymmetryGroup) -> List[int]:
    """
    射线在组合规范序中的位置

    在所有二面体重标号中取 (自交数序列, 群的置换作用) 字典序最小的一个，
    因此 (M·fan, M·g·M^-1) 与 (fan, g) 得到对应的次序，和格基的选取无关。
    """
    _, position = _canonical_form(fan, g)
    return [position[i] for i in range(fan.n)]


def pair_key(fan: CompleteFan2D, g: SymmetryGroup) -> Tuple:
    """(fan, g) 在 GL(2,Z) 共轭下的完全不变量：两个对同构当且仅当 key 相等"""
    key, _ = _canonical_form(fan, g)
    return key


def minimalize(fan: CompleteFan2D, g: SymmetryGroup) -> ContractionTrace:
    """
    等变 MMP：每轮贪心选出一组两两相容的可收缩轨道（组合规范序中位置最小者优先），再逐个轨道收缩

    Returns:
        ContractionTrace: 每一步恰好收缩一个 G-轨道
    """
    g.attach(fan)
    steps: List[ContractionStep] = []
    current = fan
    while True:
        orbits = contractible_orbits(current, g)
        if not orbits:
            break
        position = canonical_positions(current, g)
        orbits.sort(key=lambda orbit: min(position[i] for i in orbit))
        chosen: List[Tuple[int, ...]] = []
        for orbit in orbits:
            if all(_orbits_compatible(current, orbit, other) for other in chosen):
                chosen.append(orbit)
        batch = [tuple(current.rays[i] for i in orbit) for orbit in chosen]
        for rays in batch:
            after = blow_down(current, [current.index(v) for v in rays])
            steps.append(ContractionStep(current, rays, after))
            logger.info(f'contracted {len(rays)} curve(s): {current.n} -> {after.n} rays')
            current = after
    return ContractionTrace(fan, g, tuple(steps))


def is_allowed_pair(kind: str, a: Optional[int], group: ConjugacyLabel) -> bool:
    """(极小曲面, 群) 是否在极小对表中"""
    if group == L.C1:
        return kind == KIND_P2 or (kind == KIND_HIRZEBRUCH and a != 1)
    if group == L.D2:
        return kind in (KIND_P2, KIND_P1XP1) or (kind == KIND_HIRZEBRUCH and a >= 3 and a % 2 == 1)
    if group == L.D2_PRIME:
        return kind == KIND_HIRZEBRUCH and a % 2 == 0
    if group in _QUADRIC_GROUPS:
        return kind == KIND_P1XP1
    if group in _PLANE_GROUPS:
        return kind == KIND_P2
    if group in _HEXAGON_GROUPS:
        return kind == KIND_DP6
    return False


def _fan_kind(fan: CompleteFan2D, group: ConjugacyLabel) -> Tuple[str, Optional[int]]:
    a = fan.self_intersections
    if fan.n == 3:
        return KIND_P2, None
    if fan.n == 4:
        degree = max(abs(x) for x in a)
        if degree == 0 and group not in (L.C1, L.D2_PRIME):
            return KIND_P1XP1, None
        return KIND_HIRZEBRUCH, degree
    if fan.n == 6 and all(x == -1 for x in a):
        return KIND_DP6, None
    raise TableViolation(f'极小扇 {fan} 不是 P2、F(a)、P1xP1 或 dP6')


def classify_minimal(fan: CompleteFan2D, g: SymmetryGroup,
                     bound: int = DEFAULT_CONJUGATOR_BOUND) -> MinimalLabel:
    """
    识别 G-极小曲面并与群的共轭类配对

    Raises:
        NotMinimal: 还有可收缩的轨道
        TableViolation: 配对不在极小对表中
    """
    if not is_g_minimal(fan, g):
        raise NotMinimal(f'{fan} 在群 {g} 下不是极小的')
    group = classify_subgroup(g, bound)
    kind, a = _fan_kind(fan, group)
    if not is_allowed_pair(kind, a, group):
        name = f'F({a})' if kind == KIND_HIRZEBRUCH else kind
        raise TableViolation(f'({name}, {group}) 不在极小对表中')
    label = MinimalLabel(kind, group, a)
    m = fans_isomorphic(fan, standard_model(label))
    if m is None:
        raise TableViolation(f'{fan} 与标准模型不同构')
    return MinimalLabel(kind, group, a, m)
