"""扇自同构群与 GL(2,Z) 有限子群的共轭分类

GL(2,Z) 的有限子群共有 13 个共轭类，每一类由一组标准生成元给出。
分类时先用不变量筛选候选标签，再做有界共轭搜索确认。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from toric.errors import GroupDoesNotPreserveFan, InvalidInput, NotFinite, UnclassifiedSubgroup
from toric.lattice_fan import CompleteFan2D, det
from toric.unimodular import IDENTITY, MINUS_IDENTITY, UnimodularMatrix

logger = logging.getLogger(__name__)

# 有限子群的最大阶（D12）
MAX_GROUP_ORDER = 12
DEFAULT_CONJUGATOR_BOUND = 5


class ConjugacyLabel(str, Enum):
    C1 = 'C1'
    C2 = 'C2'
    C3 = 'C3'
    C4 = 'C4'
    C6 = 'C6'
    D2 = 'D2'
    D2_PRIME = "D2'"
    D4 = 'D4'
    D4_PRIME = "D4'"
    D6 = 'D6'
    D6_PRIME = "D6'"
    D8 = 'D8'
    D12 = 'D12'

    def __str__(self) -> str:
        return self.value


# 标准生成元
A = UnimodularMatrix(1, -1, 1, 0)
B = UnimodularMatrix(0, -1, 1, 0)
C = UnimodularMatrix(0, 1, 1, 0)
C_PRIME = UnimodularMatrix(1, 0, 0, -1)

TABLE_GENERATORS: Dict[ConjugacyLabel, Tuple[UnimodularMatrix, ...]] = {
    ConjugacyLabel.C1: (),
    ConjugacyLabel.C2: (MINUS_IDENTITY,),
    ConjugacyLabel.C3: (A @ A,),
    ConjugacyLabel.C4: (B,),
    ConjugacyLabel.C6: (A,),
    ConjugacyLabel.D2: (C,),
    ConjugacyLabel.D2_PRIME: (C_PRIME,),
    ConjugacyLabel.D4: (MINUS_IDENTITY, C),
    ConjugacyLabel.D4_PRIME: (MINUS_IDENTITY, C_PRIME),
    ConjugacyLabel.D6: (A @ A, C),
    ConjugacyLabel.D6_PRIME: (A @ A, MINUS_IDENTITY @ C),
    ConjugacyLabel.D8: (B, C),
    ConjugacyLabel.D12: (A, C),
}


@dataclass(frozen=True)
class SymmetryGroup:
    """GL(2,Z) 的有限子群，带一组生成元"""

    elements: FrozenSet[UnimodularMatrix]
    generators: Tuple[UnimodularMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def sorted_elements(self) -> List[UnimodularMatrix]:
        return sorted(self.elements)

    def __contains__(self, m: UnimodularMatrix) -> bool:
        return m in self.elements

    def conjugate(self, p: UnimodularMatrix) -> 'SymmetryGroup':
        """返回 p G p^-1"""
        return SymmetryGroup(
            frozenset(g.conjugate(p) for g in self.elements),
            tuple(g.conjugate(p) for g in self.generators),
        )

    def attach(self, fan: CompleteFan2D) -> Dict[UnimodularMatrix, Tuple[int, ...]]:
        """
        每个元素在射线编号上诱导的置换

        Raises:
            GroupDoesNotPreserveFan: 某个元素不保持射线集合
        """
        perms = {}
        for m in self.sorted_elements():
            images = []
            for v in fan.rays:
                w = m.apply(v)
                if not fan.has_ray(w):
                    raise GroupDoesNotPreserveFan(f'矩阵 {m} 把射线 {tuple(v)} 映到 {w}，不在扇中')
                images.append(fan.index(w))
            perms[m] = tuple(images)
        return perms

    def preserves(self, fan: CompleteFan2D) -> bool:
        return all(fan.has_ray(m.apply(v)) for m in self.generators for v in fan.rays)

    def ray_orbits(self, fan: CompleteFan2D) -> List[Tuple[int, ...]]:
        """射线编号的轨道，按最小编号排序"""
        perms = self.attach(fan).values()
        seen = set()
        orbits = []
        for i in range(fan.n):
            if i in seen:
                continue
            orbit = tuple(sorted({p[i] for p in perms}))
            seen.update(orbit)
            orbits.append(orbit)
        return orbits

    def to_dict(self) -> Dict[str, list]:
        return {'generators': [g.to_list() for g in self.generators]}

    def __str__(self) -> str:
        gens = ', '.join(str(g) for g in self.generators) or 'I'
        return f'<{gens}> (order {self.order})'


def _closure(generators: Sequence[UnimodularMatrix]) -> FrozenSet[UnimodularMatrix]:
    elements = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x @ g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if len(elements) > MAX_GROUP_ORDER:
                        raise NotFinite(f'生成的群超过 {MAX_GROUP_ORDER} 个元素')
        frontier = new
    return frozenset(elements)


def group_from_generators(generators: Iterable[UnimodularMatrix]) -> SymmetryGroup:
    """
    由生成元生成有限群

    Raises:
        NotFinite: 某个生成元阶数无限，或群的阶超过 12
    """
    gens = tuple(generators)
    for g in gens:
        if g.order() is None:
            raise NotFinite(f'矩阵 {g} 的阶是无限的')
    return SymmetryGroup(_closure(gens), tuple(g for g in gens if not g.is_identity()))


def trivial_group() -> SymmetryGroup:
    return SymmetryGroup(frozenset({IDENTITY}), ())


def group_from_dict(data) -> SymmetryGroup:
    """解析 {"generators": [[[a,b],[c,d]], ...]}"""
    if data is None:
        return trivial_group()
    if not isinstance(data, dict) or not isinstance(data.get('generators'), list):
        raise InvalidInput('群的 JSON 必须包含 "generators" 列表')
    return group_from_generators(UnimodularMatrix.from_list(g) for g in data['generators'])


def _minimal_generators(elements: Iterable[UnimodularMatrix]) -> Tuple[UnimodularMatrix, ...]:
    # 按排序贪心选取生成元
    gens: List[UnimodularMatrix] = []
    span = frozenset({IDENTITY})
    for m in sorted(elements):
        if m not in span:
            gens.append(m)
            span = _closure(gens)
    return tuple(gens)


def compute_aut(fan: CompleteFan2D) -> SymmetryGroup:
    """
    计算扇自同构群 Aut_Σ

    光滑性保证相邻射线 (v_0, v_1) 是格基，把它映到每一对相邻射线（两种定向）后筛选。
    """
    basis_inv = UnimodularMatrix.from_columns(fan.rays[0], fan.rays[1]).inverse()
    n = fan.n
    elements = set()
    for j in range(n):
        for step in (1, -1):
            m = UnimodularMatrix.from_columns(fan.rays[j], fan.rays[(j + step) % n]) @ basis_inv
            if all(fan.has_ray(m.apply(v)) for v in fan.rays):
                elements.add(m)
    group = SymmetryGroup(frozenset(elements), _minimal_generators(elements))
    logger.debug(f'Aut of {fan}: order {group.order}')
    return group


def enumerate_subgroups(g: SymmetryGroup) -> List[SymmetryGroup]:
    """
    列出全部子群（循环群和二面体群的子群都能由至多两个元素生成）
    """
    found: Dict[FrozenSet[UnimodularMatrix], Tuple[UnimodularMatrix, ...]] = {}
    elements = g.sorted_elements()
    for x in elements:
        for y in elements:
            gens = tuple(dict.fromkeys(m for m in (x, y) if not m.is_identity()))
            span = _closure(gens)
            if span not in found or len(gens) < len(found[span]):
                found[span] = _minimal_generators(span)
    subgroups = [SymmetryGroup(span, gens) for span, gens in found.items()]
    subgroups.sort(key=lambda s: (s.order, s.sorted_elements()))
    return subgroups


def rotation_subgroup(g: SymmetryGroup) -> int:
    """G ∩ SL(2,Z) 的阶 t（循环群 C_t）"""
    return sum(1 for m in g.elements if m.det == 1)


def acts_freely_on_rays(fan: CompleteFan2D, g: SymmetryGroup) -> bool:
    """旋转子群在射线上的作用是否自由"""
    for m in g.elements:
        if m.det == 1 and not m.is_identity():
            if any(m.apply(v) == tuple(v) for v in fan.rays):
                return False
    return True


def cone_orbits(fan: CompleteFan2D, g: SymmetryGroup) -> List[Tuple[int, ...]]:
    """极大锥（编号 i 表示 <v_i, v_{i+1}>）的 G-轨道"""
    perms = list(g.attach(fan).values())
    n = fan.n
    cone_of = {frozenset((i, (i + 1) % n)): i for i in range(n)}
    seen = set()
    orbits = []
    for i in range(n):
        if i in seen:
            continue
        orbit = tuple(sorted({cone_of[frozenset((p[i], p[(i + 1) % n]))] for p in perms}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def table_representative(label: ConjugacyLabel) -> SymmetryGroup:
    return group_from_generators(TABLE_GENERATORS[ConjugacyLabel(label)])


# ---- 分类 ----

def _primitive(u: Tuple[int, int]) -> Tuple[int, int]:
    g = gcd(abs(u[0]), abs(u[1]))
    return (u[0] // g, u[1] // g)


def _kernel_vector(m: Tuple[int, int, int, int]) -> Tuple[int, int]:
    p, q, r, s = m
    if (p, q) != (0, 0):
        return _primitive((q, -p))
    return _primitive((s, -r))


def eigenlattice_index(reflection: UnimodularMatrix) -> int:
    """
    对合 R (det=-1) 的特征格 ker(R-I) ⊕ ker(R+I) 在 Z^2 中的指数

    C 型对合指数为 2，C' 型对合指数为 1。
    """
    r = reflection
    fixed = _kernel_vector((r.a - 1, r.b, r.c, r.d - 1))
    anti = _kernel_vector((r.a + 1, r.b, r.c, r.d + 1))
    return abs(det(fixed, anti))


def group_invariants(g: SymmetryGroup) -> Tuple:
    """分类前的不变量：阶、是否含反射、行列式分布、每个反射的特征格指数"""
    reflections = [m for m in g.elements if m.det == -1]
    return (
        g.order,
        bool(reflections),
        len(reflections),
        MINUS_IDENTITY in g.elements,
        tuple(sorted(eigenlattice_index(r) for r in reflections)),
    )


def _nearest(num: int, den: int) -> int:
    # den > 0
    return (2 * num + den) // (2 * den)


def reduce_group(g: SymmetryGroup) -> Tuple[SymmetryGroup, UnimodularMatrix]:
    """
    用平均不变二次型的 Gauss 约化基把群共轭到元素很小的形式

    Returns:
        (P^-1 G P, P)，P 的列是约化基
    """
    q11 = q12 = q22 = 0
    for m in g.elements:
        q11 += m.a * m.a + m.c * m.c
        q12 += m.a * m.b + m.c * m.d
        q22 += m.b * m.b + m.d * m.d

    def form(u, v):
        return u[0] * (q11 * v[0] + q12 * v[1]) + u[1] * (q12 * v[0] + q22 * v[1])

    b1, b2 = (1, 0), (0, 1)
    while True:
        if form(b2, b2) < form(b1, b1):
            b1, b2 = b2, b1
        mu = _nearest(form(b1, b2), form(b1, b1))
        if mu == 0:
            break
        b2 = (b2[0] - mu * b1[0], b2[1] - mu * b1[1])
    p = UnimodularMatrix.from_columns(b1, b2)
    return g.conjugate(p.inverse()), p


@lru_cache(maxsize=None)
def _unimodular_matrices(bound: int) -> Tuple[UnimodularMatrix, ...]:
    rng = range(-bound, bound + 1)
    found = [UnimodularMatrix(a, b, c, d)
             for a, b, c, d in product(rng, rng, rng, rng) if a * d - b * c in (1, -1)]
    found.sort(key=lambda m: (m.max_entry(), m))
    return tuple(found)


def find_conjugator(g: SymmetryGroup, label: ConjugacyLabel,
                    bound: int = DEFAULT_CONJUGATOR_BOUND) -> Optional[UnimodularMatrix]:
    """
    寻找 X 使 X G X^-1 等于标签的标准代表群

    Returns:
        UnimodularMatrix 或 None（有界搜索失败）
    """
    rep = table_representative(label)
    if rep.order != g.order:
        return None
    reduced, p = reduce_group(g)
    gens = reduced.generators or _minimal_generators(reduced.elements)
    for x in _unimodular_matrices(bound):
        if all(h.conjugate(x) in rep.elements for h in gens):
            return x @ p.inverse()
    return None


@lru_cache(maxsize=None)
def _table_invariants() -> Dict[ConjugacyLabel, Tuple]:
    return {label: group_invariants(table_representative(label)) for label in ConjugacyLabel}


def classify_subgroup(g: SymmetryGroup, bound: int = DEFAULT_CONJUGATOR_BOUND) -> ConjugacyLabel:
    """
    判定有限子群 G 属于 13 个共轭类中的哪一个

    Raises:
        NotFinite: 出现无限阶元素
        UnclassifiedSubgroup: 有界搜索没有找到共轭（不应发生）
    """
    for m in g.generators:
        if m.order() is None:
            raise NotFinite(f'矩阵 {m} 的阶是无限的')
    signature = group_invariants(g)
    candidates = [label for label, inv in _table_invariants().items() if inv == signature]
    for label in candidates:
        if find_conjugator(g, label, bound) is not None:
            logger.debug(f'classified {g} as {label}')
            return label
    raise UnclassifiedSubgroup(f'群 {g} 的不变量 {signature} 没有匹配的共轭类')
