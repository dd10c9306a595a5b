"""Picard 格、K0 环与线丛置换基

K0 的元素记为 (rank, c1, chi)，c1 取 Pic 坐标。Pic 的基取第一个极大锥之外的
N-2 个除子类 D_2, ..., D_{N-1}：用字符关系消去 D_0, D_1 的系数。
乘法经 Chern 特征换坐标，二次部分存两倍以保持整数运算。
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from toric.errors import (
    IncompatibleFan,
    InvalidInput,
    NotABasis,
    NotClassified,
    NotHirzebruch,
    NotInvariant,
    RelationFailure,
    ToricError,
)
from toric.lattice_fan import CompleteFan2D, PrimitiveVector, pullback_divisor
from toric.minimal_model import (
    KIND_DP6,
    KIND_HIRZEBRUCH,
    KIND_P1XP1,
    KIND_P2,
    ContractionTrace,
    MinimalLabel,
    classify_minimal,
    standard_model,
)
from toric.symmetry import DEFAULT_CONJUGATOR_BOUND, SymmetryGroup
from toric.unimodular import UnimodularMatrix

logger = logging.getLogger(__name__)

Divisor = Union[Sequence[int], Mapping[Sequence[int], int]]

# 基搜索的规模上限
MAX_SEARCH_VECTORS = 400_000
MAX_SEARCH_NODES = 200_000


@dataclass(frozen=True, eq=False)
class PicardLattice:
    """Pic(X) = CDiv_T / M，附带相交形式"""

    fan: CompleteFan2D
    relations: np.ndarray
    reduction: np.ndarray
    full_form: np.ndarray

    @property
    def rank(self) -> int:
        return self.fan.n - 2

    @property
    def basis_rays(self) -> Tuple[PrimitiveVector, ...]:
        """Pic 基 D_2..D_{N-1} 对应的射线；前两条射线的除子被消去"""
        return self.fan.rays[2:]

    @property
    def form(self) -> np.ndarray:
        """Pic 基 D_2..D_{N-1} 上的相交矩阵，F_2 上为 [[0,1],[1,2]]（纤维, 正截面）"""
        return self.full_form[2:, 2:]

    def reduce(self, coefficients: Sequence[int]) -> Tuple[int, ...]:
        """除子 sum c_e D_e 的 Pic 坐标"""
        return tuple(int(x) for x in np.asarray(coefficients, dtype=np.int64) @ self.reduction)

    def lift(self, coordinates: Sequence[int]) -> Tuple[int, ...]:
        """Pic 坐标的除子代表元（前两条射线系数为 0）"""
        return (0, 0) + tuple(int(x) for x in coordinates)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Pic 坐标上的相交数"""
        return int(np.asarray(x, dtype=np.int64) @ self.form @ np.asarray(y, dtype=np.int64))

    @property
    def canonical(self) -> Tuple[int, ...]:
        return self.reduce([-1] * self.fan.n)


@lru_cache(maxsize=256)
def picard(fan: CompleteFan2D) -> PicardLattice:
    """
    构造 Pic 格

    第一个极大锥 <v_0, v_1> 是幺模的，m = -(V^T)^-1 (c_0, c_1) 消去前两个系数。
    """
    n = fan.n
    v0, v1 = fan.rays[0], fan.rays[1]
    vt_inv = UnimodularMatrix(v0.x, v0.y, v1.x, v1.y).inverse()
    reduction = np.zeros((n, n - 2), dtype=np.int64)
    for k in range(n):
        c = [0] * n
        c[k] = 1
        m = vt_inv.apply((-c[0], -c[1]))
        for i in range(2, n):
            v = fan.rays[i]
            reduction[k, i - 2] = c[i] + m[0] * v.x + m[1] * v.y

    a = fan.self_intersections
    full = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        full[i, i] = a[i]
        full[i, (i + 1) % n] = 1
        full[(i + 1) % n, i] = 1
    relations = np.array([[v.x for v in fan.rays], [v.y for v in fan.rays]], dtype=np.int64)
    return PicardLattice(fan, relations, reduction, full)


def coefficients_of(fan: CompleteFan2D, divisor: Divisor) -> Tuple[int, ...]:
    """把除子统一成按射线顺序的系数元组；字典形式按射线坐标索引"""
    if isinstance(divisor, Mapping):
        coeffs = [0] * fan.n
        for ray, value in divisor.items():
            if not fan.has_ray(ray):
                raise InvalidInput(f'射线 {tuple(ray)} 不在扇中')
            coeffs[fan.index(ray)] = int(value)
        return tuple(coeffs)
    coeffs = tuple(int(x) for x in divisor)
    if len(coeffs) != fan.n:
        raise InvalidInput(f'除子系数个数为 {len(coeffs)}，扇有 {fan.n} 条射线')
    return coeffs


def canonical_class(fan: CompleteFan2D) -> Tuple[int, ...]:
    """K = -sum D_e"""
    return (-1,) * fan.n


def intersect(fan: CompleteFan2D, d: Divisor, e: Divisor) -> int:
    full = picard(fan).full_form
    x = np.asarray(coefficients_of(fan, d), dtype=np.int64)
    y = np.asarray(coefficients_of(fan, e), dtype=np.int64)
    return int(x @ full @ y)


def euler_characteristic(fan: CompleteFan2D, divisor: Divisor) -> int:
    """Riemann-Roch: chi(O(D)) = 1 + D.(D-K)/2"""
    d = coefficients_of(fan, divisor)
    d_minus_k = tuple(x + 1 for x in d)
    return 1 + intersect(fan, d, d_minus_k) // 2


@dataclass(frozen=True)
class K0Class:
    """K0(X) 中的元素 (rank, c1, chi)"""

    fan: CompleteFan2D = field(repr=False)
    rank: int
    c1: Tuple[int, ...]
    chi: int

    def coordinates(self) -> Tuple[int, ...]:
        return (self.rank,) + self.c1 + (self.chi,)

    def _check(self, other: 'K0Class'):
        if self.fan != other.fan:
            raise IncompatibleFan('两个 K0 类不在同一个扇上')

    def __add__(self, other: 'K0Class') -> 'K0Class':
        self._check(other)
        return K0Class(self.fan, self.rank + other.rank,
                       tuple(x + y for x, y in zip(self.c1, other.c1)), self.chi + other.chi)

    def __neg__(self) -> 'K0Class':
        return K0Class(self.fan, -self.rank, tuple(-x for x in self.c1), -self.chi)

    def __sub__(self, other: 'K0Class') -> 'K0Class':
        return self + (-other)

    def __mul__(self, other: 'K0Class') -> 'K0Class':
        return k0_multiply(self, other)

    def __pow__(self, k: int) -> 'K0Class':
        result = unit(self.fan)
        for _ in range(k):
            result = result * self
        return result

    def to_dict(self) -> Dict:
        return {'rank': self.rank, 'c1': list(self.c1), 'chi': self.chi}


def unit(fan: CompleteFan2D) -> K0Class:
    """[O_X]"""
    return K0Class(fan, 1, (0,) * (fan.n - 2), 1)


def point_class(fan: CompleteFan2D) -> K0Class:
    return K0Class(fan, 0, (0,) * (fan.n - 2), 1)


def line_bundle_class(fan: CompleteFan2D, divisor: Divisor) -> K0Class:
    coeffs = coefficients_of(fan, divisor)
    return K0Class(fan, 1, picard(fan).reduce(coeffs), euler_characteristic(fan, coeffs))


def divisor_structure_class(fan: CompleteFan2D, i: int) -> K0Class:
    """O_{D_i} = 1 - J_i"""
    coeffs = [0] * fan.n
    coeffs[i] = -1
    return unit(fan) - line_bundle_class(fan, coeffs)


def k0_multiply(x: K0Class, y: K0Class) -> K0Class:
    """
    K0 中的乘法

    2ch2 = 2chi - 2r + c1.K，乘积的 2ch2 = r_x 2ch2_y + r_y 2ch2_x + 2 c1_x.c1_y。
    """
    if x.fan != y.fan:
        raise IncompatibleFan('两个 K0 类不在同一个扇上')
    pic = picard(x.fan)
    k = pic.canonical

    def double_ch2(z: K0Class) -> int:
        return 2 * z.chi - 2 * z.rank + pic.pair(z.c1, k)

    rank = x.rank * y.rank
    c1 = tuple(x.rank * b + y.rank * a for a, b in zip(x.c1, y.c1))
    ch2 = x.rank * double_ch2(y) + y.rank * double_ch2(x) + 2 * pic.pair(x.c1, y.c1)
    chi = (ch2 + 2 * rank - pic.pair(c1, k)) // 2
    return K0Class(x.fan, rank, c1, chi)


def ray_permutation(fan: CompleteFan2D, m: UnimodularMatrix) -> Tuple[int, ...]:
    return tuple(fan.index(m.apply(v)) for v in fan.rays)


def act(m: UnimodularMatrix, x: K0Class) -> K0Class:
    """群元素在 K0 上的作用：置换除子系数后重新约化，rank 与 chi 不变"""
    pic = picard(x.fan)
    perm = ray_permutation(x.fan, m)
    coeffs = pic.lift(x.c1)
    moved = [0] * x.fan.n
    for i, c in enumerate(coeffs):
        moved[perm[i]] = c
    return K0Class(x.fan, x.rank, pic.reduce(moved), x.chi)


# ---- Klyachko 表示 ----

@dataclass
class KlyachkoCertificate:
    passed: bool
    rank: int = 0
    index: int = 0
    relations_checked: int = 0
    violation: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            'passed': self.passed,
            'rank': self.rank,
            'index': self.index,
            'relations_checked': self.relations_checked,
            'violation': self.violation,
        }


def span_index(rows: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """
    整数行向量张成的子格的秩与（满秩时的）指数

    Returns:
        (rank, index)，不满秩时 index 为 0
    """
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diagonal if d != 0]
    rank = len(nonzero)
    index = int(np.prod(nonzero)) if rank == snf.shape[1] else 0
    return rank, index


def _orbit_classes(fan: CompleteFan2D) -> Dict[Tuple[int, ...], K0Class]:
    # 锥 -> O_sigma，锥用射线编号元组表示
    classes = {(): unit(fan)}
    for i in range(fan.n):
        classes[(i,)] = divisor_structure_class(fan, i)
    for i, j in fan.cones():
        classes[(i, j)] = classes[(i,)] * classes[(j,)]
    return classes


def _cone_of(fan: CompleteFan2D, rays: frozenset) -> Optional[Tuple[int, ...]]:
    if len(rays) <= 1:
        return tuple(sorted(rays))
    if len(rays) == 2:
        i, j = sorted(rays)
        if fan.adjacent(i, j):
            return (i, j) if (j - i) == 1 else (j, i)
    return None


def verify_klyachko(fan: CompleteFan2D) -> KlyachkoCertificate:
    """
    验证 K0 由 O_sigma 生成、秩为极大锥个数，并检查两类关系

    (rel1) 射线集不交的锥 sigma, tau: O_sigma O_tau = O_{sigma+tau}（不成锥时为 0）
    (rel2) f = (1,0), (0,1): prod J_e^{<f, v_e>} = 1

    Raises:
        RelationFailure: 任何一项失败
    """
    n = fan.n
    classes = _orbit_classes(fan)
    rank, index = span_index([c.coordinates() for c in classes.values()])
    if rank != n or index != 1:
        raise RelationFailure(f'O_sigma 张成的秩为 {rank}、指数为 {index}，期望秩 {n}、指数 1')

    zero = unit(fan) - unit(fan)
    checked = 0
    cones = list(classes)
    for s, t in combinations(cones, 2):
        if set(s) & set(t):
            continue
        target = _cone_of(fan, frozenset(s) | frozenset(t))
        expected = classes[target] if target is not None else zero
        if classes[s] * classes[t] != expected:
            raise RelationFailure(f'锥 {s} 与 {t} 不满足乘法关系')
        checked += 1

    for f in ((1, 0), (0, 1)):
        product = unit(fan)
        for i, v in enumerate(fan.rays):
            power = f[0] * v.x + f[1] * v.y
            coeffs = [0] * n
            coeffs[i] = -1 if power > 0 else 1
            factor = line_bundle_class(fan, coeffs)
            for _ in range(abs(power)):
                product = product * factor
        if product != unit(fan):
            raise RelationFailure(f'f = {f} 的字符关系不成立')
        checked += 1

    logger.debug(f'Klyachko presentation verified on {fan}: {checked} relations')
    return KlyachkoCertificate(True, rank, index, checked)


def fa_recurrence_check(fan: CompleteFan2D, m_range: Sequence[int] = range(6)) -> bool:
    """
    在 Hirzebruch 扇上检查 J1^{m+1} J2 = J1^m J2 + J1 J2 - J2

    J2 是负截面 O(-D_s)，J1 是它前一条射线（纤维）。

    Raises:
        NotHirzebruch: 扇不是 F_a
    """
    a = fan.self_intersections
    if fan.n != 4:
        raise NotHirzebruch(f'{fan} 有 {fan.n} 条射线，不是 Hirzebruch 扇')
    s = min(range(4), key=lambda i: (a[i], i))
    if a[(s + 1) % 4] != 0 or a[(s - 1) % 4] != 0 or a[(s + 2) % 4] != -a[s]:
        raise NotHirzebruch(f'自交数序列 {a.values} 不是 (0, -a, 0, a) 的形式')

    def j(i: int) -> K0Class:
        coeffs = [0] * 4
        coeffs[i % 4] = -1
        return line_bundle_class(fan, coeffs)

    j1, j2 = j(s - 1), j(s)
    for m in m_range:
        lhs = j1 ** (m + 1) * j2
        rhs = j1 ** m * j2 + j1 * j2 - j2
        if lhs != rhs:
            return False
    return True


# ---- 置换基 ----

@dataclass(frozen=True)
class BasisElement:
    slot: str
    divisor: Tuple[int, ...]
    k0: K0Class = field(repr=False)

    def to_dict(self) -> Dict:
        return {'slot': self.slot, 'divisor': list(self.divisor), 'class': self.k0.to_dict()}


@dataclass(frozen=True)
class PermutationBasis:
    """线丛类构成的置换 G-基；orbits 里每个轨道的第一个元素是代表元 S_i"""

    fan: CompleteFan2D = field(repr=False)
    elements: Tuple[BasisElement, ...]
    orbits: Tuple[Tuple[int, ...], ...]
    label: Optional[MinimalLabel] = None

    @property
    def orbit_sizes(self) -> Tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def slots(self) -> List[str]:
        return [e.slot for e in self.elements]

    def to_dict(self) -> Dict:
        return {
            'elements': [e.to_dict() for e in self.elements],
            'orbits': [[self.elements[i].slot for i in o] for o in self.orbits],
            'orbit_sizes': list(self.orbit_sizes),
        }


@dataclass
class BasisCertificate:
    passed: bool
    determinant: int
    orbit_sizes: Tuple[int, ...]
    stabilizer_indices: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {
            'passed': self.passed,
            'determinant': self.determinant,
            'orbit_sizes': list(self.orbit_sizes),
            'stabilizer_indices': list(self.stabilizer_indices),
        }


def group_orbits(classes: Sequence[K0Class], g: SymmetryGroup) -> Tuple[Tuple[int, ...], ...]:
    position = {c: i for i, c in enumerate(classes)}
    seen = set()
    orbits = []
    for i, c in enumerate(classes):
        if i in seen:
            continue
        orbit = []
        for m in g.sorted_elements():
            image = act(m, c)
            if image not in position:
                raise NotInvariant(f'群元素 {m} 把类 {c.to_dict()} 映出了集合')
            j = position[image]
            if j not in orbit:
                orbit.append(j)
        orbit.sort()
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return tuple(orbits)


def verify_permutation_basis(basis: PermutationBasis, fan: CompleteFan2D,
                             g: SymmetryGroup) -> BasisCertificate:
    """
    检查坐标矩阵幺模、集合在 G 下封闭，并给出轨道分解

    Raises:
        NotABasis: 行列式不是 ±1
        NotInvariant: G 的像离开集合
    """
    rows = [e.k0.coordinates() for e in basis.elements]
    if len(rows) != fan.n:
        raise NotABasis(f'基有 {len(rows)} 个元素，K0 的秩为 {fan.n}')
    determinant = int(Matrix(rows).det())
    if determinant not in (1, -1):
        raise NotABasis(f'坐标矩阵的行列式为 {determinant}')
    orbits = group_orbits([e.k0 for e in basis.elements], g)
    sizes = tuple(len(o) for o in orbits)
    return BasisCertificate(True, determinant, sizes, sizes)


def make_basis(fan: CompleteFan2D, g: SymmetryGroup, slots: Sequence[Tuple[str, Sequence[int]]],
               label: Optional[MinimalLabel] = None) -> PermutationBasis:
    """由 (slot, 除子系数) 列表构造基并计算 G-轨道"""
    elements = tuple(BasisElement(name, tuple(d), line_bundle_class(fan, d)) for name, d in slots)
    if len({e.k0 for e in elements}) != len(elements):
        raise NotABasis('基中有重复的类')
    orbits = group_orbits([e.k0 for e in elements], g)
    return PermutationBasis(fan, elements, orbits, label)


def _core_slots(label: MinimalLabel) -> List[Tuple[str, Dict[Tuple[int, int], int]]]:
    # 标准模型扇上的除子，按射线坐标给出
    if label.kind in (KIND_HIRZEBRUCH, KIND_P1XP1):
        x1, x2 = (1, 0), (0, 1)
        return [
            ('1', {}),
            ('J1', {x1: -1}),
            ('J2', {x2: -1}),
            ('J1J2', {x1: -1, x2: -1}),
        ]
    if label.kind == KIND_P2:
        return [('1', {}), ('J1', {(1, 0): -1}), ('J1^2', {(1, 0): -2})]
    if label.kind == KIND_DP6:
        x1, x2, x3 = (1, 0), (0, 1), (-1, -1)
        y1, y2, y3 = (-1, 0), (0, -1), (1, 1)
        return [
            ('1', {}),
            ('R1', {x1: -1, y2: -1}),
            ('R2', {x2: -1, y3: -1}),
            ('R3', {x3: -1, y1: -1}),
            ('Q1', {x1: -1, x2: -1, y3: -1}),
            ('Q2', {y1: -1, y2: -1, x3: -1}),
        ]
    raise NotClassified(f'未知的极小曲面类型 {label.kind!r}')


def core_divisors(fan: CompleteFan2D, label: MinimalLabel) -> List[Tuple[str, Dict[PrimitiveVector, int]]]:
    """
    极小端点扇上的核心基（除子代表元）

    标准模型上的除子经 to_standard 的逆搬到端点扇。
    """
    back = label.to_standard.inverse()
    result = []
    for name, divisor in _core_slots(label):
        moved = {PrimitiveVector(*back.apply(ray)): c for ray, c in divisor.items()}
        for ray in moved:
            if not fan.has_ray(ray):
                raise NotClassified(f'{fan} 与 {label} 的标准模型不匹配')
        result.append((name, moved))
    return result


def classify_terminal(trace: ContractionTrace, bound: int) -> MinimalLabel:
    try:
        return classify_minimal(trace.terminal, trace.group, bound)
    except ToricError as e:
        raise NotClassified(f'端点无法分类: {e.message}')


def transported_divisors(trace: ContractionTrace, label: MinimalLabel) -> List[Tuple[str, Dict[PrimitiveVector, int]]]:
    """
    沿收缩序列反向爆破：核心基取全变换，每一步追加例外曲线 O(E)

    例外除子的 slot 为 "E<step>.<k>"，step 从 1 开始按收缩顺序编号。
    """
    divisors = core_divisors(trace.terminal, label)
    exceptional: List[Tuple[str, Dict[PrimitiveVector, int]]] = []
    for number in range(len(trace.steps), 0, -1):
        step = trace.steps[number - 1]
        divisors = [(name, pullback_divisor(step.after, step.before, d)) for name, d in divisors]
        exceptional = [(name, pullback_divisor(step.after, step.before, d)) for name, d in exceptional]
        exceptional = [(f'E{number}.{k}', {ray: 1}) for k, ray in enumerate(step.contracted, start=1)] + exceptional
    # 核心在前，例外按 step 递增
    return divisors + exceptional


def standard_permutation_basis(trace: ContractionTrace, label: Optional[MinimalLabel] = None,
                               bound: int = DEFAULT_CONJUGATOR_BOUND) -> PermutationBasis:
    """
    极小核心的标准置换基沿爆破搬运到原来的扇

    Args:
        trace: minimalize 的结果
        label: 端点的分类；缺省时现场分类

    Raises:
        NotClassified: 端点不是已分类的极小对
    """
    if label is None:
        label = classify_terminal(trace, bound)
    fan = trace.initial
    slots = [(name, coefficients_of(fan, d)) for name, d in transported_divisors(trace, label)]
    basis = make_basis(fan, trace.group, slots, label)
    logger.info(f'permutation basis on {fan.n} rays: orbit sizes {basis.orbit_sizes}')
    return basis


# ---- 基的搜索 ----

@dataclass
class BasisSearchResult:
    basis: Optional[PermutationBasis]
    exhaustive: bool
    candidates: int

    def to_dict(self) -> Dict:
        return {
            'found': self.basis is not None,
            'exhaustive': self.exhaustive,
            'candidates': self.candidates,
            'basis': self.basis.to_dict() if self.basis else None,
        }


def _candidate_classes(fan: CompleteFan2D, bound: int) -> np.ndarray:
    n = fan.n
    grid = np.indices((2 * bound + 1,) * n).reshape(n, -1).T - bound
    return np.unique(grid @ picard(fan).reduction, axis=0)


def search_line_bundle_basis(fan: CompleteFan2D, g: SymmetryGroup, bound: int) -> BasisSearchResult:
    """
    在系数有界的线丛中搜索 G-封闭的置换基

    候选类按 G-轨道分组，轨道按 (大小, L1 范数, 坐标) 排序后深度优先选取；
    numpy 的秩用于剪枝，最后用 sympy 精确计算行列式。
    结果只对给定的界有意义，exhaustive 表示候选空间是否被完整搜索。
    """
    n = fan.n
    if (2 * bound + 1) ** n > MAX_SEARCH_VECTORS:
        logger.warning(f'basis search space too large for bound {bound} on {n} rays')
        return BasisSearchResult(None, False, 0)

    pic = picard(fan)
    perms = [ray_permutation(fan, m) for m in g.sorted_elements()]
    candidates = {tuple(int(x) for x in row) for row in _candidate_classes(fan, bound)}

    def image(coords, perm):
        coeffs = pic.lift(coords)
        moved = [0] * n
        for i, c in enumerate(coeffs):
            moved[perm[i]] = c
        return pic.reduce(moved)

    orbits = {}
    for coords in candidates:
        orbit = tuple(sorted({image(coords, p) for p in perms}))
        orbits[orbit] = None
    ordered = sorted(orbits, key=lambda o: (len(o), min(sum(abs(x) for x in c) for c in o), o))

    def row(coords):
        divisor = pic.lift(coords)
        return (1,) + tuple(coords) + (euler_characteristic(fan, divisor),)

    nodes = 0
    truncated = False

    def dfs(start: int, chosen: List[Tuple], rows: List[Tuple]) -> Optional[List[Tuple]]:
        nonlocal nodes, truncated
        if len(rows) == n:
            if int(Matrix(rows).det()) in (1, -1):
                return chosen
            return None
        for k in range(start, len(ordered)):
            nodes += 1
            if nodes > MAX_SEARCH_NODES:
                truncated = True
                return None
            orbit = ordered[k]
            if len(rows) + len(orbit) > n:
                continue
            new_rows = rows + [row(c) for c in orbit]
            if np.linalg.matrix_rank(np.array(new_rows, dtype=float)) < len(new_rows):
                continue
            found = dfs(k + 1, chosen + [orbit], new_rows)
            if found is not None or truncated:
                return found
        return None

    found = dfs(0, [], [])
    if found is None:
        logger.info(f'no permutation basis within bound {bound} ({len(ordered)} orbits)')
        return BasisSearchResult(None, not truncated, len(candidates))

    slots = []
    for orbit in found:
        for coords in orbit:
            name = '1' if not any(coords) else f'L{len(slots)}'
            slots.append((name, pic.lift(coords)))
    basis = make_basis(fan, g, slots)
    logger.info(f'found permutation basis within bound {bound}: orbit sizes {basis.orbit_sizes}')
    return BasisSearchResult(basis, not truncated, len(candidates))
