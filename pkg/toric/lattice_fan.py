"""光滑完备二维扇

扇由逆时针排列的本原射线确定，极大锥是循环相邻的射线对。
所有扇都是不可变值，爆破和收缩返回新的扇。
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from math import gcd
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from toric.errors import (
    AdjacentContraction,
    InvalidConeIndex,
    InvalidInput,
    NonPrimitiveRay,
    NotComplete,
    NotCounterclockwise,
    NotMinusOneCurve,
    NotSmooth,
    TooFewRays,
)
from toric.unimodular import UnimodularMatrix

logger = logging.getLogger(__name__)


class PrimitiveVector(NamedTuple):
    """本原格向量"""
    x: int
    y: int


def det(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _half(v: Sequence[int]) -> int:
    # 与 (1,0) 的逆时针夹角在 [0, pi) 时为 0
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    d = det(u, v)
    return -1 if d > 0 else (1 if d < 0 else 0)


angle_key = cmp_to_key(_angle_cmp)


@dataclass(frozen=True)
class SelfIntersectionSequence:
    """自交数序列 a_i = D_i^2，与射线一一对应"""

    values: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)

    def identity_holds(self) -> bool:
        """检查 sum a_i = 12 - 3N"""
        return self.total == 12 - 3 * len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class CompleteFan2D:
    """光滑完备二维扇（规范形式：第一条射线与 (1,0) 的逆时针夹角最小）

    不要直接构造，请使用 validate_fan。
    """

    rays: Tuple[PrimitiveVector, ...]
    _index: Dict[PrimitiveVector, int] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {v: i for i, v in enumerate(self.rays)})

    @property
    def n(self) -> int:
        return len(self.rays)

    @property
    def ray_set(self) -> frozenset:
        return frozenset(self.rays)

    def index(self, ray: Sequence[int]) -> int:
        return self._index[PrimitiveVector(*ray)]

    def has_ray(self, ray: Sequence[int]) -> bool:
        return PrimitiveVector(*ray) in self._index

    def ray(self, i: int) -> PrimitiveVector:
        return self.rays[i % self.n]

    def cones(self) -> List[Tuple[int, int]]:
        """极大锥 (i, i+1)，按规范顺序"""
        return [(i, (i + 1) % self.n) for i in range(self.n)]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and (j - i) % self.n in (1, self.n - 1)

    @cached_property
    def self_intersections(self) -> SelfIntersectionSequence:
        return self_intersections(self)

    def to_dict(self) -> Dict[str, list]:
        return {'rays': [[v.x, v.y] for v in self.rays]}

    def __str__(self) -> str:
        return 'Fan(' + ', '.join(f'({v.x},{v.y})' for v in self.rays) + ')'


def _as_vector(raw) -> PrimitiveVector:
    try:
        x, y = raw
    except (TypeError, ValueError):
        raise InvalidInput(f'射线必须是整数对: {raw!r}')
    for t in (x, y):
        if not isinstance(t, int) or isinstance(t, bool):
            raise InvalidInput(f'射线坐标必须是整数: {raw!r}')
    return PrimitiveVector(x, y)


def validate_fan(raw_rays: Iterable) -> CompleteFan2D:
    """
    校验并规范化一个光滑完备扇

    Args:
        raw_rays: 逆时针排列的整数对列表

    Returns:
        CompleteFan2D: 旋转到规范起点后的扇
    """
    rays = [_as_vector(r) for r in raw_rays]
    n = len(rays)
    if n < 3:
        raise TooFewRays(f'射线数为 {n}，至少需要 3 条')

    for v in rays:
        if (v.x, v.y) == (0, 0) or gcd(abs(v.x), abs(v.y)) != 1:
            raise NonPrimitiveRay(f'射线 ({v.x},{v.y}) 不是本原向量')

    if len(set(rays)) != n:
        raise NotCounterclockwise('射线有重复')

    # 按循环顺序，角度只允许下降一次（绕原点恰好一圈）
    descents = sum(1 for i in range(n) if _angle_cmp(rays[i], rays[(i + 1) % n]) > 0)
    if descents != 1:
        raise NotCounterclockwise('射线不是严格逆时针排列')

    start = min(range(n), key=lambda i: angle_key(rays[i]))
    rays = rays[start:] + rays[:start]

    for i in range(n):
        u, v = rays[i], rays[(i + 1) % n]
        d = det(u, v)
        if d <= 0:
            raise NotComplete(f'射线 ({u.x},{u.y}) 与 ({v.x},{v.y}) 之间的夹角不小于 pi')
        if d != 1:
            raise NotSmooth(f'锥 <({u.x},{u.y}), ({v.x},{v.y})> 的行列式为 {d}')

    return CompleteFan2D(tuple(rays))


def fan_from_dict(data) -> CompleteFan2D:
    """解析 {"rays": [[x, y], ...]}"""
    if not isinstance(data, dict) or 'rays' not in data:
        raise InvalidInput('扇的 JSON 必须包含 "rays" 字段')
    if not isinstance(data['rays'], list):
        raise InvalidInput('"rays" 必须是列表')
    return validate_fan(data['rays'])


def self_intersections(fan: CompleteFan2D) -> SelfIntersectionSequence:
    """
    由墙关系 v_{i-1} + v_{i+1} = -a_i v_i 计算自交数序列
    """
    n = fan.n
    values = []
    for i in range(n):
        prev, cur, nxt = fan.rays[i - 1], fan.rays[i], fan.rays[(i + 1) % n]
        # det(v_i, v_{i+1}) = 1，所以 a_i = -det(v_{i-1}, v_{i+1})
        a = -det(prev, nxt)
        if (prev.x + nxt.x, prev.y + nxt.y) != (-a * cur.x, -a * cur.y):
            raise NotSmooth(f'射线 ({cur.x},{cur.y}) 处的墙关系不成立')
        values.append(a)
    return SelfIntersectionSequence(tuple(values))


def blow_up(fan: CompleteFan2D, cone_indices: Iterable[int]) -> CompleteFan2D:
    """
    在选中的极大锥 <v_i, v_{i+1}> 中插入射线 v_i + v_{i+1}

    Args:
        fan: 原来的扇
        cone_indices: 极大锥编号集合（规范顺序）

    Returns:
        CompleteFan2D: 爆破后的扇
    """
    selected = set()
    for i in cone_indices:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < fan.n:
            raise InvalidConeIndex(f'极大锥编号 {i!r} 超出范围 0..{fan.n - 1}')
        selected.add(i)

    rays: List[Tuple[int, int]] = []
    for i, v in enumerate(fan.rays):
        rays.append(v)
        if i in selected:
            w = fan.rays[(i + 1) % fan.n]
            rays.append((v.x + w.x, v.y + w.y))
    result = validate_fan(rays)
    logger.debug(f'blow_up {fan} at cones {sorted(selected)} -> {result}')
    return result


def blow_down(fan: CompleteFan2D, ray_indices: Iterable[int]) -> CompleteFan2D:
    """
    收缩两两不相交的 (-1)-曲线

    Args:
        fan: 原来的扇
        ray_indices: 待收缩射线的编号

    Returns:
        CompleteFan2D: 收缩后的扇
    """
    selected = set()
    for i in ray_indices:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < fan.n:
            raise InvalidConeIndex(f'射线编号 {i!r} 超出范围 0..{fan.n - 1}')
        selected.add(i)

    a = fan.self_intersections
    for i in sorted(selected):
        if a[i] != -1:
            v = fan.rays[i]
            raise NotMinusOneCurve(f'射线 ({v.x},{v.y}) 的自交数为 {a[i]}，不是 -1')
    for i in selected:
        for j in selected:
            if fan.adjacent(i, j):
                raise AdjacentContraction(f'射线 {fan.rays[i]} 与 {fan.rays[j]} 相邻')

    rays = [v for i, v in enumerate(fan.rays) if i not in selected]
    return validate_fan(rays)


def transform(fan: CompleteFan2D, m: UnimodularMatrix) -> CompleteFan2D:
    """扇在幺模矩阵下的像"""
    images = [m.apply(v) for v in fan.rays]
    if m.det < 0:
        images.reverse()
    return validate_fan(images)


def fans_isomorphic(f1: CompleteFan2D, f2: CompleteFan2D) -> Optional[UnimodularMatrix]:
    """
    寻找 M ∈ GL(2,Z) 使得 M·f1 = f2

    相邻射线 (v_0, v_1) 是格基，只需把它映到 f2 的每一对相邻射线（两种定向）。
    """
    if f1.n != f2.n:
        return None
    v0, v1 = f1.rays[0], f1.rays[1]
    basis_inv = UnimodularMatrix.from_columns(v0, v1).inverse()
    target = f2.ray_set
    n = f2.n
    for j in range(n):
        for step in (1, -1):
            w0, w1 = f2.rays[j], f2.rays[(j + step) % n]
            m = UnimodularMatrix.from_columns(w0, w1) @ basis_inv
            if all(m.apply(v) in target for v in f1.rays):
                return m
    return None


def oda_witness(fan: CompleteFan2D, i: int, j: int) -> int:
    """
    两条不相邻射线的生成元构成格基时，返回锥 cone(x, y) 内部一条自交数为 -1 的射线编号
    """
    i, j = i % fan.n, j % fan.n
    if i == j or fan.adjacent(i, j):
        raise InvalidInput(f'射线 {i} 与 {j} 相邻')
    d = det(fan.rays[i], fan.rays[j])
    if abs(d) != 1:
        raise InvalidInput(f'射线 {i} 与 {j} 的生成元不构成格基')
    # 正则锥 cone(x, y) 位于行列式为正的一侧
    start, stop = (i, j) if d == 1 else (j, i)
    a = fan.self_intersections
    k = (start + 1) % fan.n
    while k != stop:
        if a[k] == -1:
            return k
        k = (k + 1) % fan.n
    raise InvalidInput(f'射线 {i} 与 {j} 之间没有 (-1)-曲线')


def pullback_divisor(small: CompleteFan2D, big: CompleteFan2D,
                     coefficients: Dict[PrimitiveVector, int]) -> Dict[PrimitiveVector, int]:
    """
    沿环面爆破序列拉回除子（全变换）

    插入在 v_i, v_{i+1} 之间的射线 w = v_i + v_{i+1} 的系数为 c_i + c_{i+1}。

    Args:
        small: 被爆破的扇
        big: 由 small 逐次爆破得到的扇
        coefficients: small 上每条射线的系数

    Returns:
        Dict: big 上每条射线的系数
    """
    result = {PrimitiveVector(*v): coefficients.get(PrimitiveVector(*v), 0) for v in small.rays}
    current = list(small.rays)
    missing = set(big.rays) - set(current)
    while missing:
        inserted = False
        for k in range(len(current)):
            u, v = current[k], current[(k + 1) % len(current)]
            w = PrimitiveVector(u.x + v.x, u.y + v.y)
            if w in missing:
                result[w] = result[u] + result[v]
                current.insert(k + 1, w)
                missing.discard(w)
                inserted = True
                break
        if not inserted:
            raise InvalidInput(f'{big} 不是 {small} 的爆破')
    return result


# ---- 标准扇 ----

def projective_plane() -> CompleteFan2D:
    return validate_fan([(1, 0), (0, 1), (-1, -1)])


def hirzebruch(a: int) -> CompleteFan2D:
    """F_a 的扇：(1,0), (0,1), (-1,a), (0,-1)"""
    return validate_fan([(1, 0), (0, 1), (-1, a), (0, -1)])


def square() -> CompleteFan2D:
    return hirzebruch(0)


def del_pezzo6() -> CompleteFan2D:
    return validate_fan([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])
