"""环面曲面上线丛的上同调与线丛之间的 Ext

h0 是多边形 P_D = {m : <m, v_e> >= -c_e} 中的格点数，h2 由 Serre 对偶化为 h0(K-D)，
h1 由 Riemann-Roch 相减得到。
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil, floor
from typing import Dict, NamedTuple, Sequence, Tuple

import numpy as np

from toric.errors import CohomologyInconsistency
from toric.grothendieck import Divisor, coefficients_of, euler_characteristic
from toric.lattice_fan import CompleteFan2D, det

logger = logging.getLogger(__name__)


class CohomologyVector(NamedTuple):
    h0: int
    h1: int
    h2: int

    def is_zero(self) -> bool:
        return self.h0 == self.h1 == self.h2 == 0

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2


def _vertices(fan: CompleteFan2D, coeffs: Sequence[int]):
    # 两两约束直线的交点中满足全部约束的点
    rays = fan.rays
    found = []
    for i, j in combinations(range(fan.n), 2):
        u, v = rays[i], rays[j]
        d = det(u, v)
        if d == 0:
            continue
        # <m,u> = -c_i, <m,v> = -c_j
        bi, bj = -coeffs[i], -coeffs[j]
        x = Fraction(bi * v.y - bj * u.y, d)
        y = Fraction(u.x * bj - v.x * bi, d)
        if all(r.x * x + r.y * y >= -c for r, c in zip(rays, coeffs)):
            found.append((x, y))
    return found


def global_sections(fan: CompleteFan2D, coeffs: Sequence[int]) -> int:
    """P_D 中的格点数"""
    vertices = _vertices(fan, coeffs)
    if not vertices:
        return 0
    xs = [p[0] for p in vertices]
    ys = [p[1] for p in vertices]
    x_range = np.arange(ceil(min(xs)), floor(max(xs)) + 1)
    y_range = np.arange(ceil(min(ys)), floor(max(ys)) + 1)
    if x_range.size == 0 or y_range.size == 0:
        return 0
    grid = np.stack(np.meshgrid(x_range, y_range, indexing='ij'), axis=-1).reshape(-1, 2)
    rays = np.array(fan.rays, dtype=np.int64)
    bounds = -np.asarray(coeffs, dtype=np.int64)
    inside = np.all(grid @ rays.T >= bounds, axis=1)
    return int(np.count_nonzero(inside))


@lru_cache(maxsize=8192)
def _cohomology(fan: CompleteFan2D, coeffs: Tuple[int, ...]) -> CohomologyVector:
    h0 = global_sections(fan, coeffs)
    h2 = global_sections(fan, tuple(-1 - c for c in coeffs))
    chi = euler_characteristic(fan, coeffs)
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise CohomologyInconsistency(f'除子 {coeffs} 的 h1 = {h1} < 0 (h0={h0}, h2={h2}, chi={chi})')
    return CohomologyVector(h0, h1, h2)


def line_bundle_cohomology(fan: CompleteFan2D, divisor: Divisor) -> CohomologyVector:
    """
    计算 (h0, h1, h2)(O(D))

    Args:
        fan: 光滑完备扇
        divisor: 按射线顺序的系数，或 射线 -> 系数 的字典

    Returns:
        CohomologyVector
    """
    return _cohomology(fan, coefficients_of(fan, divisor))


def ext_line_bundles(fan: CompleteFan2D, source: Divisor, target: Divisor) -> CohomologyVector:
    """Ext^r(O(L1), O(L2)) = H^r(O(L2 - L1))"""
    s = coefficients_of(fan, source)
    t = coefficients_of(fan, target)
    return _cohomology(fan, tuple(b - a for a, b in zip(s, t)))


def ext_table(fan: CompleteFan2D, objects: Sequence[Divisor]) -> Dict[Tuple[int, int], CohomologyVector]:
    """所有有序对 (i, j) 的 Ext(O_i, O_j)"""
    divisors = [coefficients_of(fan, d) for d in objects]
    return {
        (i, j): ext_line_bundles(fan, divisors[i], divisors[j])
        for i in range(len(divisors))
        for j in range(len(divisors))
    }
