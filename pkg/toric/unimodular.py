"""GL(2,Z) 中的整数矩阵"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from toric.errors import InvalidInput

# GL(2,Z) 中有限阶元素的阶只能是 1,2,3,4,6
MAX_FINITE_ORDER = 6


@dataclass(frozen=True, order=True)
class UnimodularMatrix:
    """2x2 整数矩阵 [[a, b], [c, d]]，行列式为 ±1"""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise InvalidInput(f'矩阵 {self.to_list()} 的行列式为 {self.det}，不是 ±1')

    @classmethod
    def from_list(cls, rows: Sequence[Sequence[int]]) -> 'UnimodularMatrix':
        """从 [[a, b], [c, d]] 构造矩阵"""
        try:
            (a, b), (c, d) = rows
        except (TypeError, ValueError):
            raise InvalidInput(f'矩阵必须是 2x2 整数列表: {rows!r}')
        entries = (a, b, c, d)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in entries):
            raise InvalidInput(f'矩阵元素必须是整数: {rows!r}')
        return cls(a, b, c, d)

    @classmethod
    def from_columns(cls, u: Sequence[int], v: Sequence[int]) -> 'UnimodularMatrix':
        return cls(u[0], v[0], u[1], v[1])

    @classmethod
    def identity(cls) -> 'UnimodularMatrix':
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def to_list(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def apply(self, v: Sequence[int]) -> Tuple[int, int]:
        """作用在列向量上"""
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def __matmul__(self, other: 'UnimodularMatrix') -> 'UnimodularMatrix':
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> 'UnimodularMatrix':
        s = self.det
        return UnimodularMatrix(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def conjugate(self, p: 'UnimodularMatrix') -> 'UnimodularMatrix':
        """返回 p · self · p^-1"""
        return p @ self @ p.inverse()

    def order(self) -> Optional[int]:
        """有限阶时返回阶，否则返回 None"""
        power = self
        for k in range(1, MAX_FINITE_ORDER + 1):
            if power.is_identity():
                return k
            power = power @ self
        return None

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def max_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self) -> str:
        return f'[[{self.a},{self.b}],[{self.c},{self.d}]]'


IDENTITY = UnimodularMatrix.identity()
MINUS_IDENTITY = UnimodularMatrix(-1, 0, 0, -1)
