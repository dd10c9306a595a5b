"""线丛例外序列的构造与验证

核心序列取极小曲面上置换基的对偶；每一步爆破经右变异 (O_E(-1), O) -> (O, O(E))
在 {O} 之后插入例外块。G-轨道保持为一个例外块。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from toric.cohomology import CohomologyVector, ext_line_bundles
from toric.errors import InvalidInput
from toric.grothendieck import (
    Divisor,
    act,
    classify_terminal,
    coefficients_of,
    group_orbits,
    line_bundle_class,
    transported_divisors,
)
from toric.lattice_fan import CompleteFan2D
from toric.minimal_model import KIND_DP6, KIND_P2, ContractionTrace, MinimalLabel
from toric.symmetry import DEFAULT_CONJUGATOR_BOUND, SymmetryGroup

logger = logging.getLogger(__name__)

_HIRZEBRUCH_NAMES = {'1': 'O', 'J1': 'O(D1)', 'J2': 'O(D2)', 'J1J2': 'O(D1+D2)'}
_PLANE_NAMES = {'1': 'O', 'J1': 'O(1)', 'J1^2': 'O(2)'}


@dataclass(frozen=True)
class CollectionObject:
    name: str
    divisor: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {'name': self.name, 'divisor': list(self.divisor)}


@dataclass(frozen=True)
class ExceptionalCollection:
    fan: CompleteFan2D = field(repr=False)
    blocks: Tuple[Tuple[CollectionObject, ...], ...]
    provenance: str = ''

    def objects(self) -> List[CollectionObject]:
        return [o for block in self.blocks for o in block]

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_dict(self) -> Dict:
        return {
            'blocks': [[o.to_dict() for o in block] for block in self.blocks],
            'block_sizes': list(self.block_sizes),
            'provenance': self.provenance,
        }


@dataclass
class CollectionCertificate:
    passed: bool
    determinant: int = 0
    pairs_checked: int = 0
    violation: Optional[Dict] = None

    def to_dict(self) -> Dict:
        return {
            'passed': self.passed,
            'determinant': self.determinant,
            'pairs_checked': self.pairs_checked,
            'violation': self.violation,
        }


def _object_name(label: MinimalLabel, slot: str) -> str:
    if slot.startswith('E'):
        return f'O({slot})'
    if label.kind == KIND_P2:
        return _PLANE_NAMES[slot]
    if label.kind == KIND_DP6:
        return 'O' if slot == '1' else f'{slot}^∨'
    return _HIRZEBRUCH_NAMES[slot]


def _block_key(slots: Sequence[str], orbit: Sequence[int]):
    names = [slots[i] for i in orbit]
    if '1' in names:
        return (0, 0)
    if names[0].startswith('E'):
        return (1, int(names[0][1:].split('.')[0]))
    return (2, min(orbit))


def build_collection(trace: ContractionTrace, g: Optional[SymmetryGroup] = None,
                     label: Optional[MinimalLabel] = None,
                     bound: int = DEFAULT_CONJUGATOR_BOUND) -> ExceptionalCollection:
    """
    由收缩序列构造完全例外序列

    块的顺序：{O}，然后按收缩顺序（最外层的爆破在前）排列各步的例外块，最后是核心序列余下的拉回。

    Raises:
        NotClassified: 端点不是已分类的极小对
    """
    g = g or trace.group
    if label is None:
        label = classify_terminal(trace, bound)
    fan = trace.initial
    slots, objects = [], []
    for slot, divisor in transported_divisors(trace, label):
        coeffs = coefficients_of(fan, divisor)
        if not slot.startswith('E'):
            coeffs = tuple(-c for c in coeffs)
        slots.append(slot)
        objects.append(CollectionObject(_object_name(label, slot), coeffs))

    orbits = group_orbits([line_bundle_class(fan, o.divisor) for o in objects], g)
    orbits = sorted(orbits, key=lambda o: _block_key(slots, o))
    blocks = tuple(tuple(objects[i] for i in orbit) for orbit in orbits)
    provenance = f'{label.kind_name}/{label.group} core, {len(trace.steps)} blow-up step(s)'
    return ExceptionalCollection(fan, blocks, provenance)


def collection_from_blocks(fan: CompleteFan2D, blocks: Sequence[Sequence[Divisor]],
                           provenance: str = 'user') -> ExceptionalCollection:
    """由给定的除子块构造序列，对象按出现顺序命名为 V0, V1, ..."""
    if not blocks:
        raise InvalidInput('序列至少需要一个块')
    result = []
    count = 0
    for block in blocks:
        current = []
        for divisor in block:
            current.append(CollectionObject(f'V{count}', coefficients_of(fan, divisor)))
            count += 1
        result.append(tuple(current))
    return ExceptionalCollection(fan, tuple(result), provenance)


def exchange_blocks(coll: ExceptionalCollection, i: int) -> ExceptionalCollection:
    """交换相邻的块 i 与 i+1"""
    if not 0 <= i < len(coll.blocks) - 1:
        raise InvalidInput(f'块编号 {i} 超出范围')
    blocks = list(coll.blocks)
    blocks[i], blocks[i + 1] = blocks[i + 1], blocks[i]
    return ExceptionalCollection(coll.fan, tuple(blocks), f'{coll.provenance}; exchanged {i},{i + 1}')


def reversed_collection(coll: ExceptionalCollection) -> ExceptionalCollection:
    return ExceptionalCollection(coll.fan, tuple(reversed(coll.blocks)), f'{coll.provenance}; reversed')


def _violation(kind: str, source: CollectionObject, target: CollectionObject,
               ext: CohomologyVector) -> Dict:
    return {'kind': kind, 'source': source.name, 'target': target.name, 'ext': list(ext)}


def verify_collection(coll: ExceptionalCollection, fan: CompleteFan2D,
                      g: Optional[SymmetryGroup] = None) -> CollectionCertificate:
    """
    验证例外序列的公理并给出第一个不满足的对

    1. 每个对象 Ext(V, V) = (1, 0, 0)
    2. 块内不同对象之间所有 Ext 为零
    3. 后面的块到前面的块所有 Ext 为零
    4. 对象的 K0 类构成 Z-基（行列式 ±1）
    给定 g 时还检查每个块在 g 下封闭。
    """
    pairs = 0
    for block in coll.blocks:
        for v in block:
            ext = ext_line_bundles(fan, v.divisor, v.divisor)
            pairs += 1
            if tuple(ext) != (1, 0, 0):
                return CollectionCertificate(False, 0, pairs, _violation('not exceptional', v, v, ext))
        for v in block:
            for w in block:
                if v is w:
                    continue
                ext = ext_line_bundles(fan, v.divisor, w.divisor)
                pairs += 1
                if not ext.is_zero():
                    return CollectionCertificate(False, 0, pairs, _violation('block', v, w, ext))

    for later in range(len(coll.blocks)):
        for earlier in range(later):
            for v in coll.blocks[later]:
                for w in coll.blocks[earlier]:
                    ext = ext_line_bundles(fan, v.divisor, w.divisor)
                    pairs += 1
                    if not ext.is_zero():
                        violation = _violation('order', v, w, ext)
                        logger.warning(f'collection fails: Ext({v.name}, {w.name}) = {tuple(ext)}')
                        return CollectionCertificate(False, 0, pairs, violation)

    classes = [line_bundle_class(fan, o.divisor) for o in coll.objects()]
    if len(classes) != fan.n:
        violation = {'kind': 'rank', 'objects': len(classes), 'rank': fan.n}
        return CollectionCertificate(False, 0, pairs, violation)
    determinant = int(Matrix([c.coordinates() for c in classes]).det())
    if determinant not in (1, -1):
        return CollectionCertificate(False, determinant, pairs, {'kind': 'not a basis'})

    if g is not None:
        for block in coll.blocks:
            members = {line_bundle_class(fan, o.divisor) for o in block}
            if any(act(m, c) not in members for m in g.generators for c in members):
                return CollectionCertificate(False, determinant, pairs,
                                             {'kind': 'block not invariant',
                                              'block': [o.name for o in block]})

    logger.info(f'exceptional collection verified: blocks {coll.block_sizes}, {pairs} Ext checks')
    return CollectionCertificate(True, determinant, pairs)
