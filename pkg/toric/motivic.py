"""曲面在动机范畴中的可分代数分解（符号形式）

每个置换基轨道给出一个因子：底代数的次数等于轨道大小，Brauer 类只是符号标签。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from toric.errors import ToricError, UnverifiedBasis
from toric.grothendieck import PermutationBasis, verify_permutation_basis
from toric.minimal_model import (
    KIND_DP6,
    KIND_HIRZEBRUCH,
    KIND_P1XP1,
    KIND_P2,
    MinimalLabel,
    surface_family,
)
from toric.symmetry import ConjugacyLabel, SymmetryGroup

logger = logging.getLogger(__name__)

_SLOT_NAMES = {
    KIND_HIRZEBRUCH: {'1': 'k', 'J1': 'Q', 'J2': 'k', 'J1J2': 'Q'},
    KIND_P2: {'1': 'k', 'J1': 'A', 'J1^2': 'A^{⊗2}'},
    KIND_P1XP1: {'1': 'k', 'J1': 'B', 'J2': 'B', 'J1J2': 'A'},
    KIND_DP6: {'1': 'k', 'R1': 'P', 'R2': 'P', 'R3': 'P', 'Q1': 'Q', 'Q2': 'Q'},
}
# 轨道分裂时加下标的名字，只有 P1xP1 的 B 与 dP6 的 P、Q 会分裂
_SPLITTABLE = {KIND_P1XP1: {'B'}, KIND_DP6: {'P', 'Q'}}
# 交换两族直线的群
_RULING_SWAP = {ConjugacyLabel.D2, ConjugacyLabel.C4, ConjugacyLabel.D4, ConjugacyLabel.D8}

_FAMILY_NAMES = {
    'i': 'P1-bundle over a smooth conic',
    'ii': 'Severi-Brauer surface',
    'iii': 'involution surface',
    'iv': 'del Pezzo surface of degree 6',
}

DP6_NOTE = ('P is named after End(π_*R1) and described over the quadratic algebra, '
            'while the R-orbit has size 3; the factor keeps base degree 3 from the orbit')


@dataclass(frozen=True)
class AlgebraFactor:
    base_degree: int
    brauer_label: str
    source_orbit: Tuple[str, ...]
    endomorphism_label: str

    def to_dict(self) -> Dict:
        return {
            'base_degree': self.base_degree,
            'label': self.brauer_label,
            'orbit': list(self.source_orbit),
            'endomorphism': self.endomorphism_label,
        }


@dataclass(frozen=True)
class FamilyAnnotation:
    family: str
    name: str
    slots: Tuple[str, ...]
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {'family': self.family, 'name': self.name, 'slots': list(self.slots), 'notes': list(self.notes)}


@dataclass(frozen=True)
class MotivicDecomposition:
    factors: Tuple[AlgebraFactor, ...]
    family: Optional[FamilyAnnotation] = None
    metadata: Dict[str, str] = field(default_factory=dict, compare=False)

    def render(self, economical: bool = True) -> str:
        if economical:
            return '×'.join(f.brauer_label for f in self.factors)
        return '×'.join(f.endomorphism_label for f in self.factors)

    def to_dict(self) -> Dict:
        return {
            'factors': [f.to_dict() for f in self.factors],
            'product': self.render(),
            'family': self.family.to_dict() if self.family else None,
            'metadata': dict(self.metadata),
        }


def _is_odd_hirzebruch(label: MinimalLabel) -> bool:
    return label.kind == KIND_HIRZEBRUCH and label.a % 2 == 1


def annotate_family(label: MinimalLabel) -> FamilyAnnotation:
    """
    极小曲面所属的族以及核心因子的命名

    Raises:
        NotMinimal: 未知的极小曲面类型
    """
    family = surface_family(label.kind)
    notes: List[str] = []
    if label.kind == KIND_HIRZEBRUCH:
        slots = ('k', 'k', 'k', 'k') if _is_odd_hirzebruch(label) else ('k', 'Q', 'k', 'Q')
        if _is_odd_hirzebruch(label):
            notes.append('odd degree: the quaternion algebra is split')
    elif label.kind == KIND_P2:
        slots = ('k', 'A', 'A^{⊗2}')
    elif label.kind == KIND_P1XP1:
        if label.group in _RULING_SWAP:
            slots = ('k', 'B', 'A')
            notes.append('B is an Azumaya algebra over the quadratic discriminant extension')
        else:
            slots = ('k', 'B_1', 'B_2', 'A')
            notes.append('the discriminant extension is split, B = B_1 × B_2')
    else:
        slots = ('k', 'P', 'Q')
        notes.append(DP6_NOTE)
    return FamilyAnnotation(family, _FAMILY_NAMES[family], slots, tuple(notes))


def _base_name(label: Optional[MinimalLabel], slot: str) -> Optional[str]:
    if slot == '1':
        return 'k'
    if slot.startswith('E'):
        return f'Hom_G({slot.split(".")[0]},l)'
    if label is None:
        return None
    name = _SLOT_NAMES[label.kind].get(slot)
    if name == 'Q' and _is_odd_hirzebruch(label):
        return 'k'
    return name


def decompose(basis: PermutationBasis, g: SymmetryGroup,
              label: Optional[MinimalLabel] = None) -> MotivicDecomposition:
    """
    把置换基的每个 G-轨道变成一个可分代数因子

    Args:
        basis: 置换基（会先验证）
        g: 作用的群
        label: 极小端点的分类；缺省取 basis.label

    Raises:
        UnverifiedBasis: 基没有通过验证
    """
    try:
        verify_permutation_basis(basis, basis.fan, g)
    except ToricError as e:
        raise UnverifiedBasis(f'置换基未通过验证: {e.message}')
    label = label or basis.label

    names: List[Optional[str]] = []
    for orbit in basis.orbits:
        slot = basis.elements[orbit[0]].slot
        names.append(_base_name(label, slot))
    splittable = _SPLITTABLE.get(label.kind, set()) if label is not None else set()
    counts = {n: names.count(n) for n in set(names) if n in splittable}

    factors = []
    seen: Dict[str, int] = {}
    for orbit, name in zip(basis.orbits, names):
        slots = tuple(basis.elements[i].slot for i in orbit)
        endomorphism = 'k' if slots[0] == '1' else f'End(π_*{slots[0]})'
        if name is None:
            name = endomorphism
        elif counts.get(name, 0) > 1:
            seen[name] = seen.get(name, 0) + 1
            name = f'{name}_{seen[name]}'
        factors.append(AlgebraFactor(len(orbit), name, slots, endomorphism))

    family = annotate_family(label) if label is not None else None
    metadata = {}
    if label is not None and label.kind == KIND_DP6:
        metadata['dp6_label_tension'] = DP6_NOTE
    result = MotivicDecomposition(tuple(factors), family, metadata)
    logger.info(f'motivic decomposition: {result.render()}')
    return result
