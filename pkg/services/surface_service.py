import logging
import traceback
from typing import Any, Callable, Dict, Optional, Tuple

from config import Config
from toric.cohomology import line_bundle_cohomology
from toric.derived import build_collection, reversed_collection, verify_collection
from toric.errors import (
    CohomologyInconsistency,
    InvalidInput,
    NotABasis,
    NotInvariant,
    RelationFailure,
    TableViolation,
    ToricError,
    UnclassifiedSubgroup,
    UnverifiedBasis,
)
from toric.grothendieck import (
    canonical_class,
    fa_recurrence_check,
    intersect,
    picard,
    search_line_bundle_basis,
    standard_permutation_basis,
    verify_klyachko,
    verify_permutation_basis,
)
from toric.lattice_fan import CompleteFan2D, fan_from_dict
from toric.minimal_model import classify_minimal, minimalize
from toric.motivic import decompose
from toric.symmetry import SymmetryGroup, classify_subgroup, compute_aut, group_from_dict

logger = logging.getLogger(__name__)

# 这些错误表示证书没有通过，而不是输入非法
CERTIFICATE_ERRORS = (
    RelationFailure,
    NotABasis,
    NotInvariant,
    UnverifiedBasis,
    TableViolation,
    UnclassifiedSubgroup,
    CohomologyInconsistency,
)

class SurfaceService:
    """环面曲面分类流水线服务类，CLI 与 HTTP 接口共用"""

    def __init__(self, conjugator_bound: Optional[int] = None, search_bound: Optional[int] = None):
        """
        初始化服务

        Args:
            conjugator_bound (int): 共轭搜索的矩阵元素上界，缺省读配置
            search_bound (int): 线丛基搜索的系数上界，缺省读配置
        """
        self.conjugator_bound = conjugator_bound if conjugator_bound is not None else Config.get_int('CONJUGATOR_BOUND')
        self.search_bound = search_bound if search_bound is not None else Config.get_int('BASIS_SEARCH_BOUND')
        self.commands: Dict[str, Callable] = {
            'validate': self.validate,
            'aut': self.aut,
            'classify-group': self.classify_group,
            'minimalize': self.minimalize,
            'classify': self.classify,
            'k0-verify': self.k0_verify,
            'basis': self.basis,
            'collection': self.collection,
            'decompose': self.decompose,
            'report': self.report,
        }

    def run(self, command: str, fan_data: Any = None, group_data: Any = None, **options) -> Dict[str, Any]:
        """
        执行一条命令

        Args:
            command (str): 命令名
            fan_data (dict): 扇的 JSON 数据
            group_data (dict): 群的 JSON 数据，None 表示平凡群
            **options: bound / order 等命令选项

        Returns:
            Dict: {'success', 'verified', 'result', 'certificates'} 或 {'success': False, 'error', 'error_type'}
        """
        handler = self.commands.get(command)
        if handler is None:
            return {
                'success': False,
                'error': f'未知命令: {command}',
                'error_type': 'InvalidInput'
            }

        try:
            result, certificates, verified = handler(fan_data, group_data, **options)
            return {
                'success': True,
                'verified': verified,
                'result': result,
                'certificates': certificates
            }

        except CERTIFICATE_ERRORS as e:
            logger.warning(f"{command} 证书失败: {e.name}: {e.message}")
            return {
                'success': True,
                'verified': False,
                'result': {},
                'certificates': {'failure': e.to_dict()},
                'error': e.message,
                'error_type': e.name
            }

        except ToricError as e:
            logger.info(f"{command} 输入无效: {e.name}: {e.message}")
            return {
                'success': False,
                'error': e.message,
                'error_type': e.name
            }

        except Exception as e:
            logger.error(f"{command} 处理失败: {str(e)}")
            logger.error(f"Full traceback: {traceback.format_exc()}")
            return {
                'success': False,
                'error': f'内部错误: {str(e)}',
                'error_type': 'InternalError'
            }

    # ---- 输入解析 ----

    def _fan(self, fan_data: Any) -> CompleteFan2D:
        if fan_data is None:
            raise InvalidInput('缺少扇的输入')
        return fan_from_dict(fan_data)

    def _group(self, fan: Optional[CompleteFan2D], group_data: Any) -> SymmetryGroup:
        group = group_from_dict(group_data)
        if fan is not None:
            group.attach(fan)
        return group

    def _group_summary(self, group: SymmetryGroup) -> Dict[str, Any]:
        return {
            'order': group.order,
            'generators': [g.to_list() for g in group.generators],
            'label': str(classify_subgroup(group, self.conjugator_bound)),
        }

    # ---- 命令 ----

    def validate(self, fan_data, group_data=None, **options) -> Tuple[Dict, Dict, bool]:
        fan = self._fan(fan_data)
        a = fan.self_intersections
        result = {
            'fan': fan.to_dict(),
            'n': fan.n,
            'self_intersections': list(a.values),
            'identity_holds': a.identity_holds(),
        }
        if group_data is not None:
            result['group'] = self._group_summary(self._group(fan, group_data))
        return result, {}, True

    def aut(self, fan_data, group_data=None, **options):
        fan = self._fan(fan_data)
        group = compute_aut(fan)
        result = self._group_summary(group)
        result['elements'] = [m.to_list() for m in group.sorted_elements()]
        return result, {}, True

    def classify_group(self, fan_data, group_data=None, **options):
        fan = self._fan(fan_data) if fan_data is not None else None
        if group_data is None:
            raise InvalidInput('缺少群的输入')
        group = self._group(fan, group_data)
        return self._group_summary(group), {}, True

    def minimalize(self, fan_data, group_data=None, **options):
        fan = self._fan(fan_data)
        group = self._group(fan, group_data)
        trace = minimalize(fan, group)
        return {'trace': trace.to_dict(), 'steps': len(trace)}, {}, True

    def _classified(self, fan_data, group_data):
        fan = self._fan(fan_data)
        group = self._group(fan, group_data)
        trace = minimalize(fan, group)
        label = classify_minimal(trace.terminal, group, self.conjugator_bound)
        return fan, group, trace, label

    def classify(self, fan_data, group_data=None, **options):
        fan, group, trace, label = self._classified(fan_data, group_data)
        result = {
            'trace': trace.to_dict(),
            'steps': len(trace),
            'minimal': label.to_dict(),
            'group': self._group_summary(group),
        }
        return result, {}, True

    def k0_verify(self, fan_data, group_data=None, **options):
        fan = self._fan(fan_data)
        certificate = verify_klyachko(fan)
        pic = picard(fan)
        result = {
            'rank': fan.n,
            'picard_rank': pic.rank,
            'picard_basis': [[v.x, v.y] for v in pic.basis_rays],
            'intersection_form': pic.form.tolist(),
            'canonical_square': intersect(fan, canonical_class(fan), canonical_class(fan)),
        }
        certificates = {'klyachko': certificate.to_dict()}
        if fan.n == 4:
            recurrence = fa_recurrence_check(fan)
            certificates['hirzebruch_recurrence'] = {'passed': recurrence, 'm': list(range(6))}
            return result, certificates, certificate.passed and recurrence
        return result, certificates, certificate.passed

    def basis(self, fan_data, group_data=None, bound=None, **options):
        fan, group, trace, label = self._classified(fan_data, group_data)
        basis = standard_permutation_basis(trace, label, self.conjugator_bound)
        certificate = verify_permutation_basis(basis, fan, group)
        search_bound = int(bound) if bound is not None else self.search_bound
        search = search_line_bundle_basis(fan, group, search_bound)
        result = {'minimal': label.to_dict(), 'basis': basis.to_dict(), 'search': search.to_dict()}
        return result, {'basis': certificate.to_dict()}, certificate.passed

    def collection(self, fan_data, group_data=None, order='standard', **options):
        fan, group, trace, label = self._classified(fan_data, group_data)
        coll = build_collection(trace, group, label, self.conjugator_bound)
        if order == 'reversed':
            coll = reversed_collection(coll)
        elif order != 'standard':
            raise InvalidInput(f'未知的顺序: {order}')
        certificate = verify_collection(coll, fan, group)
        result = {'minimal': label.to_dict(), 'collection': coll.to_dict()}
        return result, {'collection': certificate.to_dict()}, certificate.passed

    def decompose(self, fan_data, group_data=None, **options):
        fan, group, trace, label = self._classified(fan_data, group_data)
        basis = standard_permutation_basis(trace, label, self.conjugator_bound)
        decomposition = decompose(basis, group, label)
        result = {'minimal': label.to_dict(), 'decomposition': decomposition.to_dict()}
        return result, {}, True

    def report(self, fan_data, group_data=None, bound=None, **options):
        """
        完整流水线：遇到硬错误时停止，证书失败只记录下来
        """
        fan, group, trace, label = self._classified(fan_data, group_data)
        result: Dict[str, Any] = {
            'fan': fan.to_dict(),
            'self_intersections': list(fan.self_intersections.values),
            'group': self._group_summary(group),
            'aut_order': compute_aut(fan).order,
            'trace': trace.to_dict(),
            'minimal': label.to_dict(),
        }
        certificates: Dict[str, Any] = {}
        verified = True

        try:
            certificates['klyachko'] = verify_klyachko(fan).to_dict()
        except RelationFailure as e:
            certificates['klyachko'] = {'passed': False, 'violation': e.message}
            verified = False

        basis = standard_permutation_basis(trace, label, self.conjugator_bound)
        result['basis'] = basis.to_dict()
        try:
            certificates['basis'] = verify_permutation_basis(basis, fan, group).to_dict()
        except (NotABasis, NotInvariant) as e:
            certificates['basis'] = {'passed': False, 'violation': e.message}
            verified = False

        coll = build_collection(trace, group, label, self.conjugator_bound)
        collection_certificate = verify_collection(coll, fan, group)
        result['collection'] = coll.to_dict()
        certificates['collection'] = collection_certificate.to_dict()
        verified = verified and collection_certificate.passed

        if certificates['basis'].get('passed'):
            result['decomposition'] = decompose(basis, group, label).to_dict()

        if bound is not None:
            result['search'] = search_line_bundle_basis(fan, group, int(bound)).to_dict()

        if not verified:
            logger.warning(f"report for {fan}: some certificates failed")
        return result, certificates, verified

    def cohomology(self, fan_data, divisor) -> Dict[str, Any]:
        """单个线丛的上同调（供 HTTP 接口使用）"""
        try:
            fan = self._fan(fan_data)
            h = line_bundle_cohomology(fan, divisor)
            return {'success': True, 'h0': h.h0, 'h1': h.h1, 'h2': h.h2}
        except ToricError as e:
            return {'success': False, 'error': e.message, 'error_type': e.name}
