"""toric 包的异常定义

所有数学层的错误都继承自 ToricError，服务层按 name 字段把错误转换为结果字典。
"""


class ToricError(Exception):
    """数学层错误基类"""

    name = 'ToricError'

    def __init__(self, message: str = ''):
        super().__init__(message or self.name)
        self.message = message or self.name

    def to_dict(self):
        return {'error_type': self.name, 'error': self.message}


class InvalidInput(ToricError):
    """输入数据格式错误"""
    name = 'InvalidInput'


# ---- lattice_fan ----

class FanError(ToricError):
    """扇的输入或结构错误"""
    name = 'FanError'


class NonPrimitiveRay(FanError):
    name = 'NonPrimitiveRay'


class NotCounterclockwise(FanError):
    name = 'NotCounterclockwise'


class NotSmooth(FanError):
    name = 'NotSmooth'


class NotComplete(FanError):
    name = 'NotComplete'


class TooFewRays(FanError):
    name = 'TooFewRays'


class InvalidConeIndex(FanError):
    name = 'InvalidConeIndex'


class NotMinusOneCurve(FanError):
    name = 'NotMinusOneCurve'


class AdjacentContraction(FanError):
    name = 'AdjacentContraction'


# ---- symmetry ----

class GroupError(ToricError):
    """对称群相关错误"""
    name = 'GroupError'


class NotFinite(GroupError):
    name = 'NotFinite'


class UnclassifiedSubgroup(GroupError):
    name = 'UnclassifiedSubgroup'


class GroupDoesNotPreserveFan(GroupError):
    name = 'GroupDoesNotPreserveFan'


# ---- minimal_model ----

class NotMinimal(ToricError):
    name = 'NotMinimal'


class TableViolation(ToricError):
    name = 'TableViolation'


# ---- grothendieck ----

class IncompatibleFan(ToricError):
    name = 'IncompatibleFan'


class RelationFailure(ToricError):
    name = 'RelationFailure'


class NotClassified(ToricError):
    name = 'NotClassified'


class NotABasis(ToricError):
    name = 'NotABasis'


class NotInvariant(ToricError):
    name = 'NotInvariant'


class NotHirzebruch(ToricError):
    name = 'NotHirzebruch'


# ---- cohomology ----

class CohomologyInconsistency(ToricError):
    name = 'CohomologyInconsistency'


# ---- motivic ----

class UnverifiedBasis(ToricError):
    name = 'UnverifiedBasis'
