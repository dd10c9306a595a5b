from flask import request
from flask_restx import Namespace, Resource, fields
import logging
from config import Config
from services.surface_service import SurfaceService
from utils.helpers import build_report, outcome_status

logger = logging.getLogger(__name__)

# 创建命名空间
surface_ns = Namespace('surface', description='环面曲面分类流水线相关接口')

# 结果状态对应的HTTP状态码
STATUS_CODES = {
    'ok': 200,
    'failed': 422,
    'invalid': 400,
    'internal': 500,
}

# API模型定义
surface_input_model = surface_ns.model('SurfaceInput', {
    'fan': fields.Raw(description='扇，格式为 {"rays": [[x, y], ...]}', example={'rays': [[1, 0], [0, 1], [-1, -1]]}),
    'group': fields.Raw(description='群，格式为 {"generators": [[[a, b], [c, d]], ...]}，缺省为平凡群'),
    'bound': fields.Integer(description='线丛基搜索的系数上界', min=0),
    'order': fields.String(description='例外序列的块顺序', enum=['standard', 'reversed'], default='standard')
})

report_model = surface_ns.model('Report', {
    'schema': fields.String(description='报告格式版本'),
    'version': fields.String(description='程序版本'),
    'command': fields.String(description='命令名'),
    'inputs': fields.Raw(description='输入的SHA-256摘要'),
    'success': fields.Boolean(description='计算是否完成'),
    'verified': fields.Boolean(description='证书是否全部通过'),
    'result': fields.Raw(description='计算结果'),
    'certificates': fields.Raw(description='证书'),
    'error': fields.String(description='错误信息'),
    'error_type': fields.String(description='错误类型')
})

cohomology_input_model = surface_ns.model('CohomologyInput', {
    'fan': fields.Raw(required=True, description='扇'),
    'divisor': fields.List(fields.Integer, required=True, description='环面不变除子的系数，按射线顺序', example=[1, 0, 0])
})

cohomology_result_model = surface_ns.model('CohomologyResult', {
    'success': fields.Boolean(description='计算是否成功'),
    'h0': fields.Integer(description='h0'),
    'h1': fields.Integer(description='h1'),
    'h2': fields.Integer(description='h2'),
    'error': fields.String(description='错误信息'),
    'error_type': fields.String(description='错误类型')
})

@surface_ns.route('/cohomology')
class LineBundleCohomology(Resource):
    """线丛上同调接口"""

    @surface_ns.expect(cohomology_input_model)
    @surface_ns.marshal_with(cohomology_result_model)
    @surface_ns.doc(
        'line_bundle_cohomology',
        description='计算 O(D) 的 h0、h1、h2',
        responses={
            200: '计算成功',
            400: '请求参数错误',
            500: '服务器内部错误'
        }
    )
    def post(self):
        """计算一个环面线丛的上同调维数"""
        try:
            data = request.get_json()
            result = SurfaceService().cohomology(data.get('fan'), data.get('divisor'))
            return result, 200 if result['success'] else 400

        except Exception as e:
            logger.error(f"上同调计算失败: {str(e)}")
            return {
                'success': False,
                'error': f'Internal server error: {str(e)}',
                'error_type': 'InternalError'
            }, 500

@surface_ns.route('/<string:command>')
@surface_ns.param('command', '命令名：validate、aut、classify-group、minimalize、classify、k0-verify、basis、collection、decompose、report')
class SurfaceCommand(Resource):
    """流水线命令接口"""

    @surface_ns.expect(surface_input_model)
    @surface_ns.marshal_with(report_model, skip_none=True)
    @surface_ns.doc(
        'run_command',
        description='对给定的扇和群执行一条命令，返回带证书的报告',
        responses={
            200: '计算成功且证书通过',
            400: '输入非法',
            422: '证书未通过',
            500: '服务器内部错误'
        }
    )
    def post(self, command):
        """
        执行流水线命令

        与命令行使用同一个服务层，报告格式相同
        """
        data = request.get_json() or {}
        fan_data = data.get('fan')
        group_data = data.get('group')

        options = {}
        if data.get('bound') is not None:
            options['bound'] = data['bound']
        if data.get('order'):
            options['order'] = data['order']

        logger.info(f"Running command {command}")
        service = SurfaceService(
            conjugator_bound=Config.get_int('CONJUGATOR_BOUND'),
            search_bound=Config.get_int('BASIS_SEARCH_BOUND')
        )
        outcome = service.run(command, fan_data, group_data, **options)
        report = build_report(command, fan_data, group_data, outcome, Config.REPORT_SCHEMA, Config.APP_VERSION)

        status, _ = outcome_status(outcome)
        if status == 'internal':
            logger.error(f"{command} failed: {outcome.get('error')}")
        return report, STATUS_CODES[status]
