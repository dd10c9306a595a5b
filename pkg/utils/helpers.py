import json
import hashlib
from typing import Any, Dict, Optional, Tuple

class InputFileError(Exception):
    """输入文件无法读取或不是合法 JSON"""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.location = location

def load_json_file(path: str) -> Any:
    """
    读取 JSON 输入文件

    Args:
        path (str): 文件路径

    Returns:
        Any: 解析后的 JSON 数据
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise InputFileError(f'无法读取文件 {path}: {e.strerror}', path)

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        location = f'{path}:{e.lineno}:{e.colno}'
        raise InputFileError(f'JSON 格式错误: {e.msg}', location)

def canonical_json(data: Any) -> str:
    """
    生成规范化的 JSON 文本（键排序、无多余空白）

    Args:
        data (Any): 可序列化的数据

    Returns:
        str: 规范化 JSON
    """
    return json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False)

def generate_digest(data: Any) -> Optional[str]:
    """
    生成输入数据的 SHA-256 摘要

    Args:
        data (Any): 输入数据，None 表示未提供

    Returns:
        str: 十六进制摘要
    """
    if data is None:
        return None
    return hashlib.sha256(canonical_json(data).encode('utf-8')).hexdigest()

def build_report(command: str, fan_data: Any, group_data: Any, outcome: Dict[str, Any],
                 schema: str, version: str) -> Dict[str, Any]:
    """
    组装报告

    Args:
        command (str): 命令名
        fan_data (Any): 扇的输入
        group_data (Any): 群的输入
        outcome (dict): 服务层返回的结果字典
        schema (str): 报告格式版本
        version (str): 程序版本

    Returns:
        dict: 报告（不含时间戳，相同输入得到相同输出）
    """
    report = {
        'schema': schema,
        'version': version,
        'command': command,
        'inputs': {
            'fan': generate_digest(fan_data),
            'group': generate_digest(group_data),
        },
        'success': outcome.get('success', False),
        'verified': outcome.get('verified', False),
        'result': outcome.get('result', {}),
        'certificates': outcome.get('certificates', {}),
    }
    if outcome.get('error'):
        report['error'] = outcome['error']
        report['error_type'] = outcome.get('error_type')
    return report

def serialize_report(report: Dict[str, Any]) -> str:
    """
    把报告序列化为确定性的 JSON 文本

    Args:
        report (dict): 报告

    Returns:
        str: JSON 文本
    """
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)

def outcome_status(outcome: Dict[str, Any]) -> Tuple[str, int]:
    """
    把结果字典归类

    Returns:
        tuple: (状态名, CLI 退出码)，状态为 ok / failed / invalid / internal
    """
    if outcome.get('success'):
        if outcome.get('verified', True):
            return 'ok', 0
        return 'failed', 1
    if outcome.get('error_type') == 'InternalError':
        return 'internal', 2
    return 'invalid', 2
