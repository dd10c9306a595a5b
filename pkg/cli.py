"""
命令行入口

    python cli.py validate --fan p2.json
    python cli.py report --fan dp6.json --group d12.json --json
    python cli.py collection --fan p2.json --order reversed
    python cli.py selftest --seed 7

退出码: 0 成功且证书通过, 1 证书未通过, 2 输入非法或内部错误
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from config import Config
from services.corpus_service import CorpusService
from services.surface_service import SurfaceService
from utils.helpers import InputFileError, build_report, load_json_file, outcome_status, serialize_report

logger = logging.getLogger(__name__)

COMMANDS = [
    'validate', 'aut', 'classify-group', 'minimalize', 'classify',
    'k0-verify', 'basis', 'collection', 'decompose', 'report', 'selftest',
]

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='toric-surface-lab',
        description='光滑完备环面曲面的等变分类工具'
    )
    parser.add_argument('command', choices=COMMANDS, help='要执行的命令')
    parser.add_argument('--fan', help='扇的 JSON 文件，格式 {"rays": [[x, y], ...]}')
    parser.add_argument('--group', help='群的 JSON 文件，格式 {"generators": [...]}，缺省为平凡群')
    parser.add_argument('--json', action='store_true', help='在标准输出打印 JSON 报告')
    parser.add_argument('--bound', type=int, help='线丛基搜索的系数上界')
    parser.add_argument('--seed', type=int, help='自检语料的随机种子')
    parser.add_argument('--order', choices=['standard', 'reversed'], default='standard',
                        help='例外序列的块顺序')
    return parser

def _setup_logging():
    # 日志走标准错误，标准输出只放报告
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s %(levelname)s:%(name)s:%(message)s',
        handlers=[logging.StreamHandler(sys.stderr)]
    )

def summarize(report: Dict[str, Any]) -> List[str]:
    """
    把报告整理成几行人类可读的摘要

    Args:
        report (dict): build_report 生成的报告

    Returns:
        List[str]: 摘要行
    """
    status = 'verified' if report['success'] and report['verified'] else (
        'FAILED' if report['success'] else 'ERROR')
    lines = [f"{report['command']}: {status}"]
    if report.get('error'):
        lines.append(f"  {report.get('error_type')}: {report['error']}")

    result = report.get('result') or {}
    if 'n' in result:
        lines.append(f"  N = {result['n']}, self-intersections = {result['self_intersections']}")
    if 'order' in result and 'label' in result:
        lines.append(f"  group of order {result['order']}, class {result['label']}")
    if 'aut_order' in result:
        lines.append(f"  |Aut| = {result['aut_order']}")
    if 'steps' in result:
        lines.append(f"  {result['steps']} contraction step(s)")
    minimal = result.get('minimal')
    if isinstance(minimal, dict):
        lines.append(f"  minimal model {minimal['kind']} / {minimal['group']}, family ({minimal['family']})")
    if 'rank' in result:
        lines.append(f"  K0 rank {result['rank']}, Pic rank {result['picard_rank']}, K^2 = {result['canonical_square']}")
    if 'basis' in result:
        lines.append(f"  basis orbits {tuple(result['basis']['orbit_sizes'])}: {', '.join(e['slot'] for e in result['basis']['elements'])}")
    if 'search' in result:
        found = 'found' if result['search']['found'] else 'none found'
        lines.append(f"  line bundle search: {found} ({result['search']['candidates']} candidates, "
                     f"exhaustive={result['search']['exhaustive']})")
    if 'collection' in result:
        lines.append(f"  collection blocks {tuple(result['collection']['block_sizes'])}")
    if 'decomposition' in result:
        lines.append(f"  X = {result['decomposition']['product']}")
    if 'checked' in result:
        lines.append(f"  checked {result['checked']} corpus items")

    for name, certificate in sorted((report.get('certificates') or {}).items()):
        if isinstance(certificate, dict) and 'passed' in certificate:
            mark = 'pass' if certificate['passed'] else 'FAIL'
            lines.append(f"  certificate {name}: {mark}")
            if certificate.get('violation'):
                lines.append(f"    violation: {certificate['violation']}")
        elif name == 'failures' and certificate:
            for failure, count in certificate.items():
                lines.append(f"  {failure}: {count}")
    return lines

def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    Args:
        argv (list): 命令行参数，缺省取 sys.argv

    Returns:
        int: 退出码
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging()

    try:
        fan_data = load_json_file(args.fan) if args.fan else None
        group_data = load_json_file(args.group) if args.group else None
    except InputFileError as e:
        print(f"error: {e.message} ({e.location})", file=sys.stderr)
        return 2

    if args.command == 'selftest':
        outcome = CorpusService().selftest(args.seed)
    else:
        options: Dict[str, Any] = {'order': args.order}
        if args.bound is not None:
            options['bound'] = args.bound
        outcome = SurfaceService().run(args.command, fan_data, group_data, **options)

    report = build_report(args.command, fan_data, group_data, outcome, Config.REPORT_SCHEMA, Config.APP_VERSION)
    if args.json:
        print(serialize_report(report))
    else:
        print('\n'.join(summarize(report)))

    _, code = outcome_status(outcome)
    if code == 2 and not args.json:
        print(f"error: {outcome.get('error_type')}: {outcome.get('error')}", file=sys.stderr)
    return code

if __name__ == '__main__':
    sys.exit(main())
