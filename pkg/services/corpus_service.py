import logging
import random
import traceback
from collections import Counter
from typing import Any, Dict, Iterator, List, Optional, Tuple

from config import Config
from toric.derived import build_collection, verify_collection
from toric.errors import ToricError
from toric.grothendieck import standard_permutation_basis, verify_klyachko, verify_permutation_basis
from toric.lattice_fan import CompleteFan2D, blow_up, del_pezzo6, hirzebruch, projective_plane, square
from toric.minimal_model import classify_minimal, minimalize, pair_key
from toric.motivic import decompose
from toric.symmetry import SymmetryGroup, compute_aut, cone_orbits, enumerate_subgroups, trivial_group

logger = logging.getLogger(__name__)

CorpusItem = Tuple[CompleteFan2D, SymmetryGroup]

class CorpusService:
    """等变爆破语料与自检服务类"""

    def __init__(self, max_rays: Optional[int] = None, max_depth: Optional[int] = None,
                 random_chains: Optional[int] = None, hirzebruch_range: Optional[List[int]] = None):
        """
        初始化语料参数

        Args:
            max_rays (int): 语料中扇的射线数上限
            max_depth (int): 系统爆破的最大深度
            random_chains (int): 随机爆破链条数
            hirzebruch_range (list): F_a 种子的 a 值
        """
        self.max_rays = max_rays if max_rays is not None else Config.get_int('CORPUS_MAX_RAYS')
        self.max_depth = max_depth if max_depth is not None else Config.get_int('CORPUS_MAX_DEPTH')
        self.random_chains = random_chains if random_chains is not None else Config.get_int('CORPUS_RANDOM_CHAINS')
        self.hirzebruch_range = hirzebruch_range if hirzebruch_range is not None else Config.hirzebruch_range()

    def minimal_seeds(self) -> List[CorpusItem]:
        """
        种子：P2、P1xP1、dP6 配上自同构群的全部子群，F_a 配上平凡群和整个自同构群

        Returns:
            List: (扇, 群) 列表
        """
        seeds: List[CorpusItem] = []
        for fan in (projective_plane(), square(), del_pezzo6()):
            for subgroup in enumerate_subgroups(compute_aut(fan)):
                seeds.append((fan, subgroup))
        for a in self.hirzebruch_range:
            fan = hirzebruch(a)
            seeds.append((fan, trivial_group()))
            seeds.append((fan, compute_aut(fan)))
        return seeds

    def equivariant_blowups(self, fan: CompleteFan2D, group: SymmetryGroup,
                            max_rays: Optional[int] = None, max_depth: Optional[int] = None) -> List[CorpusItem]:
        """
        逐层爆破极大锥的 G-轨道，得到全部等变爆破

        同构的 (扇, 群) 对只保留第一个。

        Args:
            fan: 起点扇
            group: 作用的群
            max_rays (int): 射线数上限
            max_depth (int): 爆破次数上限，0 表示只受射线数限制

        Returns:
            List: 不含起点的 (扇, 群) 列表，按生成顺序，两两不同构
        """
        max_rays = self.max_rays if max_rays is None else max_rays
        max_depth = self.max_depth if max_depth is None else max_depth
        seen = {pair_key(fan, group)}
        result: List[CorpusItem] = []
        frontier = [fan]
        depth = 0
        while frontier and (max_depth == 0 or depth < max_depth):
            depth += 1
            next_frontier = []
            for current in frontier:
                for orbit in cone_orbits(current, group):
                    if current.n + len(orbit) > max_rays:
                        continue
                    bigger = blow_up(current, orbit)
                    key = pair_key(bigger, group)
                    if key in seen:
                        continue
                    seen.add(key)
                    result.append((bigger, group))
                    next_frontier.append(bigger)
            frontier = next_frontier
        logger.debug(f'{len(result)} equivariant blow-ups of {fan} up to {max_rays} rays')
        return result

    def random_chains_from(self, seed: int, count: Optional[int] = None, depth: int = 3) -> List[CorpusItem]:
        """
        随机等变爆破链

        Args:
            seed (int): 随机种子
            count (int): 链条数
            depth (int): 每条链的最大长度

        Returns:
            List: 每条链的终点
        """
        count = self.random_chains if count is None else count
        rng = random.Random(seed)
        seeds = self.minimal_seeds()
        chains: List[CorpusItem] = []
        for _ in range(count):
            fan, group = rng.choice(seeds)
            for _ in range(rng.randint(1, depth)):
                orbits = [o for o in cone_orbits(fan, group) if fan.n + len(o) <= self.max_rays]
                if not orbits:
                    break
                fan = blow_up(fan, rng.choice(orbits))
            chains.append((fan, group))
        return chains

    def corpus(self, seed: Optional[int] = None) -> Iterator[CorpusItem]:
        """种子、系统爆破与随机链的全部语料"""
        seed = Config.get_int('CORPUS_SEED') if seed is None else seed
        for fan, group in self.minimal_seeds():
            yield fan, group
            yield from self.equivariant_blowups(fan, group)
        yield from self.random_chains_from(seed)

    def check_item(self, fan: CompleteFan2D, group: SymmetryGroup) -> Dict[str, Any]:
        """
        对一个语料项跑完整流水线

        Returns:
            Dict: {'minimal': 标签, 'failures': 失败项列表}
        """
        failures = []
        trace = minimalize(fan, group)
        label = classify_minimal(trace.terminal, group)
        try:
            verify_klyachko(fan)
        except ToricError as e:
            failures.append(e.name)
        basis = standard_permutation_basis(trace, label)
        try:
            verify_permutation_basis(basis, fan, group)
            decompose(basis, group, label)
        except ToricError as e:
            failures.append(e.name)
        certificate = verify_collection(build_collection(trace, group, label), fan, group)
        if not certificate.passed:
            failures.append('CollectionFailure')
        return {'minimal': f'{label.kind_name}/{label.group}', 'failures': failures}

    def selftest(self, seed: Optional[int] = None) -> Dict[str, Any]:
        """
        在语料上自检

        Args:
            seed (int): 随机链的种子

        Returns:
            Dict: 结果字典，包含语料规模、极小端点统计和失败计数
        """
        try:
            checked = 0
            endpoints: Counter = Counter()
            failures: Counter = Counter()
            examples: List[Dict[str, Any]] = []
            for fan, group in self.corpus(seed):
                checked += 1
                try:
                    outcome = self.check_item(fan, group)
                except ToricError as e:
                    outcome = {'minimal': None, 'failures': [e.name]}
                endpoints[outcome['minimal']] += 1
                for name in outcome['failures']:
                    failures[name] += 1
                    if len(examples) < 10:
                        examples.append({'fan': fan.to_dict(), 'group': group.to_dict(), 'failure': name})

            logger.info(f"selftest checked {checked} corpus items, {sum(failures.values())} failures")
            return {
                'success': True,
                'verified': not failures,
                'result': {
                    'checked': checked,
                    'endpoints': {str(k): v for k, v in sorted(endpoints.items(), key=lambda kv: str(kv[0]))},
                },
                'certificates': {
                    'failures': dict(sorted(failures.items())),
                    'examples': examples,
                },
            }

        except Exception as e:
            logger.error(f"自检失败: {str(e)}")
            logger.error(f"Full traceback: {traceback.format_exc()}")
            return {
                'success': False,
                'error': f'自检失败: {str(e)}',
                'error_type': 'InternalError'
            }
