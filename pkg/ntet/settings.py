"""
Report configuration: which (n, n_w) rows go into each exported table.

默认值覆盖 n = 3..24 的计数、常见的 12/17/19 平均律变体与演化链；``data/report.yml`` 可覆盖任意子集，
非技术用户无需改动代码。环境变量 ``NTET_REPORT_CONFIG`` 可指向另一个文件。
文件缺失或格式错误时回退到默认值，并记录一条警告日志。
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple
import logging
import os

import yaml

logger = logging.getLogger(__name__)

ENV_VAR = 'NTET_REPORT_CONFIG'
DEFAULT_PORT = 3008

_BASE = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_PATH = os.path.join(_BASE, 'data', 'report.yml')

_DEFAULT_VARIANTS: List[Tuple[int, int]] = [
    (12, 7), (17, 11), (17, 10), (17, 9), (19, 12), (19, 11), (19, 10),
]

_DEFAULT_DOMINANT_RATIOS: List[Tuple[int, int]] = [
    (12, 7), (13, 8), (13, 7), (14, 9), (15, 8), (16, 9),
    (17, 11), (17, 10), (17, 9), (18, 11), (19, 12), (19, 11), (19, 10),
]


@dataclass(frozen=True)
class ReportConfig:
    count_range: Tuple[int, int] = (3, 24)
    variant_pairs: Tuple[Tuple[int, int], ...] = tuple(_DEFAULT_VARIANTS)
    ratio_pairs: Tuple[Tuple[int, int], ...] = tuple(_DEFAULT_DOMINANT_RATIOS)
    chain_seed: Tuple[int, int] = (5, 2)
    chain_steps: int = 9
    evolution_count: int = 10
    matrices: Tuple[Tuple[int, int, int], ...] = ((12, 7, 2), (19, 12, 2))
    xlsx: bool = False
    source: Optional[str] = field(default=None, compare=False)


def _int_tuple(value: Any, size: int) -> Tuple[int, ...]:
    if not isinstance(value, (list, tuple)) or len(value) != size:
        raise ValueError(f'expected a list of {size} integers, got {value!r}')
    return tuple(int(x) for x in value)


def _overrides(data: Dict) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    if 'count_range' in data:
        out['count_range'] = _int_tuple(data['count_range'], 2)
    if 'variant_pairs' in data:
        out['variant_pairs'] = tuple(_int_tuple(p, 2) for p in data['variant_pairs'])
    if 'ratio_pairs' in data:
        out['ratio_pairs'] = tuple(_int_tuple(p, 2) for p in data['ratio_pairs'])
    if 'chain_seed' in data:
        out['chain_seed'] = _int_tuple(data['chain_seed'], 2)
    if 'chain_steps' in data:
        out['chain_steps'] = int(data['chain_steps'])
    if 'evolution_count' in data:
        out['evolution_count'] = int(data['evolution_count'])
    if 'matrices' in data:
        out['matrices'] = tuple(_int_tuple(m, 3) for m in data['matrices'])
    if 'xlsx' in data:
        out['xlsx'] = bool(data['xlsx'])
    return out


def load_report_config(path: Optional[str] = None) -> ReportConfig:
    """
    Load the report selection from ``path``, ``$NTET_REPORT_CONFIG`` or data/report.yml.
    Unknown keys are ignored; any failure falls back to the defaults.
    """
    conf = ReportConfig()
    yaml_path = path or os.environ.get(ENV_VAR) or DEFAULT_PATH
    if not os.path.exists(yaml_path):
        logger.info('report config %s not found, using defaults', yaml_path)
        return conf
    try:
        with open(yaml_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
        if isinstance(data, dict) and isinstance(data.get('report'), dict):
            data = data['report']
        if not isinstance(data, dict):
            logger.warning('report config %s is not a mapping, using defaults', yaml_path)
            return conf
        loaded = replace(conf, source=yaml_path, **_overrides(data))
        logger.debug('loaded report config from %s', yaml_path)
        return loaded
    except (OSError, yaml.YAMLError, ValueError, TypeError) as exc:
        logger.warning('failed to read report config %s (%s), using defaults', yaml_path, exc)
        return conf


def server_port() -> int:
    return int(os.environ.get('PORT', str(DEFAULT_PORT)))
