"""
Output rendering: CSV, JSON, aligned text tables and DOT rings.

表格文本输出使用中文列名（与 CSV/JSON 中的 snake_case 字段一一对应），
便于直接阅读；CSV 与 JSON 保持机器可读：
 - CSV：首行为表头，逗号分隔，``\\n`` 换行；列表字段用空格连接
 - JSON：两格缩进，ASCII 安全，末尾带换行
 - DOT：单个有向环，边上标注主音每前进一步调号范数的变化
"""

from typing import Any, Dict, Iterable, List, Optional, Sequence
import csv
import io
import json
import unicodedata

from .config import BLACK_GLYPH, WHITE_GLYPH
from .evolution import round_half_up
from .theory import CircleEntry

_COLUMN_LABELS: Dict[str, str] = {
    'n': 'n',
    'n_w': '白键数',
    'n_b': '黑键数',
    'count': '解的个数',
    'cyclically_equivalent': '循环等价',
    'variant': '变体',
    'index': '变体',
    'bits': '键盘排列',
    'white_set': '白键集合',
    's0': 's0',
    'k': 'k',
    'tonic': '主音',
    'norm': '范数',
    'mode': '模式',
    'offsets': '调号',
    'dominant': '属音',
    'subdominant': '下属音',
    'ascending_leading': '上行导音',
    'descending_leading': '下行导音',
    'ratio': '频率比',
    'deviation': '偏差',
    'attractor': '吸引子',
    'W': 'W',
    'V': 'V',
    'U': 'U',
    'degree': '音级',
    'sum': '列和',
    'name': '名称',
    'value': '数值',
    'property': '性质',
    'holds': '成立',
}

_BOOL_LABELS = {True: '是', False: '否'}


def config_glyphs(bits: Iterable[int]) -> str:
    """Render a configuration with ∘ for white and • for black keys."""
    return ''.join(BLACK_GLYPH if int(b) else WHITE_GLYPH for b in bits)


def format_ratio(x: float, places: int = 3) -> str:
    return str(round_half_up(x, places))


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ' '.join(str(v) for v in value)
    if value is None:
        return ''
    return str(value)


def to_csv(rows: Sequence[Dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=True) + '\n'


def _width(text: str) -> int:
    return sum(2 if unicodedata.east_asian_width(ch) in ('W', 'F') else 1 for ch in text)


def _pad(text: str, width: int) -> str:
    return text + ' ' * (width - _width(text))


def to_table(rows: Sequence[Dict], columns: Sequence[str], labels: Optional[Dict[str, str]] = None) -> str:
    """Aligned human-readable table with localized column titles."""
    names = dict(_COLUMN_LABELS)
    names.update(labels or {})
    header = [names.get(c, c) for c in columns]
    body: List[List[str]] = []
    for row in rows:
        line = []
        for c in columns:
            value = row.get(c)
            line.append(_BOOL_LABELS[value] if isinstance(value, bool) else _cell(value))
        body.append(line)
    widths = [max([_width(h)] + [_width(r[i]) for r in body]) for i, h in enumerate(header)]
    lines = ['  '.join(_pad(h, w) for h, w in zip(header, widths)).rstrip()]
    lines.append('  '.join('-' * w for w in widths))
    for r in body:
        lines.append('  '.join(_pad(v, w) for v, w in zip(r, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def circle_to_dot(entries: Sequence[CircleEntry], name: str = 'circle', step: Optional[int] = None) -> str:
    """One cyclic digraph; each node is a tonic labelled with its norm."""
    lines = [f'digraph "{name}" {{']
    if step is not None:
        lines.append(f'  label="step {step}";')
    for e in entries:
        lines.append(f'  "{e.tonic}" [label="{e.tonic} ({e.norm:+d})"];')
    size = len(entries)
    for i, e in enumerate(entries):
        nxt = entries[(i + 1) % size]
        lines.append(f'  "{e.tonic}" -> "{nxt.tonic}" [label="{nxt.norm - e.norm:+d}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
