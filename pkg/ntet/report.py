"""
Write every derived table as files.

默认输出八个文件：table5.csv（解的计数）、table6.csv（变体）、table11.csv（属音比）、
table13.csv（演化链的属音比）、table14.csv（W、V、U 演化表）、matrix_12_7_2.csv、
matrix_19_12_2.csv、constants.json。
内容只依赖配置，两次运行逐字节相同（不写时间戳）。

可选的 Excel 工作簿每个表格一个工作表，文件名带时间戳，不在逐字节一致的约定之内。
"""

from collections import OrderedDict
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple
import logging
import os

from openpyxl import Workbook

from .config import enumerate_valid, solution_summary
from .evolution import constants_summary, convergence_report, evolution_chain, evolution_table, ratio_row
from .render import format_ratio, to_csv, to_json
from .settings import ReportConfig, load_report_config
from .signature import column_sums, signature_matrix
from .theory import get_variant, variant_row

logger = logging.getLogger(__name__)

Table = Tuple[List[str], List[Dict]]

COUNT_COLUMNS = ['n', 'n_w', 'n_b', 'count', 'cyclically_equivalent']
VARIANT_COLUMNS = ['n', 'n_w', 'variant', 'bits', 'white_set', 's0', 'k',
                  'dominant', 'subdominant', 'ascending_leading', 'descending_leading']
RATIO_COLUMNS = ['n', 'n_w', 'n_b', 'dominant', 'ratio']
EVOLUTION_COLUMNS = ['k', 'W', 'V', 'U', 'ratio', 'deviation']


def solution_counts_table(cfg: ReportConfig) -> Table:
    lo, hi = cfg.count_range
    rows = [r.to_dict() for n in range(lo, hi + 1) for r in solution_summary(n)]
    return COUNT_COLUMNS, rows


def variants_table(cfg: ReportConfig) -> Table:
    rows = []
    for n, n_w in cfg.variant_pairs:
        rows.extend(variant_row(c) for c in enumerate_valid(n, n_w))
    return VARIANT_COLUMNS, rows


def _ratio_dict(r) -> Dict:
    row = r.to_dict()
    row['ratio'] = format_ratio(r.ratio)
    return row


def dominant_ratios_table(cfg: ReportConfig) -> Table:
    return RATIO_COLUMNS, [_ratio_dict(ratio_row(n, n_w)) for n, n_w in cfg.ratio_pairs]


def evolved_ratios_table(cfg: ReportConfig) -> Table:
    n_w, n_b = cfg.chain_seed
    return RATIO_COLUMNS, [_ratio_dict(r) for r in evolution_chain(n_w, n_b, cfg.chain_steps)]


def evolution_rows(count: int) -> List[Dict]:
    table = evolution_table(count)
    deviations = {c.k: c.deviation for c in convergence_report(table)} if len(table) >= 2 else {}
    rows = []
    for row in table:
        d = row.to_dict()
        d['ratio'] = format_ratio(row.ratio)
        d['deviation'] = format_ratio(deviations[row.k], 6) if row.k in deviations else ''
        rows.append(d)
    return rows


def evolution_sheet(cfg: ReportConfig) -> Table:
    return EVOLUTION_COLUMNS, evolution_rows(cfg.evolution_count)


def matrix_table(n: int, n_w: int, variant: int) -> Table:
    """Signature matrix rows (one per scale degree) followed by the column sums."""
    m = signature_matrix(get_variant(n, n_w, variant))
    columns = ['degree'] + [f't{t}' for t in range(n)]
    rows = []
    for i, values in enumerate(m.rows, start=1):
        row: Dict = {'degree': i}
        row.update({f't{t}': v for t, v in enumerate(values)})
        rows.append(row)
    sums: Dict = {'degree': 'sum'}
    sums.update({f't{t}': v for t, v in enumerate(column_sums(m).sums)})
    rows.append(sums)
    return columns, rows


def build_tables(cfg: ReportConfig) -> 'OrderedDict[str, Table]':
    tables: 'OrderedDict[str, Table]' = OrderedDict()
    tables['table5'] = solution_counts_table(cfg)
    tables['table6'] = variants_table(cfg)
    tables['table11'] = dominant_ratios_table(cfg)
    tables['table13'] = evolved_ratios_table(cfg)
    tables['table14'] = evolution_sheet(cfg)
    for n, n_w, variant in cfg.matrices:
        tables[f'matrix_{n}_{n_w}_{variant}'] = matrix_table(n, n_w, variant)
    return tables


def _write(path: str, text: str) -> str:
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logger.info('wrote %s', path)
    return path


def export_xlsx(tables: Dict[str, Table], out_dir: str) -> str:
    """One sheet per table; returns the workbook path."""
    ts = datetime.now().strftime('%Y%m%d%H%M%S')
    path = os.path.join(out_dir, f'ntet-report-{ts}.xlsx')
    wb = Workbook()
    wb.remove(wb.active)
    for name, (columns, rows) in tables.items():
        ws = wb.create_sheet(title=name[:31])
        ws.append(list(columns))
        for row in rows:
            ws.append([_xlsx_cell(row.get(c)) for c in columns])
    wb.save(path)
    logger.info('wrote %s', path)
    return path


def _xlsx_cell(value):
    if isinstance(value, (list, tuple)):
        return ' '.join(str(v) for v in value)
    return value


def write_report(out_dir: str, cfg: Optional[ReportConfig] = None, xlsx: Optional[bool] = None) -> List[str]:
    """Write every table into ``out_dir`` and return the file paths in write order."""
    cfg = cfg or load_report_config()
    os.makedirs(out_dir, exist_ok=True)
    tables = build_tables(cfg)
    paths = [_write(os.path.join(out_dir, f'{name}.csv'), to_csv(rows, columns))
             for name, (columns, rows) in tables.items()]
    paths.append(_write(os.path.join(out_dir, 'constants.json'), to_json(constants_summary())))
    if cfg.xlsx if xlsx is None else xlsx:
        paths.append(export_xlsx(tables, out_dir))
    return paths


def file_names(paths: Sequence[str]) -> List[str]:
    return [os.path.basename(p) for p in paths]
