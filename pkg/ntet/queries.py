"""
Query payloads shared by the command line and the HTTP API.

每个查询返回 ``QueryResult``：
 - columns / rows：用于 CSV 与文本表格输出
 - data：JSON 输出的对象（命令行 ``--format json`` 与 ``/api/*`` 返回完全相同的内容）
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional
import logging

from .config import check_axioms, config_from_whites, count_basic, enumerate_basic, enumerate_valid, enumerate_valid_all
from .errors import UndefinedInputError
from .evolution import constants_summary
from .report import evolution_rows, matrix_table
from .signature import CANONICAL, column_sums, key_signature, signature_matrix
from .theory import (
    canonical_generator,
    circle,
    degrees,
    get_variant,
    inversion,
    prime_axiom2_witness,
    prime_form,
    reverse_generator,
    structural_report,
    variant_row,
    transposition_equal,
)

logger = logging.getLogger(__name__)

BASIC = 'basic'
ALL = 'all'
DEFAULT_VARIANT = 2


@dataclass
class QueryResult:
    columns: List[str]
    rows: List[Dict]
    data: Any
    note: Optional[str] = None


def count_query(n: int) -> QueryResult:
    row = {'n': n, 'count': count_basic(n)}
    return QueryResult(['n', 'count'], [row], row)


def enumerate_query(n: int, n_w: Optional[int] = None, axioms: str = ALL) -> QueryResult:
    if axioms == BASIC:
        configs = [c for c in enumerate_basic(n) if n_w is None or c.n_w == n_w]
        rows = [{'index': i, 'bits': c.as_string(), 'white_set': list(c.white_set), 'n_w': c.n_w}
                for i, c in enumerate(configs, start=1)]
        return QueryResult(['index', 'bits', 'n_w', 'white_set'], rows, rows)
    if axioms != ALL:
        raise UndefinedInputError(f'axioms must be {BASIC!r} or {ALL!r}, got {axioms!r}')
    if n_w is not None:
        groups = {n_w: enumerate_valid(n, n_w)}
    else:
        groups = enumerate_valid_all(n)
    rows = [variant_row(c) for configs in groups.values() for c in configs]
    note = None
    if not rows:
        note = f'no possible key arrangement satisfies Axioms I-III for n = {n}'
        logger.info(note)
    columns = ['n', 'n_w', 'variant', 'bits', 'white_set', 's0', 'k']
    return QueryResult(columns, rows, rows, note)


def signatures_query(n: int, n_w: int, variant: int = DEFAULT_VARIANT,
                     tonic: Optional[int] = None, mode: str = CANONICAL) -> QueryResult:
    c = get_variant(n, n_w, variant)
    if tonic is not None:
        k = key_signature(c, tonic, mode)
        row = k.to_dict()
        return QueryResult(['tonic', 'mode', 'offsets', 'norm'], [row], row)
    m = signature_matrix(c)
    sums = column_sums(m)
    columns, rows = matrix_table(n, n_w, variant)
    data = m.to_dict()
    data.update({'variant': variant, 'bits': c.as_string(), 'column_sums': sums.to_dict()})
    return QueryResult(columns, rows, data)


def degrees_query(n: int, n_w: int, variant: int = DEFAULT_VARIANT) -> QueryResult:
    c = get_variant(n, n_w, variant)
    g = canonical_generator(c)
    row = {'n': n, 'n_w': n_w, 'variant': variant, 's0': g.s0, 'k': g.k}
    row.update(degrees(c).to_dict())
    reverse = reverse_generator(c)
    row['reverse_generator'] = [reverse.s0, reverse.k]
    columns = ['n', 'n_w', 'variant', 's0', 'k', 'dominant', 'subdominant',
               'ascending_leading', 'descending_leading']
    return QueryResult(columns, [row], row)


def circle_query(n: int, n_w: int, variant: int = DEFAULT_VARIANT) -> QueryResult:
    """Circle entries as a JSON list of ``{tonic, norm}``; the second tonic is the step k."""
    rows = [e.to_dict() for e in circle(get_variant(n, n_w, variant))]
    return QueryResult(['tonic', 'norm'], rows, rows)


def evolve_query(steps: int = 10) -> QueryResult:
    rows = evolution_rows(steps)
    return QueryResult(['k', 'W', 'V', 'U', 'ratio', 'deviation'], rows, rows)


def constants_query() -> QueryResult:
    data = constants_summary()
    rows = [{'name': name, 'value': f'{value:.11f}'} for name, value in data.items()]
    return QueryResult(['name', 'value'], rows, data)


def prime_query(n: int, n_w: int) -> QueryResult:
    first = get_variant(n, n_w, 1)
    pf = prime_form(first.white_set, n)
    data: Dict[str, Any] = {
        'n': n,
        'n_w': n_w,
        'variant1': list(first.white_set),
        'prime_form': list(pf),
        'prime_form_is_transposed_inversion': transposition_equal(inversion(first.white_set, n), pf, n),
        'prime_form_axioms': check_axioms(config_from_whites(n, pf)).to_dict(),
    }
    if n_w >= 3:
        data['witness'] = prime_axiom2_witness(n, n_w).to_dict()
    rows = [{'name': key, 'value': value} for key, value in data.items()]
    return QueryResult(['name', 'value'], rows, data)


def properties_query(n: int, n_w: int) -> QueryResult:
    report = structural_report(n, n_w)
    rows = [{'property': name, 'holds': ok} for name, ok in report.properties.items()]
    return QueryResult(['property', 'holds'], rows, report.to_dict())
