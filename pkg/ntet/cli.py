"""
Command-line frontend.

用法示例::

    python -m ntet count --n 12
    python -m ntet enumerate --n 12 --nw 7 --axioms all
    python -m ntet signatures --n 12 --nw 7 --variant 2 --tonic 11 --mode minus
    python -m ntet circle --n 12 --nw 7 --format dot
    python -m ntet report --out out/

退出码：0 成功；1 领域错误（如不互素、没有合法排列、写文件失败）；2 参数错误（含变体编号、主音、白键数越界）。
日志写到 stderr（``-v`` 为 INFO，``-vv`` 为 DEBUG），stdout 只输出结果。
"""

from functools import wraps
from typing import Callable, Optional
import logging
import sys

import click

from . import __version__
from .errors import NTETError, UndefinedInputError, VariantOutOfRangeError
from .queries import (
    ALL,
    BASIC,
    DEFAULT_VARIANT,
    QueryResult,
    circle_query,
    constants_query,
    count_query,
    degrees_query,
    enumerate_query,
    evolve_query,
    prime_query,
    properties_query,
    signatures_query,
)
from .render import circle_to_dot, config_glyphs, to_csv, to_json, to_table
from .report import file_names, write_report
from .settings import load_report_config
from .signature import MODES
from .theory import CircleEntry

logger = logging.getLogger(__name__)

FORMATS = ('table', 'json', 'csv')


def _domain_errors(func: Callable) -> Callable:
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except VariantOutOfRangeError as exc:
            raise click.BadParameter(str(exc), param_hint="'--variant'")
        except UndefinedInputError as exc:
            raise click.UsageError(str(exc))
        except NTETError as exc:
            raise click.ClickException(str(exc))
    return wrapper


def _format_option(with_dot: bool = False):
    choices = FORMATS + ('dot',) if with_dot else FORMATS
    return click.option('--format', 'fmt', type=click.Choice(choices), default='table', show_default=True,
                        help='Output format.')


def _variant_options(func: Callable) -> Callable:
    func = click.option('--variant', type=click.IntRange(min=1), default=DEFAULT_VARIANT, show_default=True,
                        help='1-based variant index in ascending binary order.')(func)
    func = click.option('--nw', 'n_w', type=click.IntRange(min=1), required=True, help='Number of white keys.')(func)
    func = click.option('--n', type=click.IntRange(min=1), required=True, help='Keys per octave.')(func)
    return func


def _emit(result: QueryResult, fmt: str, pretty: bool = False) -> None:
    rows = result.rows
    if pretty:
        rows = [dict(r, bits=config_glyphs(int(b) for b in r['bits'])) if 'bits' in r else r for r in rows]
    if fmt == 'json':
        click.echo(to_json(result.data), nl=False)
    elif fmt == 'csv':
        click.echo(to_csv(rows, result.columns), nl=False)
    else:
        click.echo(to_table(rows, result.columns), nl=False)
    if result.note:
        click.echo(result.note, err=True)


@click.group()
@click.version_option(__version__, prog_name='ntet')
@click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG logging on stderr.')
def main(verbose: int) -> None:
    """n-TET keyboard layouts, key signatures and scale evolution."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


@main.command()
@click.option('--n', type=click.IntRange(min=1), required=True, help='Keys per octave.')
@_format_option()
@_domain_errors
def count(n: int, fmt: str) -> None:
    """Number of octaves with no adjacent black keys (first key white)."""
    result = count_query(n)
    if fmt == 'table':
        click.echo(result.data['count'])
    else:
        _emit(result, fmt)


@main.command(name='enumerate')
@click.option('--n', type=click.IntRange(min=1), required=True, help='Keys per octave.')
@click.option('--nw', 'n_w', type=click.IntRange(min=1), default=None, help='Restrict to this many white keys.')
@click.option('--axioms', type=click.Choice([BASIC, ALL]), default=ALL, show_default=True)
@click.option('--pretty', is_flag=True, help='Render keys as ∘ (white) and • (black).')
@_format_option()
@_domain_errors
def enumerate_cmd(n: int, n_w: Optional[int], axioms: str, pretty: bool, fmt: str) -> None:
    """List configurations (basic: no adjacent black keys; all: Axioms I-III)."""
    _emit(enumerate_query(n, n_w, axioms), fmt, pretty)


@main.command()
@_variant_options
@click.option('--tonic', type=click.IntRange(min=0), default=None, help='Single tonic; omit for the full matrix.')
@click.option('--mode', type=click.Choice(MODES), default=MODES[0], show_default=True,
              help='Enharmonic representative range for S_t.')
@_format_option()
@_domain_errors
def signatures(n: int, n_w: int, variant: int, tonic: Optional[int], mode: str, fmt: str) -> None:
    """Key signature K_t, or the full matrix with column sums."""
    _emit(signatures_query(n, n_w, variant, tonic, mode), fmt)


@main.command()
@_variant_options
@_format_option()
@_domain_errors
def degrees(n: int, n_w: int, variant: int, fmt: str) -> None:
    """Dominant, subdominant and leading tones of a variant."""
    _emit(degrees_query(n, n_w, variant), fmt)


@main.command()
@_variant_options
@_format_option(with_dot=True)
@_domain_errors
def circle(n: int, n_w: int, variant: int, fmt: str) -> None:
    """Tonics stepped by the dominant with their key-signature norms."""
    result = circle_query(n, n_w, variant)
    if fmt == 'dot':
        entries = [CircleEntry(e['tonic'], e['norm']) for e in result.rows]
        # 圈从主音 0 出发，第二个主音就是步长 k
        step = entries[1].tonic
        click.echo(circle_to_dot(entries, f'circle_{n}_{n_w}_{variant}', step), nl=False)
    else:
        _emit(result, fmt)


@main.command()
@click.option('--steps', type=click.IntRange(min=1), default=10, show_default=True)
@_format_option()
@_domain_errors
def evolve(steps: int, fmt: str) -> None:
    """W_k, V_k, U_k rows of the (n_w, n_b) evolution."""
    _emit(evolve_query(steps), fmt)


@main.command()
@_format_option()
def constants(fmt: str) -> None:
    """The fifth and fourth attractor constants."""
    _emit(constants_query(), fmt)


@main.command()
@click.option('--n', type=click.IntRange(min=1), required=True, help='Keys per octave.')
@click.option('--nw', 'n_w', type=click.IntRange(min=1), required=True, help='Number of white keys.')
@_format_option()
@_domain_errors
def prime(n: int, n_w: int, fmt: str) -> None:
    """Prime form of the white-key set class and its Axiom II witness."""
    _emit(prime_query(n, n_w), fmt)


@main.command()
@click.option('--n', type=click.IntRange(min=1), required=True, help='Keys per octave.')
@click.option('--nw', 'n_w', type=click.IntRange(min=1), required=True, help='Number of white keys.')
@_format_option()
@_domain_errors
def properties(n: int, n_w: int, fmt: str) -> None:
    """Structural properties shared by all variants of (n, n_w)."""
    _emit(properties_query(n, n_w), fmt)


@main.command()
@click.option('--out', 'out_dir', type=click.Path(file_okay=False), required=True, help='Output directory.')
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help='Report YAML (default: $NTET_REPORT_CONFIG or data/report.yml).')
@click.option('--xlsx', is_flag=True, help='Also write an Excel workbook.')
@_format_option()
@_domain_errors
def report(out_dir: str, config_path: Optional[str], xlsx: bool, fmt: str) -> None:
    """Write every table as CSV plus constants.json, then list the written files."""
    cfg = load_report_config(config_path)
    try:
        paths = write_report(out_dir, cfg, xlsx=True if xlsx else None)
    except OSError as exc:
        raise click.ClickException(f'cannot write report to {out_dir}: {exc}')
    names = file_names(paths)
    if fmt == 'table':
        for name in names:
            click.echo(name)
    else:
        _emit(QueryResult(['file'], [{'file': name} for name in names], names), fmt)


if __name__ == '__main__':
    main()
