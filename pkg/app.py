"""
Flask entry point for the n-TET keyboard theory toolkit.

此应用把库函数以 JSON 接口提供出来，返回内容与命令行 ``--format json`` 完全一致：
 - /api/count：无相邻黑键的排列数 N_n；
 - /api/enumerate：满足公理 I–III（或仅基本条件）的键盘排列；
 - /api/signatures：单个调号或完整调号矩阵及列和；
 - /api/degrees、/api/circle、/api/properties：音级、五度圈推广、变体结构性质；
 - /api/evolve、/api/constants：演化表与两个吸引子常数；
 - /api/report：生成全部表格文件，返回下载地址。

参数错误或领域错误返回 400，正文为 ``{"error": kind, "message": text}``。
"""

from functools import lru_cache
import os
import shutil
import tempfile
import time

from flask import Flask, jsonify, render_template, request, send_from_directory

from ntet.config import solution_summary
from ntet.errors import NTETError, UndefinedInputError
from ntet.queries import (
    ALL,
    DEFAULT_VARIANT,
    circle_query,
    constants_query,
    count_query,
    degrees_query,
    enumerate_query,
    evolve_query,
    properties_query,
    signatures_query,
)
from ntet.report import write_report
from ntet.settings import load_report_config, server_port
from ntet.signature import CANONICAL

REPORT_ROOT = os.environ.get('NTET_REPORT_DIR', tempfile.gettempdir())
REPORT_PREFIX = 'ntet-report-'
# 报告目录保留时间（秒），超时的目录在下一次 POST /api/report 时删除
REPORT_TTL = int(os.environ.get('NTET_REPORT_TTL', '3600'))

app = Flask(__name__, static_folder='static', template_folder='templates')
app.json.sort_keys = False


def _int_arg(name, default=None):
    raw = request.args.get(name)
    if raw is None or raw == '':
        if default is None:
            raise UndefinedInputError(f'missing query parameter {name!r}')
        return default
    try:
        return int(raw)
    except ValueError:
        raise UndefinedInputError(f'query parameter {name!r} must be an integer, got {raw!r}')


def _optional_int_arg(name):
    if request.args.get(name) in (None, ''):
        return None
    return _int_arg(name)


@app.errorhandler(NTETError)
def handle_domain_error(exc):
    app.logger.info('%s: %s', exc.kind, exc)
    return jsonify({'error': exc.kind, 'message': str(exc)}), 400


@lru_cache(maxsize=4)
def _summary_rows(lo, hi):
    return [r.to_dict() for n in range(lo, hi + 1) for r in solution_summary(n)]


@app.route('/')
def index():
    lo, hi = load_report_config().count_range
    return render_template('index.html', rows=_summary_rows(lo, hi), lo=lo, hi=hi)


@app.get('/api/count')
def api_count():
    return jsonify(count_query(_int_arg('n')).data)


@app.get('/api/enumerate')
def api_enumerate():
    result = enumerate_query(_int_arg('n'), _optional_int_arg('nw'), request.args.get('axioms', ALL))
    return jsonify(result.data)


@app.get('/api/signatures')
def api_signatures():
    result = signatures_query(
        _int_arg('n'),
        _int_arg('nw'),
        _int_arg('variant', DEFAULT_VARIANT),
        _optional_int_arg('tonic'),
        request.args.get('mode', CANONICAL),
    )
    return jsonify(result.data)


@app.get('/api/degrees')
def api_degrees():
    return jsonify(degrees_query(_int_arg('n'), _int_arg('nw'), _int_arg('variant', DEFAULT_VARIANT)).data)


@app.get('/api/circle')
def api_circle():
    return jsonify(circle_query(_int_arg('n'), _int_arg('nw'), _int_arg('variant', DEFAULT_VARIANT)).data)


@app.get('/api/properties')
def api_properties():
    return jsonify(properties_query(_int_arg('n'), _int_arg('nw')).data)


@app.get('/api/evolve')
def api_evolve():
    return jsonify(evolve_query(_int_arg('steps', 10)).data)


@app.get('/api/constants')
def api_constants():
    return jsonify(constants_query().data)


def _prune_reports(now=None):
    now = time.time() if now is None else now
    try:
        entries = list(os.scandir(REPORT_ROOT))
    except OSError:
        return
    for entry in entries:
        if not entry.name.startswith(REPORT_PREFIX) or not entry.is_dir(follow_symlinks=False):
            continue
        if now - entry.stat().st_mtime > REPORT_TTL:
            shutil.rmtree(entry.path, ignore_errors=True)
            app.logger.info('removed stale report %s', entry.name)


@app.post('/api/report')
def api_report():
    payload = request.get_json(silent=True) or {}
    _prune_reports()
    out_dir = tempfile.mkdtemp(prefix=REPORT_PREFIX, dir=REPORT_ROOT)
    paths = write_report(out_dir, load_report_config(), xlsx=bool(payload.get('xlsx', False)))
    folder = os.path.basename(out_dir)
    return jsonify({'download': [f'/download/{folder}/{os.path.basename(p)}' for p in paths]})


@app.get('/download/<path:name>')
def download(name):
    # 报告文件保存在 REPORT_ROOT 下
    return send_from_directory(REPORT_ROOT, name, as_attachment=True)


if __name__ == '__main__':
    app.run(host='0.0.0.0', port=server_port(), debug=True)
