"""
Evolution of (n_w, n_b) pairs, the W/V/U sequences and the two attractor constants.

演化规则：(n_w, n_b) -> (n_w + n_b, n_w)，得到系统大小序列
W = 2, 5, 7, 12, 19, 31, 50, ...（W_1 = 2，W_2 = 5，另记 W_0 = 3）。

 - V_k = W_k^{-1} mod W_{k+1}（属音）
 - U_k = (W_k * V_k - 1) / W_{k+1}（商，整除）
 - 比值 2^{V_k / W_{k+1}}：k 为奇数时趋近纯五度常数 2^{(15-√5)/22}，
   k 为偶数时趋近纯四度常数 2^{(7+√5)/22}，两者之积恰为 2。

所有 W/V/U 均为精确整数运算；黄金比例闭式只作浮点交叉验证。
"""

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from typing import Dict, List, Tuple
import logging
import math

from .errors import UndefinedInputError
from .ring import mod_inverse

logger = logging.getLogger(__name__)

W_0 = 3
W_1 = 2
W_2 = 5

SQRT5 = math.sqrt(5)
PHI = (1 + SQRT5) / 2
PSI = (1 - SQRT5) / 2

FIFTH = 'fifth'
FOURTH = 'fourth'


@dataclass(frozen=True)
class EvolutionRow:
    k: int
    W: int
    V: int
    U: int
    W_next: int

    @property
    def ratio(self) -> float:
        return 2 ** (self.V / self.W_next)

    def to_dict(self) -> Dict:
        return {'k': self.k, 'W': self.W, 'V': self.V, 'U': self.U}


@dataclass(frozen=True)
class RatioRow:
    n: int
    n_w: int
    n_b: int
    dominant: int
    ratio: float

    @property
    def rounded(self) -> Decimal:
        return round_half_up(self.ratio)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'n_w': self.n_w,
            'n_b': self.n_b,
            'dominant': self.dominant,
            'ratio': float(self.rounded),
        }


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    ratio: float
    attractor: str
    deviation: float

    def to_dict(self) -> Dict:
        return {
            'k': self.k,
            'ratio': self.ratio,
            'attractor': self.attractor,
            'deviation': self.deviation,
        }


def round_half_up(x: float, places: int = 3) -> Decimal:
    """Decimal rounding used for the printed ratio columns (1.4985 -> 1.499)."""
    quantum = Decimal(1).scaleb(-places)
    return Decimal(repr(x)).quantize(quantum, rounding=ROUND_HALF_UP)


def evolve_pair(n_w: int, n_b: int) -> Tuple[int, int]:
    if n_w < 1 or n_b < 1:
        raise UndefinedInputError(f'evolution needs n_w >= 1 and n_b >= 1, got ({n_w}, {n_b})')
    return n_w + n_b, n_w


def w_sequence(count: int) -> List[int]:
    """[W_1, ..., W_count]."""
    if count < 1:
        raise UndefinedInputError(f'count must be >= 1, got {count}')
    seq = [W_1, W_2]
    while len(seq) < count:
        seq.append(seq[-1] + seq[-2])
    return seq[:count]


def evolution_table(rows: int) -> List[EvolutionRow]:
    """Rows k = 1..rows of (W_k, V_k, U_k); exact integers throughout."""
    if rows < 1:
        raise UndefinedInputError(f'rows must be >= 1, got {rows}')
    w = w_sequence(rows + 1)
    table = []
    for k in range(1, rows + 1):
        current, following = w[k - 1], w[k]
        v = mod_inverse(current, following)
        u, remainder = divmod(current * v - 1, following)
        if remainder:
            raise ArithmeticError(f'W_{k} * V_{k} - 1 not divisible by W_{k + 1}')
        table.append(EvolutionRow(k, current, v, u, following))
    logger.debug('evolution_table: %d rows, W_%d = %d', rows, rows, table[-1].W)
    return table


def _binet(k: int, a: float, b: float) -> float:
    return PHI ** k * a + PSI ** k * b


def closed_form_W(k: int) -> float:
    if k < 0:
        raise UndefinedInputError(f'k must be >= 0, got {k}')
    return _binet(k, (15 + SQRT5) / 10, (15 - SQRT5) / 10)


def closed_form_V(k: int) -> float:
    if k < 1:
        raise UndefinedInputError(f'k must be >= 1, got {k}')
    if k % 2:
        return _binet(k + 1, 1.0, 1.0)
    return _binet(k, (5 + 3 * SQRT5) / 10, (5 - 3 * SQRT5) / 10)


def closed_form_U(k: int) -> float:
    if k < 1:
        raise UndefinedInputError(f'k must be >= 1, got {k}')
    if k % 2:
        return _binet(k, 1.0, 1.0)
    return _binet(k, (5 + SQRT5) / 10, (5 - SQRT5) / 10)


def _seeded(first: int, second: int, index: int) -> int:
    a, b = first, second
    for _ in range(index):
        a, b = b, a + b
    return a


def auxiliary_V(k: int) -> int:
    """V_k from the parity-split recurrences: seeds (1, 3) for odd k, (1, 2) for even k."""
    if k < 1:
        raise UndefinedInputError(f'k must be >= 1, got {k}')
    return _seeded(1, 3, k) if k % 2 else _seeded(1, 2, k)


def auxiliary_U(k: int) -> int:
    """U_k from the parity-split recurrences: seeds (2, 1) for odd k, (1, 1) for even k."""
    if k < 1:
        raise UndefinedInputError(f'k must be >= 1, got {k}')
    return _seeded(2, 1, k) if k % 2 else _seeded(1, 1, k)


def attractor_constants() -> Tuple[float, float]:
    fifth = 2 ** ((15 - SQRT5) / 22)
    fourth = 2 ** ((7 + SQRT5) / 22)
    return fifth, fourth


def constants_summary() -> Dict:
    fifth, fourth = attractor_constants()
    return {
        'fifth': fifth,
        'fourth': fourth,
        'fifth_exponent': (15 - SQRT5) / 22,
        'fourth_exponent': (7 + SQRT5) / 22,
        'product': round(fifth * fourth, 12),
    }


def ratio_row(n: int, n_w: int) -> RatioRow:
    """Dominant n_w^{-1} mod n and its frequency ratio 2^{dominant/n}."""
    if not 1 <= n_w < n:
        raise UndefinedInputError(f'need 1 <= n_w < n, got ({n}, {n_w})')
    dominant = mod_inverse(n_w, n)
    return RatioRow(n, n_w, n - n_w, dominant, 2 ** (dominant / n))


def evolution_chain(n_w: int, n_b: int, steps: int) -> List[RatioRow]:
    """Ratio rows for ``steps`` successive evolved pairs starting at (n_w, n_b)."""
    if steps < 1:
        raise UndefinedInputError(f'steps must be >= 1, got {steps}')
    rows = []
    for _ in range(steps):
        rows.append(ratio_row(n_w + n_b, n_w))
        n_w, n_b = evolve_pair(n_w, n_b)
    return rows


def convergence_report(rows: List[EvolutionRow]) -> List[ConvergenceRow]:
    """Distance of 2^{V_k/W_{k+1}} from the fifth (odd k) or fourth (even k) attractor."""
    if len(rows) < 2:
        raise UndefinedInputError(f'need at least 2 rows, got {len(rows)}')
    fifth, fourth = attractor_constants()
    report = []
    for row in rows:
        name, target = (FIFTH, fifth) if row.k % 2 else (FOURTH, fourth)
        report.append(ConvergenceRow(row.k, row.ratio, name, abs(row.ratio - target)))
    return report
