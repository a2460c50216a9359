"""
Scale sequences, key signatures, norms and key-signature matrices.

调号的计算方法：把主音 t 加到白键集合 S_0 上，取模后排序得到 S_t，
再与 S_0 逐项相减得到 K_t。负值不改写回 [0, n-1]，-1 表示降号。

等音别名用"代表元区间"统一描述：
 - canonical：代表元取 [0, n-1]
 - plus：代表元取 [1, n]，即 0 写作 n（例如 C♯ 大调的七个升号）
 - minus：代表元取 [-1, n-2]，即 n-1 写作 -1（例如 B 大调写成七个降号）

矩阵文档中行列从 1 开始计数，代码中主音标签从 0 开始。
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple
import logging

from .config import KeyboardConfig, check_axioms
from .errors import AxiomViolationError, UndefinedInputError

logger = logging.getLogger(__name__)

CANONICAL = 'canonical'
PLUS = 'plus'
MINUS = 'minus'
MODES = (CANONICAL, PLUS, MINUS)

# 每种模式下代表元的下界
_LOWER_BOUND = {CANONICAL: 0, PLUS: 1, MINUS: -1}


@dataclass(frozen=True)
class ScaleSeq:
    n: int
    tonic: int
    notes: Tuple[int, ...]
    mode: str = CANONICAL


@dataclass(frozen=True)
class KeySignature:
    n: int
    tonic: int
    offsets: Tuple[int, ...]
    mode: str = CANONICAL

    @property
    def norm(self) -> int:
        return sum(self.offsets)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'tonic': self.tonic,
            'mode': self.mode,
            'offsets': list(self.offsets),
            'norm': self.norm,
        }


@dataclass(frozen=True)
class ColumnSums:
    sums: Tuple[int, ...]
    min: int
    max: int

    def to_dict(self) -> Dict:
        return {'sums': list(self.sums), 'min': self.min, 'max': self.max}


@dataclass(frozen=True)
class SignatureMatrix:
    """n_w rows (scale degrees) by n columns; column t is the canonical K_t."""

    n: int
    n_w: int
    columns: Tuple[Tuple[int, ...], ...]

    @property
    def rows(self) -> List[List[int]]:
        return [[col[i] for col in self.columns] for i in range(self.n_w)]

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'n_w': self.n_w,
            'columns': [list(col) for col in self.columns],
            'norms': [sum(col) for col in self.columns],
        }


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise UndefinedInputError(f'unknown alias mode {mode!r}, expected one of {MODES}')
    return mode


def scale_seq(c: KeyboardConfig, t: int, mode: str = CANONICAL) -> ScaleSeq:
    """S_t: residues of ``t + white_set`` in the mode's representative range, sorted."""
    _check_mode(mode)
    if not 0 <= t < c.n:
        raise UndefinedInputError(f'tonic {t} outside [0, {c.n - 1}]')
    low = _LOWER_BOUND[mode]
    notes = sorted((t + w - low) % c.n + low for w in c.white_set)
    return ScaleSeq(c.n, t, tuple(notes), mode)


def key_signature(c: KeyboardConfig, t: int, mode: str = CANONICAL) -> KeySignature:
    """K_t = S_t - S_0 elementwise (S_0 always canonical)."""
    s_t = scale_seq(c, t, mode).notes
    s_0 = c.white_set
    return KeySignature(c.n, t, tuple(a - b for a, b in zip(s_t, s_0)), mode)


def signature_norm(k: KeySignature) -> int:
    """Positive: number of sharps; negative: number of flats."""
    return k.norm


def norms(c: KeyboardConfig) -> List[int]:
    return [key_signature(c, t).norm for t in range(c.n)]


def signature_matrix(c: KeyboardConfig) -> SignatureMatrix:
    report = check_axioms(c)
    if not report.passed:
        raise AxiomViolationError(
            f'{c.as_string()} does not satisfy Axioms I-III; no single-sign key-signature matrix',
            report,
        )
    columns = tuple(key_signature(c, t).offsets for t in range(c.n))
    return SignatureMatrix(c.n, c.n_w, columns)


def column_sums(m: SignatureMatrix) -> ColumnSums:
    sums = tuple(sum(col) for col in m.columns)
    return ColumnSums(sums, min(sums), max(sums))


def capacity_window(c: KeyboardConfig) -> Tuple[int, int]:
    """(min, max) of the canonical norms; spans exactly n - 1 for valid layouts."""
    values = norms(c)
    return min(values), max(values)
