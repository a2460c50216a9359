"""
Keyboard configurations: enumeration, counting and the three axioms.

键盘排列用长度为 n 的 0/1 序列表示，0 为白键、1 为黑键，第 0 位固定为白键。

两种相邻规则需要区分：
 - 计数（count_basic / enumerate_basic）只禁止八度内相邻的黑键。由于第 0 位
   总是白键，是否跨八度回绕结果都一样，N_12 = 233；
 - 公理 I 的检查是循环的：八度重复出现，跨越边界的 ``000`` 同样被禁止。

排序规则：把第 0 位当作最高位，按二进制数值升序排列（1321 < 1322 < 1354）。
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging
import math

from .errors import InvalidConfigError, UndefinedInputError
from .ring import Bits, Modulus, cyclic_equivalent, gcd

logger = logging.getLogger(__name__)

WHITE_GLYPH = '∘'
BLACK_GLYPH = '•'


@dataclass(frozen=True)
class KeyboardConfig:
    """One octave of white (0) and black (1) keys, position 0 white."""

    n: int
    bits: Bits

    def __post_init__(self):
        if self.n < 1 or len(self.bits) != self.n:
            raise InvalidConfigError(f'expected {self.n} keys, got {len(self.bits)}')
        if any(b not in (0, 1) for b in self.bits):
            raise InvalidConfigError('keys must be 0 (white) or 1 (black)')
        if self.bits[0] != 0:
            raise InvalidConfigError('the first key of the octave must be white')
        for i in range(self.n):
            if self.bits[i] == 1 and self.bits[(i + 1) % self.n] == 1:
                raise InvalidConfigError(f'adjacent black keys at positions {i} and {(i + 1) % self.n}')

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.n)

    @property
    def white_set(self) -> Tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b == 0)

    @property
    def n_w(self) -> int:
        return self.bits.count(0)

    @property
    def n_b(self) -> int:
        return self.bits.count(1)

    @property
    def value(self) -> int:
        """Binary value with position 0 as the most significant digit."""
        return int(self.as_string(), 2)

    def as_string(self) -> str:
        return ''.join(str(b) for b in self.bits)

    def glyphs(self) -> str:
        return ''.join(BLACK_GLYPH if b else WHITE_GLYPH for b in self.bits)

    def __str__(self) -> str:
        return self.as_string()


@dataclass(frozen=True)
class BasicCount:
    n: int
    count: int


@dataclass(frozen=True)
class AxiomCheck:
    """Pass/fail of one axiom; ``witness`` is set iff the check failed."""

    passed: bool
    witness: Optional[Tuple] = None

    def to_dict(self) -> Dict:
        return {'passed': self.passed, 'witness': list(self.witness) if self.witness else None}


@dataclass(frozen=True)
class AxiomReport:
    axiom1: AxiomCheck
    axiom2: AxiomCheck
    axiom3: AxiomCheck

    @property
    def passed(self) -> bool:
        return self.axiom1.passed and self.axiom2.passed and self.axiom3.passed

    def to_dict(self) -> Dict:
        return {
            'axiom1': self.axiom1.to_dict(),
            'axiom2': self.axiom2.to_dict(),
            'axiom3': self.axiom3.to_dict(),
            'passed': self.passed,
        }


@dataclass(frozen=True)
class SolutionRow:
    """One row of the solution-count table for a given (n, n_w)."""

    n: int
    n_w: int
    n_b: int
    count: int
    cyclically_equivalent: bool
    configs: Tuple[KeyboardConfig, ...] = field(default=(), compare=False, repr=False)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'n_w': self.n_w,
            'n_b': self.n_b,
            'count': self.count,
            'cyclically_equivalent': self.cyclically_equivalent,
        }


def parse_config(text: str) -> KeyboardConfig:
    """Parse ``'010100101010'`` (or the ∘/• glyph form) into a configuration."""
    raw = (text or '').strip().replace(WHITE_GLYPH, '0').replace(BLACK_GLYPH, '1')
    if not raw or any(ch not in '01' for ch in raw):
        raise InvalidConfigError(f'not a key configuration: {text!r}')
    return KeyboardConfig(len(raw), tuple(int(ch) for ch in raw))


def config_from_whites(n: int, white_set: Sequence[int]) -> KeyboardConfig:
    whites = {w % n for w in white_set}
    return KeyboardConfig(n, tuple(0 if i in whites else 1 for i in range(n)))


def count_basic(n: int) -> int:
    """N_n = sum_{i=0}^{floor(n/2)} C(n-i, i), which equals F_{n+1}."""
    if n < 1:
        raise UndefinedInputError(f'n must be >= 1, got {n}')
    return sum(math.comb(n - i, i) for i in range(n // 2 + 1))


def basic_count_row(n: int) -> BasicCount:
    return BasicCount(n, count_basic(n))


def _no_adjacent_ones(length: int) -> Iterator[List[int]]:
    # 0 先于 1 展开，保证按二进制值升序输出
    if length == 0:
        yield []
        return
    for rest in _no_adjacent_ones(length - 1):
        yield [0] + rest
    if length == 1:
        yield [1]
        return
    for rest in _no_adjacent_ones(length - 2):
        yield [1, 0] + rest


def enumerate_basic(n: int) -> List[KeyboardConfig]:
    """All octaves whose first key is white and that have no adjacent black keys."""
    if n < 1:
        raise UndefinedInputError(f'n must be >= 1, got {n}')
    configs = [KeyboardConfig(n, tuple([0] + tail)) for tail in _no_adjacent_ones(n - 1)]
    logger.debug('enumerate_basic(%d): %d configurations', n, len(configs))
    return configs


def axiom1_check(c: KeyboardConfig) -> AxiomCheck:
    """Axiom I: no ``000`` and no ``11`` in the cyclic key pattern."""
    n, bits = c.n, c.bits
    for i in range(n):
        if bits[i] == 0 and bits[(i + 1) % n] == 0 and bits[(i + 2) % n] == 0:
            return AxiomCheck(False, (i,))
        if bits[i] == 1 and bits[(i + 1) % n] == 1:
            return AxiomCheck(False, (i,))
    return AxiomCheck(True)


def _canonical_signatures(c: KeyboardConfig) -> List[Tuple[int, ...]]:
    from .signature import CANONICAL, key_signature
    return [key_signature(c, t, CANONICAL).offsets for t in range(c.n)]


def axiom2_check(c: KeyboardConfig, signatures: Optional[List[Tuple[int, ...]]] = None) -> AxiomCheck:
    """Axiom II: every canonical K_t (t >= 1) is all-sharp or all-flat.

    The witness is ``(t, offsets)`` for the first offending tonic.
    """
    signatures = signatures if signatures is not None else _canonical_signatures(c)
    for t in range(1, c.n):
        offsets = signatures[t]
        values = set(offsets)
        if not (values <= {0, 1} or values <= {0, -1}):
            return AxiomCheck(False, (t, offsets))
    return AxiomCheck(True)


def axiom3_check(c: KeyboardConfig, signatures: Optional[List[Tuple[int, ...]]] = None) -> AxiomCheck:
    """Axiom III: t -> K_t is injective. The witness is the first colliding pair."""
    signatures = signatures if signatures is not None else _canonical_signatures(c)
    seen: Dict[Tuple[int, ...], int] = {}
    for t, offsets in enumerate(signatures):
        if offsets in seen:
            return AxiomCheck(False, (seen[offsets], t))
        seen[offsets] = t
    return AxiomCheck(True)


def check_axioms(c: KeyboardConfig) -> AxiomReport:
    signatures = _canonical_signatures(c)
    return AxiomReport(
        axiom1=axiom1_check(c),
        axiom2=axiom2_check(c, signatures),
        axiom3=axiom3_check(c, signatures),
    )


def black_key_bounds(n: int) -> Tuple[int, int]:
    """Range of n_b allowed by Axiom I: ceil(n/3) .. floor(n/2)."""
    return -(-n // 3), n // 2


def _gap_candidates(n: int, n_w: int) -> Iterator[KeyboardConfig]:
    # 白键之间的间隔只能是 1 或 2；从 n_w 个间隔中选出 n_b 个为 2
    n_b = n - n_w
    for twos in combinations(range(n_w), n_b):
        chosen = set(twos)
        gaps = [2 if i in chosen else 1 for i in range(n_w)]
        if any(gaps[i] == 1 and gaps[(i + 1) % n_w] == 1 for i in range(n_w)):
            continue
        bits: List[int] = []
        for g in gaps:
            bits.extend([0] if g == 1 else [0, 1])
        yield KeyboardConfig(n, tuple(bits))


def enumerate_valid(n: int, n_w: int) -> List[KeyboardConfig]:
    """Configurations with ``n_w`` white keys passing Axioms I-III, ascending by binary value."""
    if n < 2 or not 1 <= n_w < n:
        raise UndefinedInputError(f'need n >= 2 and 1 <= n_w < n, got ({n}, {n_w})')
    lo, hi = black_key_bounds(n)
    if not lo <= n - n_w <= hi:
        logger.debug('(%d, %d): n_b outside [%d, %d]', n, n_w, lo, hi)
        return []
    valid = []
    for c in _gap_candidates(n, n_w):
        if check_axioms(c).passed:
            valid.append(c)
    valid.sort(key=lambda c: c.value)
    logger.debug('(%d, %d): %d valid configurations, gcd = %d', n, n_w, len(valid), gcd(n, n_w))
    return valid


def enumerate_valid_all(n: int) -> Dict[int, List[KeyboardConfig]]:
    """Valid configurations for every n_w that has at least one solution."""
    found: Dict[int, List[KeyboardConfig]] = {}
    for n_w in range(n - 1, 0, -1):
        configs = enumerate_valid(n, n_w)
        if configs:
            found[n_w] = configs
    return found


def all_pairwise_equivalent(configs: Sequence[KeyboardConfig]) -> bool:
    if not configs:
        return False
    first = configs[0].bits
    return all(cyclic_equivalent(first, c.bits) is not None for c in configs[1:])


def solution_summary(n: int) -> List[SolutionRow]:
    """Rows (n, n_w, n_b, N, cyclically equivalent?) in descending n_w order."""
    rows = []
    for n_w, configs in enumerate_valid_all(n).items():
        rows.append(SolutionRow(
            n=n,
            n_w=n_w,
            n_b=n - n_w,
            count=len(configs),
            cyclically_equivalent=all_pairwise_equivalent(configs),
            configs=tuple(configs),
        ))
    return rows


def is_maximally_even(white_set: Sequence[int], n: int) -> bool:
    """Every generic interval spans at most two chromatic sizes, and they are consecutive."""
    whites = sorted(set(w % n for w in white_set))
    m = len(whites)
    for span in range(1, m):
        sizes = {(whites[(i + span) % m] - whites[i]) % n for i in range(m)}
        if max(sizes) - min(sizes) > 1:
            return False
    return True
