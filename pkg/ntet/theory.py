"""
Generating sequences, scale degrees, circles, prime forms and variant structure.

生成序列 G_{(s0,k),m} = {s0, s0+k, ..., s0+(m-1)k} (mod n)。取 k = n_w^{-1}
（模 n 的乘法逆元）时，长度为 n_w 的窗口恰好覆盖一个白键集合，窗口右移一格
（主音升高 k）时调号恰好多一个升号，这就是推广后的"五度圈"。

音级定义：
 - 主音 tonic：0
 - 属音 dominant：n_w^{-1}
 - 下属音 subdominant：n - n_w^{-1}
 - 下行导音 descending leading tone：s0（生成序列第一个元素）
 - 上行导音 ascending leading tone：s0 - n_w^{-1} + 1（最后一个元素）

原形（prime form）采用 Forte 的左紧凑规则：先比跨度，再从倒数第二个元素
往前逐个比较与首元素的距离，距离小者优先。
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging

from .config import KeyboardConfig, config_from_whites, enumerate_valid
from .errors import NoGeneratorError, NTETError, UndefinedInputError, VariantNotFoundError, VariantOutOfRangeError
from .ring import cyclic_equivalent, mod_inverse
from .signature import PLUS, capacity_window, key_signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenSeq:
    s0: int
    k: int
    m: int
    n: int
    elements: Tuple[int, ...]


@dataclass(frozen=True)
class GeneratorDescriptor:
    s0: int
    k: int

    def as_pair(self) -> Tuple[int, int]:
        return self.s0, self.k


@dataclass(frozen=True)
class DegreeSet:
    tonic: int
    dominant: int
    subdominant: int
    descending_leading: int
    ascending_leading: int

    def to_dict(self) -> Dict:
        return {
            'tonic': self.tonic,
            'dominant': self.dominant,
            'subdominant': self.subdominant,
            'descending_leading': self.descending_leading,
            'ascending_leading': self.ascending_leading,
        }


@dataclass(frozen=True)
class CircleEntry:
    tonic: int
    norm: int

    def to_dict(self) -> Dict:
        return {'tonic': self.tonic, 'norm': self.norm}


@dataclass(frozen=True)
class VariantLabel:
    n: int
    n_w: int
    index: int
    binary_value: int


@dataclass(frozen=True)
class PrimeWitness:
    """K_{n-2} of the prime form and the first position holding a +2."""

    n: int
    n_w: int
    prime_form: Tuple[int, ...]
    tonic: int
    index: int
    offsets: Tuple[int, ...]
    among_variants: bool

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'n_w': self.n_w,
            'prime_form': list(self.prime_form),
            'tonic': self.tonic,
            'index': self.index,
            'offsets': list(self.offsets),
            'among_variants': self.among_variants,
        }


@dataclass(frozen=True)
class VariantInfo:
    index: int
    bits: str
    white_set: Tuple[int, ...]
    s0: int
    k: int
    ascending_leading: int
    descending_leading: int
    window: Tuple[int, int]
    offset: Optional[int]

    def to_dict(self) -> Dict:
        return {
            'index': self.index,
            'bits': self.bits,
            'white_set': list(self.white_set),
            's0': self.s0,
            'k': self.k,
            'ascending_leading': self.ascending_leading,
            'descending_leading': self.descending_leading,
            'window': list(self.window),
            'offset': self.offset,
        }


@dataclass(frozen=True)
class StructuralReport:
    n: int
    n_w: int
    variants: Tuple[VariantInfo, ...]
    properties: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.properties.values())

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'n_w': self.n_w,
            'variants': [v.to_dict() for v in self.variants],
            'properties': dict(self.properties),
            'holds': self.holds,
        }


def gen_seq(s0: int, k: int, m: int, n: int) -> GenSeq:
    if m < 1:
        raise UndefinedInputError(f'generating sequence length must be >= 1, got {m}')
    if n < 1:
        raise UndefinedInputError(f'modulus must be >= 1, got {n}')
    return GenSeq(s0, k, m, n, tuple((s0 + i * k) % n for i in range(m)))


def canonical_generator(c: KeyboardConfig) -> GeneratorDescriptor:
    """(s0, k) with k = n_w^{-1} mod n and {s0 + i*k} equal to the white set."""
    k = mod_inverse(c.n_w, c.n)
    whites = set(c.white_set)
    for s0 in range(c.n):
        if set(gen_seq(s0, k, c.n_w, c.n).elements) == whites:
            return GeneratorDescriptor(s0, k)
    raise NoGeneratorError(f'{c.as_string()} is not generated by k = {k}; not maximally even')


def reverse_generator(c: KeyboardConfig) -> GeneratorDescriptor:
    """The paired generator (s0', n - k) reading the same white set backwards."""
    g = canonical_generator(c)
    return GeneratorDescriptor((g.s0 + (c.n_w - 1) * g.k) % c.n, (c.n - g.k) % c.n)


def extended_gen_seq(c: KeyboardConfig) -> GenSeq:
    """G_{(s0-1, k), 3 n_w}: the canonical sequence extended one period each way."""
    g = canonical_generator(c)
    return gen_seq(g.s0 - 1, g.k, 3 * c.n_w, c.n)


def window_shift(c: KeyboardConfig, s: int) -> Tuple[int, ...]:
    """Sorted elements of the window one generator step to the right of ``s``."""
    k = mod_inverse(c.n_w, c.n)
    return tuple(sorted(gen_seq(s + k, k, c.n_w, c.n).elements))


def degrees(c: KeyboardConfig) -> DegreeSet:
    g = canonical_generator(c)
    n, k = c.n, g.k
    return DegreeSet(
        tonic=0,
        dominant=k,
        subdominant=(n - k) % n,
        descending_leading=g.s0,
        ascending_leading=(g.s0 - k + 1) % n,
    )


def circle(c: KeyboardConfig) -> List[CircleEntry]:
    """Tonics 0, k, 2k, ... with their canonical norms (circle of fifths generalized)."""
    k = canonical_generator(c).k
    entries = []
    for j in range(c.n):
        t = (j * k) % c.n
        entries.append(CircleEntry(t, key_signature(c, t).norm))
    return entries


def inversion(s: Iterable[int], n: int) -> Tuple[int, ...]:
    return tuple(sorted({(n - x) % n for x in s}))


def _rotations(pcs: Sequence[int], n: int) -> List[Tuple[int, ...]]:
    orders = []
    for i in range(len(pcs)):
        rotated = list(pcs[i:]) + [p + n for p in pcs[:i]]
        orders.append(tuple(p - rotated[0] for p in rotated))
    return orders


def _packing_key(order: Tuple[int, ...]) -> Tuple[int, ...]:
    # 跨度优先，其次从倒数第二个元素往前比较
    inner = tuple(order[j] for j in range(len(order) - 2, 0, -1))
    return (order[-1],) + inner + order


def prime_form(s: Iterable[int], n: int) -> Tuple[int, ...]:
    pcs = sorted({x % n for x in s})
    if not pcs:
        raise UndefinedInputError('prime form of an empty set is undefined')
    candidates = _rotations(pcs, n) + _rotations(list(inversion(pcs, n)), n)
    return min(candidates, key=_packing_key)


def transposition_equal(a: Iterable[int], b: Iterable[int], n: int) -> bool:
    """True when ``a`` transposed by some t equals ``b``."""
    target = tuple(sorted({x % n for x in b}))
    source = {x % n for x in a}
    return any(tuple(sorted((x + t) % n for x in source)) == target for t in range(n))


def binary_value(c: KeyboardConfig) -> int:
    return c.value


def get_variant(n: int, n_w: int, index: int) -> KeyboardConfig:
    """The ``index``-th (1-based) valid configuration for (n, n_w)."""
    variants = enumerate_valid(n, n_w)
    if not variants:
        raise VariantNotFoundError(f'no configuration satisfies Axioms I-III for (n, n_w) = ({n}, {n_w})')
    if not 1 <= index <= len(variants):
        raise VariantOutOfRangeError(f'variant {index} out of range 1..{len(variants)} for ({n}, {n_w})')
    return variants[index - 1]


def variant_label(c: KeyboardConfig) -> VariantLabel:
    variants = enumerate_valid(c.n, c.n_w) if c.n >= 2 and 1 <= c.n_w < c.n else []
    for i, v in enumerate(variants, start=1):
        if v.bits == c.bits:
            return VariantLabel(c.n, c.n_w, i, c.value)
    raise VariantNotFoundError(f'{c.as_string()} is not a valid configuration')


def variant_row(c: KeyboardConfig) -> Dict:
    """Configuration, white set, generator pair and degree markers of one layout."""
    g = canonical_generator(c)
    d = degrees(c)
    return {
        'n': c.n,
        'n_w': c.n_w,
        'n_b': c.n_b,
        'variant': variant_label(c).index,
        'bits': c.as_string(),
        'white_set': list(c.white_set),
        's0': g.s0,
        'k': g.k,
        'dominant': d.dominant,
        'subdominant': d.subdominant,
        'ascending_leading': d.ascending_leading,
        'descending_leading': d.descending_leading,
    }


def structural_report(n: int, n_w: int) -> StructuralReport:
    """Evaluate the structural properties shared by all variants of (n, n_w)."""
    variants = enumerate_valid(n, n_w)
    if not variants:
        raise VariantNotFoundError(f'no configuration satisfies Axioms I-III for (n, n_w) = ({n}, {n_w})')
    first = variants[0]
    infos: List[VariantInfo] = []
    for i, v in enumerate(variants, start=1):
        g = canonical_generator(v)
        d = degrees(v)
        infos.append(VariantInfo(
            index=i,
            bits=v.as_string(),
            white_set=v.white_set,
            s0=g.s0,
            k=g.k,
            ascending_leading=d.ascending_leading,
            descending_leading=d.descending_leading,
            window=capacity_window(v),
            offset=cyclic_equivalent(first.bits, v.bits),
        ))
    n_b = n - n_w
    k = infos[0].k
    v1 = infos[0]
    props: Dict[str, bool] = {}
    if len(infos) >= 2:
        props['variant2_ascending_is_last'] = infos[1].ascending_leading == n - 1
    props['variant1_descending_is_n_minus_2'] = v1.descending_leading == (n - 2) % n
    props['last_variant_descending_is_tonic'] = infos[-1].descending_leading == 0
    props['variant1_only_black_last_key'] = [v.bits[-1] == '1' for v in infos] == [True] + [False] * (len(infos) - 1)
    props['variant1_inversion_of_prime_form'] = transposition_equal(
        inversion(v1.white_set, n), prime_form(v1.white_set, n), n)
    props['variant1_only_max_n_minus_2'] = (
        max(v1.white_set) == n - 2 and all(max(v.white_set) == n - 1 for v in infos[1:]))
    props['descending_leading_steps_by_k'] = all(
        v.s0 == (n - 2 + (v.index - 1) * k) % n for v in infos)
    props['leading_tones_shift_invariant'] = all(
        v.offset is not None
        and v.ascending_leading == (v1.ascending_leading - v.offset) % n
        and v.descending_leading == (v1.descending_leading - v.offset) % n
        for v in infos)
    props['windows_shift_by_one'] = all(
        v.window == (-n_b + 1 - (v.index - 1), n_w - (v.index - 1)) for v in infos)
    props['variant1_k1_all_sharps'] = set(key_signature(first, 1 % n).offsets) == {1}
    report = StructuralReport(n, n_w, tuple(infos), props)
    failed = [name for name, ok in props.items() if not ok]
    if failed:
        logger.info('(%d, %d): properties not holding: %s', n, n_w, ', '.join(failed))
    return report


def prime_axiom2_witness(n: int, n_w: int) -> PrimeWitness:
    """Show that the prime form of the (n, n_w) set class breaks Axiom II.

    K_{n-2} of the prime form (plus-mode representatives) contains a +2.
    """
    variants = enumerate_valid(n, n_w)
    if not variants:
        raise VariantNotFoundError(f'no configuration satisfies Axioms I-III for (n, n_w) = ({n}, {n_w})')
    pf = prime_form(variants[0].white_set, n)
    prime_config = config_from_whites(n, pf)
    tonic = (n - 2) % n
    offsets = key_signature(prime_config, tonic, PLUS).offsets
    among = any(v.bits == prime_config.bits for v in variants)
    index: Optional[int] = next((i for i, x in enumerate(offsets) if x == 2), None)
    if index is None:
        raise NTETError(f'prime form {list(pf)} of ({n}, {n_w}) has no +2 in K_{tonic}')
    return PrimeWitness(n, n_w, pf, tonic, index, offsets, among)
