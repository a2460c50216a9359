"""
Exact modular arithmetic and cyclic bit-sequence utilities.

本模块是其它模块的基础：最大公约数、模逆元（扩展欧几里得算法）、
键盘排列的循环移位与循环等价判断。全部为纯整数运算，不使用浮点数。

Python 整数为任意精度；常见的数值（系统大小到 343，乘积约 5 万）
即使在 64 位整数下也不会溢出。

循环移位方向固定为::

    output[i] = input[(i + d) mod n]

即把第 d 个键移到第 0 位。
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import math

from .errors import NotCoprimeError, UndefinedInputError

Bits = Tuple[int, ...]


@dataclass(frozen=True)
class Modulus:
    """Chromatic cardinality: number of equal steps per octave."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise UndefinedInputError(f'modulus must be >= 1, got {self.n}')

    def reduce(self, value: int) -> int:
        return value % self.n


@dataclass(frozen=True)
class PitchClass:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.n:
            raise UndefinedInputError(
                f'pitch class {self.value} outside [0, {self.modulus.n - 1}]')

    def __int__(self) -> int:
        return self.value


def pitch_class(value: int, n: int) -> PitchClass:
    """Reduce any integer to its pitch class in Z_n."""
    mod = Modulus(n)
    return PitchClass(mod.reduce(value), mod)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``a*x + b*y == g == gcd(a, b)``."""
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a % b
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    return prev_x, prev_y, a


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise UndefinedInputError(f'gcd expects non-negative integers, got ({a}, {b})')
    if a == 0 and b == 0:
        raise UndefinedInputError('gcd(0, 0) is undefined')
    return math.gcd(a, b)


def mod_inverse(m: int, n: int) -> int:
    """Return ``k`` in ``[1, n-1]`` with ``m*k ≡ 1 (mod n)``.

    Raises ``NotCoprimeError`` when ``gcd(m, n) != 1``: in that case no
    dominant exists and the configuration has no degree structure.
    """
    if n < 2:
        raise UndefinedInputError(f'modulus must be >= 2 for an inverse, got {n}')
    x, _, g = extended_gcd(m % n, n)
    if g != 1:
        raise NotCoprimeError(m, n, g)
    return x % n


def rotate_config(bits: Sequence[int], d: int) -> Bits:
    """Rotate so that ``output[i] == bits[(i + d) % len(bits)]``."""
    size = len(bits)
    if size == 0:
        return ()
    d %= size
    return tuple(bits[d:]) + tuple(bits[:d])


def cyclic_equivalent(a: Sequence[int], b: Sequence[int]) -> Optional[int]:
    """Smallest offset ``d`` with ``rotate_config(a, d) == b``, else ``None``."""
    if len(a) != len(b):
        raise UndefinedInputError(
            f'cyclic equivalence needs equal lengths, got {len(a)} and {len(b)}')
    target = tuple(b)
    for d in range(max(len(a), 1)):
        if rotate_config(a, d) == target:
            return d
    return None
