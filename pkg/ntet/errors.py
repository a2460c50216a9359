"""
Domain errors for the n-TET keyboard theory package.

所有库函数只抛出这里定义的异常，CLI 与 Web 层据此决定退出码或 HTTP 状态。
``NTETError`` 继承 ``ValueError``，调用方也可以按普通的参数错误处理。
"""

from typing import Optional


class NTETError(ValueError):
    """Base class of every domain error."""

    kind = 'ntet_error'


class UndefinedInputError(NTETError):
    kind = 'undefined_input'


class NotCoprimeError(NTETError):
    """Raised when ``m`` has no inverse modulo ``n``."""

    kind = 'not_coprime'

    def __init__(self, m: int, n: int, divisor: int):
        self.m = m
        self.n = n
        self.divisor = divisor
        super().__init__(f'{m} has no inverse modulo {n} (gcd = {divisor})')


class NoGeneratorError(NTETError):
    kind = 'no_generator'


class InvalidConfigError(NTETError):
    kind = 'invalid_config'


class VariantNotFoundError(NTETError):
    kind = 'variant_not_found'


class AxiomViolationError(NTETError):
    """Raised when an operation needs a configuration passing Axioms I-III."""

    kind = 'axiom_violation'

    def __init__(self, message: str, report: Optional[object] = None):
        self.report = report
        super().__init__(message)


class VariantOutOfRangeError(VariantNotFoundError):
    """Valid configurations exist but the requested index is not among them."""

    kind = 'variant_out_of_range'
