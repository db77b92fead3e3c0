"""
Исключения LinClonoid

Каждое семейство ошибок несёт код выхода CLI:
- 2 - нарушена гипотеза теорем (взаимная простота |K| и |F|)
- 3 - некорректный ввод
- 4 - превышен бюджет вычислений
- 5 - нарушен внутренний инвариант
"""


class ClonoidError(Exception):
    """Базовая ошибка библиотеки"""
    exit_code = 1


# ============================================================================
# НЕКОРРЕКТНЫЙ ВВОД (exit 3)
# ============================================================================

class InputError(ClonoidError):
    exit_code = 3


class NotPrime(InputError):
    pass


class Reducible(InputError):
    pass


class BadDegree(InputError):
    pass


class FieldTooLarge(InputError):
    pass


class InvalidElement(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class EmptyProduct(InputError):
    pass


class NotPrimeField(InputError):
    pass


class WrongLength(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class BadFactorCount(InputError):
    pass


class BadArity(InputError):
    pass


class BadRange(InputError):
    pass


class MixedDomains(InputError):
    pass


class NotSupportedOnLines(InputError):
    pass


class ValueMismatch(InputError):
    pass


class NotAbsorbing(InputError):
    pass


class MalformedInput(InputError):
    pass


class ConfigError(InputError):
    pass


# ============================================================================
# ГИПОТЕЗА, БЮДЖЕТ, ИНВАРИАНТЫ
# ============================================================================

class HypothesisViolation(ClonoidError):
    exit_code = 2


class NotCoprime(HypothesisViolation):
    pass


class BudgetExceeded(ClonoidError):
    exit_code = 4


class InvariantBreach(ClonoidError):
    """Сигнализирует об ошибке в коде, а не во вводе пользователя"""
    exit_code = 5


class NotInvariant(InvariantBreach):
    pass


class StrategyMismatch(InvariantBreach):
    pass


class TheoremViolation(InvariantBreach):
    pass


__all__ = [
    'ClonoidError',
    'InputError', 'NotPrime', 'Reducible', 'BadDegree', 'FieldTooLarge',
    'InvalidElement', 'DivisionByZero', 'EmptyProduct', 'NotPrimeField',
    'WrongLength', 'ShapeMismatch', 'BadFactorCount', 'BadArity', 'BadRange',
    'MixedDomains', 'NotSupportedOnLines', 'ValueMismatch', 'NotAbsorbing',
    'MalformedInput', 'ConfigError',
    'HypothesisViolation', 'NotCoprime',
    'BudgetExceeded',
    'InvariantBreach', 'NotInvariant', 'StrategyMismatch', 'TheoremViolation',
]
