from rest_framework.exceptions import ValidationError


class FormError(ValidationError):
    """Ошибка разбора пользовательского ввода (элемента, модели, окна или списка пар)."""

    def __init__(self, field, text):
        field = field or 'non_field_errors'
        super().__init__({field: [text, ]})

    def __str__(self):
        return str(list(self.detail.values())[0][0])


class CzError(Exception):
    """Базовое исключение вычислительного ядра."""


class DomainError(CzError, ValueError):
    """Нарушено предусловие операции (неидемпотентный аргумент, элемент вне окна, чужой сорт и т.п.)."""


class ParameterError(DomainError):
    """Параметры закона о включении окрестностей не удовлетворяют его побочным условиям."""


class CzOverflowError(CzError, ArithmeticError):
    """Результат не помещается в знаковое 64-битное целое."""
