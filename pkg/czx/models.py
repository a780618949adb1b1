"""
Модели S1-S5: расширения 𝒞_ℤ присоединённой единицей, группой единиц G1(k) ≅ kℤ
и идеалом G0 ≅ (ℤ, +), с полными таблицами умножения.

    S1 = 𝒞_ℤ ⊔ {e1}
    S2 = G1(k) ⊔ 𝒞_ℤ
    S3 = 𝒞_ℤ ⊔ G0
    S4 = S3 ⊔ {e1}
    S5 = G1(k) ⊔ 𝒞_ℤ ⊔ G0
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

from .certificates import Certificate
from .core import CzElement, Window, checked, inverse, multiply
from .exceptions import DomainError


@dataclass(frozen=True)
class AdjoinedUnit:
    """Присоединённая единица e1."""

    def __str__(self):
        return 'e1'


@dataclass(frozen=True)
class UnitGroup:
    """Элемент k·i группы единиц G1(k); хранится множитель i."""
    i: int

    def __post_init__(self):
        checked(self.i)


@dataclass(frozen=True)
class IdealGroup:
    """Элемент n идеала G0."""
    n: int

    def __post_init__(self):
        checked(self.n)

    def __str__(self):
        return 'z:%d' % self.n


E1 = AdjoinedUnit()

ExtElement = Union[CzElement, AdjoinedUnit, UnitGroup, IdealGroup]


class Part(Enum):
    CzPart = 'CzPart'
    Unit = 'Unit'
    UnitGroupPart = 'UnitGroupPart'
    IdealPart = 'IdealPart'


@dataclass(frozen=True)
class ModelSpec:
    """
    Полугруппа и её параметры.

    k, n_div - только для S2/S5 (k = n_div·s). Для S1/S4 убывающая последовательность отрицательных m_i
    задаётся явным началом seq (m_1, ..., m_p), после которого она продолжается арифметически с шагом step;
    без seq начало - одно число m1.
    """
    Model_PlainCz = 0
    Model_S1 = 1
    Model_S2 = 2
    Model_S3 = 3
    Model_S4 = 4
    Model_S5 = 5

    MODEL_CHOICES = (
        (Model_PlainCz, 'cz'),
        (Model_S1, 's1'),
        (Model_S2, 's2'),
        (Model_S3, 's3'),
        (Model_S4, 's4'),
        (Model_S5, 's5'),
    )

    model: int = Model_PlainCz
    k: int = 0
    n_div: int = 0
    m1: int = -1
    step: int = 1
    seq: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.model not in dict(self.MODEL_CHOICES):
            raise DomainError('unknown model %r' % self.model)
        if self.has_unit_group:
            if self.k < 1 or self.n_div < 1:
                raise DomainError('%s needs positive k and n' % self.get_model_display())
            if self.k % self.n_div:
                raise DomainError('n=%d does not divide k=%d' % (self.n_div, self.k))
        elif self.k or self.n_div:
            raise DomainError('%s takes no k/n parameters' % self.get_model_display())
        if self.has_adjoined_unit:
            if self.seq:
                object.__setattr__(self, 'seq', tuple(checked(v) for v in self.seq))
                if self.m1 not in (-1, self.seq[0]):
                    raise DomainError('m1=%d contradicts the sequence start %d' % (self.m1, self.seq[0]))
                object.__setattr__(self, 'm1', self.seq[0])
                if len(self.seq) == 1:
                    # одночленное начало - то же, что m1
                    object.__setattr__(self, 'seq', ())
            if self.m1 >= 0 or self.step < 1 or any(u <= v for u, v in zip(self.seq, self.seq[1:])):
                raise DomainError('isolated sequence must be negative and strictly decreasing')
        elif (self.m1, self.step, self.seq) != (-1, 1, ()):
            raise DomainError('%s takes no isolated sequence' % self.get_model_display())

    @classmethod
    def model_from_str(cls, model_str: str) -> int:
        """Возвращает значение флага MODEL_CHOICES по имени (при отсутствии совпадений вызывает DomainError)."""
        for choice in cls.MODEL_CHOICES:
            if choice[1] == model_str:
                return choice[0]
        raise DomainError('unknown model %r' % model_str)

    def get_model_display(self) -> str:
        return dict(self.MODEL_CHOICES)[self.model]

    def __str__(self):
        name = self.get_model_display()
        if self.has_unit_group:
            return '%s:k=%d,n=%d' % (name, self.k, self.n_div)
        if self.seq:
            return '%s:seq=%s,step=%d' % (name, '/'.join(str(v) for v in self.seq), self.step)
        if self.has_adjoined_unit and (self.m1, self.step) != (-1, 1):
            return '%s:m1=%d,step=%d' % (name, self.m1, self.step)
        return name

    @property
    def has_adjoined_unit(self) -> bool:
        return self.model in (self.Model_S1, self.Model_S4)

    @property
    def has_unit_group(self) -> bool:
        return self.model in (self.Model_S2, self.Model_S5)

    @property
    def has_ideal(self) -> bool:
        return self.model in (self.Model_S3, self.Model_S4, self.Model_S5)

    @property
    def s(self) -> int:
        return self.k // self.n_div

    @property
    def prefix(self) -> Tuple[int, ...]:
        """Явно заданное начало изолированной последовательности."""
        return self.seq or (self.m1,)

    def iso(self, i: int) -> int:
        """i-й член изолированной последовательности, i >= 1."""
        if i < 1:
            raise DomainError('sequence index must be positive, got %d' % i)
        prefix = self.prefix
        if i <= len(prefix):
            return prefix[i - 1]
        return checked(prefix[-1] - self.step * (i - len(prefix)))

    def iso_index_of(self, value: int) -> Optional[int]:
        """Номер i с m_i = value либо None."""
        prefix = self.prefix
        if value >= prefix[-1]:
            return prefix.index(value) + 1 if value in prefix else None
        if (prefix[-1] - value) % self.step:
            return None
        return len(prefix) + (prefix[-1] - value) // self.step

    def isolated_index(self, x: int, y: int) -> int:
        """Наименьшее i с m_i <= min(x, y)."""
        bound = min(x, y)
        prefix = self.prefix
        for i, value in enumerate(prefix, 1):
            if value <= bound:
                return i
        return len(prefix) - ((bound - prefix[-1]) // self.step)

    def validate(self, x: ExtElement) -> ExtElement:
        if isinstance(x, CzElement):
            return x
        if isinstance(x, AdjoinedUnit) and self.has_adjoined_unit:
            return x
        if isinstance(x, UnitGroup) and self.has_unit_group:
            return x
        if isinstance(x, IdealGroup) and self.has_ideal:
            return x
        raise DomainError('element %s is not valid in model %s' % (format_element(self, x), self))


def format_element(m: ModelSpec, x: ExtElement) -> str:
    if isinstance(x, UnitGroup):
        return 'g:%d' % (m.k * x.i) if m.k else 'g:%d*k' % x.i
    return str(x)


def sort_key(x: ExtElement) -> Tuple[int, int, int]:
    """Детерминированный порядок элементов разных сортов: 𝒞_ℤ, e1, G1(k), G0."""
    if isinstance(x, CzElement):
        return 0, x.a, x.b
    if isinstance(x, AdjoinedUnit):
        return 1, 0, 0
    if isinstance(x, UnitGroup):
        return 2, x.i, 0
    return 3, x.n, 0


# ----------------------------------------------------------------------------
# умножение

def ext_multiply(m: ModelSpec, x: ExtElement, y: ExtElement) -> ExtElement:
    m.validate(x)
    m.validate(y)
    return raw_multiply(m, x, y)


def raw_multiply(m: ModelSpec, x: ExtElement, y: ExtElement) -> ExtElement:
    """Произведение без проверки принадлежности сомножителей модели."""
    if isinstance(x, AdjoinedUnit):
        return y
    if isinstance(y, AdjoinedUnit):
        return x

    if isinstance(x, CzElement):
        if isinstance(y, CzElement):
            return multiply(x, y)
        if isinstance(y, UnitGroup):
            return CzElement(x.a, checked(x.b + m.k * y.i))
        return IdealGroup(checked(y.n + x.b - x.a))

    if isinstance(x, UnitGroup):
        if isinstance(y, CzElement):
            return CzElement(checked(y.a - m.k * x.i), y.b)
        if isinstance(y, UnitGroup):
            return UnitGroup(checked(x.i + y.i))
        return IdealGroup(checked(m.k * x.i + y.n))

    # x - элемент идеала
    if isinstance(y, CzElement):
        return IdealGroup(checked(x.n + y.b - y.a))
    if isinstance(y, UnitGroup):
        return IdealGroup(checked(x.n + m.k * y.i))
    return IdealGroup(checked(x.n + y.n))


def ext_product(m: ModelSpec, *word: ExtElement) -> ExtElement:
    """Левая свёртка слова."""
    if not word:
        raise DomainError('empty word')
    result = m.validate(word[0])
    for x in word[1:]:
        result = ext_multiply(m, result, x)
    return result


def ext_inverse(m: ModelSpec, x: ExtElement) -> ExtElement:
    m.validate(x)
    if isinstance(x, CzElement):
        return inverse(x)
    if isinstance(x, UnitGroup):
        return UnitGroup(-x.i)
    if isinstance(x, IdealGroup):
        return IdealGroup(-x.n)
    return x


def classify(m: ModelSpec, x: ExtElement) -> Part:
    m.validate(x)
    if isinstance(x, CzElement):
        return Part.CzPart
    if isinstance(x, AdjoinedUnit):
        return Part.Unit
    if isinstance(x, UnitGroup):
        return Part.UnitGroupPart
    return Part.IdealPart


def hom_to_ideal(m: ModelSpec, x: ExtElement) -> ExtElement:
    """Естественный гомоморфизм на G0: x -> x·ē, где ē = IdealGroup(0)."""
    if not m.has_ideal:
        raise DomainError('model %s has no ideal part' % m)
    return ext_multiply(m, x, IdealGroup(0))


def identity(m: ModelSpec) -> Optional[ExtElement]:
    if m.has_adjoined_unit:
        return E1
    if m.has_unit_group:
        return UnitGroup(0)
    return None


def model_elements(m: ModelSpec, w: Window, group_bound: int) -> List[ExtElement]:
    """Ограниченный носитель модели: элементы окна, затем e1, G1(k) и G0 с |i|, |n| <= group_bound."""
    if group_bound < 0:
        raise DomainError('group bound must be non-negative, got %d' % group_bound)
    elements: List[ExtElement] = list(w.elements())
    if m.has_adjoined_unit:
        elements.append(E1)
    if m.has_unit_group:
        elements.extend(UnitGroup(i) for i in range(-group_bound, group_bound + 1))
    if m.has_ideal:
        elements.extend(IdealGroup(n) for n in range(-group_bound, group_bound + 1))
    return elements


# ----------------------------------------------------------------------------
# идемпотенты

def is_ext_idempotent(m: ModelSpec, x: ExtElement) -> bool:
    return ext_multiply(m, x, x) == x


def ext_idem_leq(m: ModelSpec, e: ExtElement, f: ExtElement) -> bool:
    """Естественный порядок на идемпотентах модели: e <= f тогда и только тогда, когда ef = fe = e."""
    for x in (e, f):
        if not is_ext_idempotent(m, x):
            raise DomainError('%s is not an idempotent of %s' % (format_element(m, x), m))
    return ext_multiply(m, e, f) == e and ext_multiply(m, f, e) == e


def idempotents(m: ModelSpec, w: Window, group_bound: int) -> List[ExtElement]:
    return [x for x in model_elements(m, w, group_bound) if is_ext_idempotent(m, x)]


# ----------------------------------------------------------------------------
# ассоциативность

def associativity_report(m: ModelSpec, w: Window, group_bound: int, max_counterexamples: int = 5) -> Certificate:
    """
    Полный перебор троек (x·y)·z = x·(y·z) по ограниченному носителю модели.

    table[i][j] - номер произведения i-го и j-го элементов в носителе или -1, если оно выходит за носитель;
    такие тройки досчитываются напрямую.
    """
    elements = model_elements(m, w, group_bound)
    position = {x: i for i, x in enumerate(elements)}
    values = [[raw_multiply(m, x, y) for y in elements] for x in elements]
    table = [[position.get(p, -1) for p in row] for row in values]
    cert = Certificate('assoc', max_counterexamples=max_counterexamples)

    passed = 0
    for i, x in enumerate(elements):
        row = table[i]
        for j, y in enumerate(elements):
            xy = row[j]
            xy_row = table[xy] if xy >= 0 else None
            for k, yz in enumerate(table[j]):
                if xy_row is not None and yz >= 0 and xy_row[k] >= 0 and xy_row[k] == row[yz]:
                    passed += 1
                    continue
                lhs = values[xy][k] if xy >= 0 else raw_multiply(m, values[i][j], elements[k])
                rhs = values[i][yz] if yz >= 0 else raw_multiply(m, x, values[j][k])
                if lhs == rhs:
                    passed += 1
                    continue
                cert.check(False, lambda x=x, y=y, z=elements[k], lhs=lhs, rhs=rhs: {
                    'check': 'associativity',
                    'model': str(m),
                    'word': [format_element(m, v) for v in (x, y, z)],
                    'left': format_element(m, lhs),
                    'right': format_element(m, rhs),
                })
    cert.check_many(True, passed)
    return cert
