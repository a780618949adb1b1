"""
Точная арифметика расширенной бициклической полугруппы 𝒞_ℤ = ℤ×ℤ.

Произведение задаётся формулой
    (a, b)·(c, d) = (a - b + M, d - c + M),  M = max(b, c),
что совпадает с трёхвариантной записью (b < c, b = c, b > c).
Все координаты результатов проверяются на попадание в знаковое 64-битное целое.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

from .exceptions import CzOverflowError, DomainError

INT64_MIN = -2 ** 63
INT64_MAX = 2 ** 63 - 1


def checked(value: int) -> int:
    """Возвращает value, если оно помещается в int64, иначе вызывает CzOverflowError."""
    if value < INT64_MIN or value > INT64_MAX:
        raise CzOverflowError('integer overflow: %d does not fit into 64 bits' % value)
    return value


@dataclass(frozen=True, order=True)
class CzElement:
    """Элемент (a, b) полугруппы 𝒞_ℤ. Порядок сравнения лексикографический по (a, b)."""
    a: int
    b: int

    def __post_init__(self):
        checked(self.a)
        checked(self.b)

    def __str__(self):
        return '(%d,%d)' % (self.a, self.b)


class GreenRelation(Enum):
    R = 'R'
    L = 'L'
    H = 'H'
    D = 'D'
    J = 'J'


class Side(Enum):
    left = 'left'
    right = 'right'


@dataclass(frozen=True)
class Window:
    """Окно [lo, hi], ограничивающее каждую координату при переборе."""
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError('window lower bound %d exceeds upper bound %d' % (self.lo, self.hi))

    def __str__(self):
        return '%d:%d' % (self.lo, self.hi)

    def __contains__(self, x: CzElement) -> bool:
        return self.lo <= x.a <= self.hi and self.lo <= x.b <= self.hi

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    @property
    def size(self) -> int:
        return self.width ** 2

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def elements(self) -> List[CzElement]:
        """Все элементы окна в лексикографическом порядке."""
        return [CzElement(a, b) for a in self.values() for b in self.values()]

    def enlarged(self, margin: int) -> 'Window':
        return Window(self.lo - margin, self.hi + margin)


def window_elements(w: Window) -> List[CzElement]:
    return w.elements()


# ----------------------------------------------------------------------------
# умножение и инверсия

def multiply(x: CzElement, y: CzElement) -> CzElement:
    m = max(x.b, y.a)
    return CzElement(checked(x.a - x.b + m), checked(y.b - y.a + m))


def inverse(x: CzElement) -> CzElement:
    return CzElement(x.b, x.a)


def index(x: CzElement) -> int:
    """Гомоморфизм (a, b) -> a - b на аддитивную группу целых."""
    return checked(x.a - x.b)


def is_idempotent(x: CzElement) -> bool:
    return x.a == x.b


def _ensure_idempotent(*elements: CzElement):
    for e in elements:
        if not is_idempotent(e):
            raise DomainError('%s is not an idempotent' % e)


def idem_leq(e: CzElement, f: CzElement) -> bool:
    """Естественный порядок на идемпотентах: (a,a) <= (b,b) тогда и только тогда, когда a >= b."""
    _ensure_idempotent(e, f)
    return e.a >= f.a


def idem_meet(e: CzElement, f: CzElement) -> CzElement:
    _ensure_idempotent(e, f)
    top = max(e.a, f.a)
    return CzElement(top, top)


def connecting_element(e: CzElement, f: CzElement) -> CzElement:
    """Возвращает x с x·x⁻¹ = e и x⁻¹·x = f (любые два идемпотента 𝒟-эквивалентны)."""
    _ensure_idempotent(e, f)
    return CzElement(e.a, f.a)


# ----------------------------------------------------------------------------
# отношения Грина и главные идеалы

def green_related(x: CzElement, y: CzElement, rel: GreenRelation) -> bool:
    if rel is GreenRelation.R:
        return x.a == y.a
    if rel is GreenRelation.L:
        return x.b == y.b
    if rel is GreenRelation.H:
        return x.a == y.a and x.b == y.b
    # полугруппа бипроста: 𝒟 и 𝒥 универсальны
    return True


def in_principal_right_ideal(x: CzElement, gen: CzElement) -> bool:
    """x ∈ gen·𝒞_ℤ¹"""
    return x.a >= gen.a


def in_principal_left_ideal(x: CzElement, gen: CzElement) -> bool:
    """x ∈ 𝒞_ℤ¹·gen"""
    return x.b >= gen.b


def solve_translation(gen: CzElement, target: CzElement, side: Side, w: Window) -> Optional[CzElement]:
    """
    Ищет перебором в окне w элемент u с gen·u = target (side=right) или u·gen = target (side=left).
    Возвращает первый найденный в лексикографическом порядке u либо None.
    """
    for u in w.elements():
        product = multiply(gen, u) if side is Side.right else multiply(u, gen)
        if product == target:
            return u
    return None


def translation_reach(gen: CzElement, side: Side, w: Window) -> Set[CzElement]:
    """Все элементы вида gen·u (right) или u·gen (left) при u из окна w."""
    if side is Side.right:
        return {multiply(gen, u) for u in w.elements()}
    return {multiply(u, gen) for u in w.elements()}


# ----------------------------------------------------------------------------
# вложение углов 𝒞_ℤ[n] в бициклическую полугруппу

BicyclicWord = Tuple[int, int]


def bicyclic_multiply(x: BicyclicWord, y: BicyclicWord) -> BicyclicWord:
    """Произведение слов q^i p^j · q^k p^l в нормальной форме (соотношение pq = 1)."""
    (i, j), (k, l) = x, y
    m = max(j, k)
    return i - j + m, l - k + m


def bicyclic_embed(n: int, x: CzElement) -> BicyclicWord:
    """Изоморфизм угла 𝒞_ℤ[n] = {(a, b): a, b >= n} на бициклическую полугруппу: (a, b) -> q^(a-n) p^(b-n)."""
    if x.a < n or x.b < n:
        raise DomainError('%s does not belong to the corner with bound %d' % (x, n))
    return checked(x.a - n), checked(x.b - n)


class GreenOracle:
    """
    Переборный оракул для отношений Грина на окне.

    Для каждого элемента окна кэширует множества правых и левых сдвигов по расширенному
    окну поиска search; присоединённая единица S¹ заменяется проверкой x == y.
    """

    def __init__(self, w: Window, search: Window):
        self.window = w
        self.search = search
        self._right: Dict[CzElement, Set[CzElement]] = {}
        self._left: Dict[CzElement, Set[CzElement]] = {}
        self._classes: Dict[Tuple[GreenRelation, CzElement], Set[CzElement]] = {}
        self._left_ideals: Dict[CzElement, List[CzElement]] = {}

    def right_reach(self, x: CzElement) -> Set[CzElement]:
        if x not in self._right:
            self._right[x] = translation_reach(x, Side.right, self.search)
        return self._right[x]

    def left_reach(self, x: CzElement) -> Set[CzElement]:
        if x not in self._left:
            self._left[x] = translation_reach(x, Side.left, self.search)
        return self._left[x]

    def in_right_ideal(self, y: CzElement, x: CzElement) -> bool:
        return x == y or y in self.right_reach(x)

    def in_left_ideal(self, y: CzElement, x: CzElement) -> bool:
        return x == y or y in self.left_reach(x)

    def in_two_sided_ideal(self, y: CzElement, x: CzElement) -> bool:
        """y ∈ S¹xS¹: ищем промежуточный z ∈ S¹x из окна с y ∈ zS¹."""
        if x not in self._left_ideals:
            self._left_ideals[x] = [z for z in self.window.elements() if self.in_left_ideal(z, x)]
        return any(self.in_right_ideal(y, z) for z in self._left_ideals[x])

    def green_class(self, x: CzElement, rel: GreenRelation) -> Set[CzElement]:
        """Класс x по отношению rel (R или L), ограниченный окном."""
        key = (rel, x)
        if key not in self._classes:
            self._classes[key] = {z for z in self.window.elements() if self.related(x, z, rel)}
        return self._classes[key]

    def related(self, x: CzElement, y: CzElement, rel: GreenRelation) -> bool:
        if rel is GreenRelation.R:
            return self.in_right_ideal(y, x) and self.in_right_ideal(x, y)
        if rel is GreenRelation.L:
            return self.in_left_ideal(y, x) and self.in_left_ideal(x, y)
        if rel is GreenRelation.H:
            return self.related(x, y, GreenRelation.R) and self.related(x, y, GreenRelation.L)
        if rel is GreenRelation.D:
            # x R z L y для некоторого z из окна
            return not self.green_class(x, GreenRelation.R).isdisjoint(self.green_class(y, GreenRelation.L))
        return self.in_two_sided_ideal(y, x) and self.in_two_sided_ideal(x, y)
