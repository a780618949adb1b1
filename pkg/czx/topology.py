"""
Базы окрестностей неизолированных точек моделей S1-S5, каталог законов о включении окрестностей,
DL-множества и свидетели дискретности на 𝒞_ℤ, множества L, R и I замыкания 𝒞_ℤ в модели.

Базисные окрестности:
    U_j(e1)   = {e1} ∪ {(m_q, m_q): q >= j}
    U_j(ki)   = {ki} ∪ {(-n·q, -n·q + ki): q >= j}      (n - делитель k)
    U_j(g)    = {g} ∪ {(x, y): y - x = g, min(x, y) >= j}
Принадлежность проверяется точно по замкнутым формулам; законы проверяются на хвостах,
усечённых до индексов [j, j + tail].
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Set, Tuple

from .certificates import Certificate, Status
from .core import CzElement, Side, Window, multiply
from .exceptions import DomainError, ParameterError
from .models import (
    AdjoinedUnit, E1, ExtElement, IdealGroup, ModelSpec, Part, UnitGroup,
    classify, ext_inverse, ext_multiply, format_element, model_elements, raw_multiply, sort_key,
)

logger = logging.getLogger(__name__)

# точки, на которых проверяются законы сдвига окрестности на элемент 𝒞_ℤ
SHIFT_WINDOW = Window(-3, 3)

# |a|, |b| <= 2^61 гарантируют, что координаты произведения помещаются в int64
SAFE_COORDINATE = 2 ** 61


@dataclass(frozen=True)
class BasicNbhd:
    model: ModelSpec
    center: ExtElement
    idx: int

    def __post_init__(self):
        if self.idx < 1:
            raise DomainError('neighbourhood index must be positive, got %d' % self.idx)
        if isinstance(self.center, CzElement):
            raise DomainError('points of the extended bicyclic semigroup are isolated')
        self.model.validate(self.center)

    def __str__(self):
        return 'U_%d(%s)' % (self.idx, format_element(self.model, self.center))

    def member(self, t: int) -> CzElement:
        """Элемент 𝒞_ℤ с номером хвоста t >= idx."""
        m, c = self.model, self.center
        if isinstance(c, AdjoinedUnit):
            return CzElement(m.iso(t), m.iso(t))
        if isinstance(c, UnitGroup):
            return CzElement(-m.n_div * t, -m.n_div * t + m.k * c.i)
        if c.n >= 0:
            return CzElement(t, t + c.n)
        return CzElement(t - c.n, t)


def _key(x):
    """Элемент 𝒞_ℤ -> пара (a, b); остальные сорта без изменений."""
    return (x.a, x.b) if isinstance(x, CzElement) else x


def _element(key) -> ExtElement:
    return CzElement(*key) if isinstance(key, tuple) else key


def membership(nb: BasicNbhd) -> Callable[[object], bool]:
    """Предикат принадлежности окрестности nb на ключах _key, без проверки сорта."""
    m, c, idx = nb.model, nb.center, nb.idx

    if isinstance(c, AdjoinedUnit):
        def cz(a, b):
            if a != b:
                return False
            q = m.iso_index_of(a)
            return q is not None and q >= idx
    elif isinstance(c, UnitGroup):
        n, ki = m.n_div, m.k * c.i

        def cz(a, b):
            return a % n == 0 and b == a + ki and -a // n >= idx
    else:
        g = c.n

        def cz(a, b):
            return b - a == g and min(a, b) >= idx

    def contains(key) -> bool:
        if isinstance(key, tuple):
            return cz(*key)
        return key == c
    return contains


def nbhd_contains(nb: BasicNbhd, x: ExtElement) -> bool:
    nb.model.validate(x)
    return membership(nb)(_key(x))


def nbhd_members(nb: BasicNbhd, tail: int) -> List[ExtElement]:
    """Центр и элементы хвоста с номерами от idx до idx + tail."""
    return [nb.center] + [nb.member(t) for t in range(nb.idx, nb.idx + tail + 1)]


def unit_nbhd_index_profile(m: ModelSpec, nb: BasicNbhd) -> int:
    """Общее значение a - b на элементах 𝒞_ℤ окрестности единицы (или e1)."""
    if nb.model != m:
        raise DomainError('neighbourhood %s belongs to model %s, not %s' % (nb, nb.model, m))
    if isinstance(nb.center, AdjoinedUnit):
        return 0
    if isinstance(nb.center, UnitGroup):
        return -m.k * nb.center.i
    raise DomainError('%s is not centred at a unit' % nb)


def covering_tail(w: Window) -> int:
    """Длина хвоста, после которой элементы любой базисной окрестности покидают окно w."""
    return abs(w.lo) + abs(w.hi) + 2


def nbhd_extent_agrees(nb: BasicNbhd, w: Window) -> bool:
    """Замкнутая формула принадлежности совпадает с перечислением окрестности, усечённым окном."""
    closed = {x for x in w.elements() if nbhd_contains(nb, x)}
    listed = {x for x in nbhd_members(nb, covering_tail(w)) if isinstance(x, CzElement) and x in w}
    return closed == listed


# ----------------------------------------------------------------------------
# законы о включении окрестностей

@dataclass(frozen=True)
class InclusionLaw:
    """
    Закон о включении окрестностей и его параметры:

        L1 (n,)           U_n(e1)·U_n(e1) = U_n(e1), U_n(e1)⁻¹ = U_n(e1), сдвиги на точки 𝒞_ℤ
        L2 (i1, i2, j)    U_j(ki1)·U_{j-s·i1}(ki2) ⊆ U_j(k(i1+i2)), инверсия, сдвиги
        L3 (n, k1, k2)    U_2n(k1)·U_2n(k2) ⊆ U_n(k1+k2), инверсия, сдвиги
        L4 (n1, n0, k0)   U_n1(e1)·U_n0(k0) ⊆ U_n0(k0) в обоих порядках
        L5 (p, i, n)      U_2p(ki)·U_2p(n) ⊆ U_p(ki+n) в обоих порядках
        L6 (i, k)         U_i(0)·{(i, i+k)} = U_i(k)
        L7 (j,)           g·U_j(1) и U_j(1)·g для g = UnitGroup(1)
    """
    LAW_CHOICES = (
        ('L1', 1),
        ('L2', 3),
        ('L3', 3),
        ('L4', 3),
        ('L5', 3),
        ('L6', 2),
        ('L7', 1),
    )

    law_id: str
    params: Tuple[int, ...]

    def __post_init__(self):
        arity = dict(self.LAW_CHOICES).get(self.law_id)
        if arity is None:
            raise ParameterError('unknown law %r' % self.law_id)
        if len(self.params) != arity:
            raise ParameterError('%s takes %d parameters, got %d' % (self.law_id, arity, len(self.params)))

    def __str__(self):
        return '%s%s' % (self.law_id, tuple(self.params))


class _LawCheck:
    """
    Вспомогательный накопитель проверок одного закона.

    Произведения считаются пачками: пары элементов 𝒞_ℤ - на целых числах, остальные через raw_multiply
    (элементы окрестностей и точки сдвигов уже допустимы в модели). Каждая пара - одна проверка,
    пары с одинаковым произведением учитываются вместе.
    """

    def __init__(self, law: InclusionLaw, m: ModelSpec, tail: int, cert: Certificate):
        self.law = law
        self.m = m
        self.tail = tail
        self.cert = cert
        self._members: Dict[BasicNbhd, List[ExtElement]] = {}

    def fmt(self, x: ExtElement) -> str:
        return format_element(self.m, x)

    def members(self, nb: BasicNbhd) -> List[ExtElement]:
        if nb not in self._members:
            self._members[nb] = nbhd_members(nb, self.tail)
        return self._members[nb]

    def products(self, left: List[ExtElement], right: List[ExtElement]) -> Counter:
        """Мультимножество ключей произведений left·right."""
        m = self.m
        cz_left = [x for x in left if isinstance(x, CzElement)]
        cz_right = [y for y in right if isinstance(y, CzElement)]
        if _small(cz_left) and _small(cz_right):
            products = Counter(
                (x.a - x.b + top, y.b - y.a + top)
                for x in cz_left for y in cz_right for top in (max(x.b, y.a),)
            )
        else:
            products = Counter(_key(multiply(x, y)) for x in cz_left for y in cz_right)
        products.update(_key(raw_multiply(m, x, y)) for x in left if not isinstance(x, CzElement) for y in right)
        products.update(_key(raw_multiply(m, x, y)) for x in cz_left for y in right if not isinstance(y, CzElement))
        return products

    def _fail(self, check: str, left: List[ExtElement], right: List[ExtElement], key, expected: str):
        """Фабрика контрпримера: первая пара из left×right с произведением key."""
        def build() -> dict:
            word = next((x, y) for x in left for y in right if _key(raw_multiply(self.m, x, y)) == key)
            return {
                'check': '%s %s' % (self.law, check),
                'model': str(self.m),
                'word': [self.fmt(x) for x in word],
                'product': self.fmt(_element(key)),
                'expected': expected,
            }
        return build

    def include(self, check: str, left: List[ExtElement], right: List[ExtElement], target: BasicNbhd) -> Counter:
        """Проверяет left·right ⊆ target поточечно; возвращает произведения."""
        products = self.products(left, right)
        contains = membership(target)
        for key, count in products.items():
            self.cert.check_many(contains(key), count, self._fail(check, left, right, key, str(target)))
        return products

    def equals(self, check: str, left: List[ExtElement], right: List[ExtElement], expected: ExtElement):
        """Проверяет x·y = expected для всех x из left и y из right."""
        for key, count in self.products(left, right).items():
            self.cert.check_many(key == _key(expected), count,
                                 self._fail(check, left, right, key, self.fmt(expected)))

    def inverts(self, nb: BasicNbhd, target: BasicNbhd):
        """nb⁻¹ ⊆ target и обратное включение на усечении."""
        inverted = {ext_inverse(self.m, x) for x in self.members(nb)}
        contains = membership(target)
        for x in inverted:
            self.cert.check(contains(_key(x)), lambda x=x: {
                'check': '%s inverse' % self.law,
                'model': str(self.m),
                'word': [self.fmt(x)],
                'product': self.fmt(x),
                'expected': str(target),
            })
        self.covers('inverse', inverted, self.members(target))

    def covers(self, check: str, produced: Iterable, expected: Iterable[ExtElement]):
        """Обратное включение на усечении: каждый ожидаемый элемент получен."""
        produced = {_key(p) for p in produced}
        for r in expected:
            self.cert.check(_key(r) in produced, lambda r=r: {
                'check': '%s %s (reverse)' % (self.law, check),
                'model': str(self.m),
                'word': [],
                'product': '',
                'expected': self.fmt(r),
            })


def _small(elements: List[CzElement]) -> bool:
    """Координаты не больше SAFE_COORDINATE: произведение таких элементов не выходит за int64."""
    return all(abs(x.a) <= SAFE_COORDINATE and abs(x.b) <= SAFE_COORDINATE for x in elements)


def _require(condition: bool, message: str):
    if not condition:
        raise ParameterError(message)


def _check_l1(c: _LawCheck, n: int):
    m = c.m
    _require(m.has_adjoined_unit, 'L1 needs a model with an adjoined unit, got %s' % m)
    _require(n >= 1, 'L1 needs n >= 1, got %d' % n)
    u = BasicNbhd(m, E1, n)
    members = c.members(u)

    products = c.include('product', members, members, u)
    c.covers('product', products, members)
    c.inverts(u, u)

    for x in SHIFT_WINDOW.elements():
        v = c.members(BasicNbhd(m, E1, m.isolated_index(x.a, x.b)))
        c.equals('left translation', v, [x], x)
        c.equals('right translation', [x], v, x)


def _check_l2(c: _LawCheck, i1: int, i2: int, j: int):
    m = c.m
    _require(m.has_unit_group, 'L2 needs a model with a group of units, got %s' % m)
    _require(j >= 1, 'L2 needs j >= 1, got %d' % j)
    _require(j - i1 * m.s >= 1, 'L2 needs j - i1*s >= 1, got %d' % (j - i1 * m.s))

    a = BasicNbhd(m, UnitGroup(i1), j)
    b = BasicNbhd(m, UnitGroup(i2), j - i1 * m.s)
    c.include('product', c.members(a), c.members(b), BasicNbhd(m, UnitGroup(i1 + i2), j))

    # U_j(ki)⁻¹ = U_{j-s·i}(-ki)
    c.inverts(a, BasicNbhd(m, UnitGroup(-i1), j - i1 * m.s))

    for i in (i1, i2):
        v = c.members(BasicNbhd(m, UnitGroup(i), j))
        ki = m.k * i
        for x in SHIFT_WINDOW.elements():
            if m.n_div * j < max(-x.b, ki - x.a):
                c.cert.skip('L2 translation points with n*j < max(-b, ki-a) are skipped')
                continue
            c.equals('left translation', v, [x], CzElement(x.a - ki, x.b))
            c.equals('right translation', [x], v, CzElement(x.a, x.b + ki))


def _check_l3(c: _LawCheck, n: int, k1: int, k2: int):
    m = c.m
    _require(m.has_ideal, 'L3 needs a model with an ideal, got %s' % m)
    _require(n >= 1 and n >= max(abs(k1), abs(k2)), 'L3 needs n >= max(|k1|, |k2|, 1), got n=%d' % n)

    a = BasicNbhd(m, IdealGroup(k1), 2 * n)
    b = BasicNbhd(m, IdealGroup(k2), 2 * n)
    c.include('product', c.members(a), c.members(b), BasicNbhd(m, IdealGroup(k1 + k2), n))

    for kk in sorted({k1, k2}):
        c.inverts(BasicNbhd(m, IdealGroup(kk), n), BasicNbhd(m, IdealGroup(-kk), n))

        v = c.members(BasicNbhd(m, IdealGroup(kk), 2 * n))
        for x in SHIFT_WINDOW.elements():
            # при |a| + |b| > n включение нарушается уже для (-1,1)·U_2(2) при n = 1
            if abs(x.a) + abs(x.b) > n:
                continue
            target = BasicNbhd(m, IdealGroup(kk + x.b - x.a), n)
            c.include('left translation', [x], v, target)
            c.include('right translation', v, [x], target)


def _check_l4(c: _LawCheck, n1: int, n0: int, k0: int):
    m = c.m
    _require(m.has_adjoined_unit and m.has_ideal, 'L4 needs S4, got %s' % m)
    _require(n1 >= 1 and n0 >= 1, 'L4 needs positive indices')
    u = BasicNbhd(m, E1, n1)
    v = BasicNbhd(m, IdealGroup(k0), n0)
    c.include('product', c.members(u), c.members(v), v)
    c.include('reversed product', c.members(v), c.members(u), v)


def _check_l5(c: _LawCheck, p: int, i: int, n: int):
    m = c.m
    _require(m.has_unit_group and m.has_ideal, 'L5 needs S5, got %s' % m)
    _require(p >= 1 and p >= max(abs(m.k * i), abs(n)), 'L5 needs p >= max(|ki|, |n|, 1), got p=%d' % p)
    u = BasicNbhd(m, UnitGroup(i), 2 * p)
    v = BasicNbhd(m, IdealGroup(n), 2 * p)
    target = BasicNbhd(m, IdealGroup(m.k * i + n), p)
    c.include('product', c.members(u), c.members(v), target)
    c.include('reversed product', c.members(v), c.members(u), target)


def _check_l6(c: _LawCheck, i: int, kk: int):
    m = c.m
    _require(m.has_ideal, 'L6 needs a model with an ideal, got %s' % m)
    _require(i >= 1, 'L6 needs i >= 1, got %d' % i)
    shift = CzElement(i, i + kk) if kk >= 0 else CzElement(i - kk, i)
    u = BasicNbhd(m, IdealGroup(0), i)
    target = BasicNbhd(m, IdealGroup(kk), i)
    products = c.include('translation', c.members(u), [shift], target)
    # при k < 0 первые |k| элементов хвоста склеиваются в один
    slack = max(0, -kk)
    c.covers('translation', products, nbhd_members(target, max(0, c.tail - slack)))


def _check_l7(c: _LawCheck, j: int):
    m = c.m
    _require(m.has_unit_group and m.n_div == 1, 'L7 needs S2 or S5 with n=1, got %s' % m)
    _require(j >= 1, 'L7 needs j >= 1, got %d' % j)
    g = UnitGroup(1)
    kappa = unit_nbhd_index_profile(m, BasicNbhd(m, g, 1))
    members = c.members(BasicNbhd(m, UnitGroup(0), j))
    qs = range(j, j + c.tail + 1)

    for side, left, right, expected in (
        (Side.left, [g], members, {g} | {CzElement(-q + kappa, -q) for q in qs}),
        (Side.right, members, [g], {g} | {CzElement(-q, -q - kappa) for q in qs}),
    ):
        allowed = {_key(x) for x in expected}
        check = '%s translation' % side.value
        products = c.products(left, right)
        for key, count in products.items():
            c.cert.check_many(key in allowed, count, c._fail(check, left, right, key, 'g*U_%d(1)' % j))
        c.covers(check, products, sorted(expected, key=sort_key))


LAW_CHECKS: Dict[str, Callable] = {
    'L1': _check_l1,
    'L2': _check_l2,
    'L3': _check_l3,
    'L4': _check_l4,
    'L5': _check_l5,
    'L6': _check_l6,
    'L7': _check_l7,
}


def check_law(law: InclusionLaw, m: ModelSpec, tail_bound: int, max_counterexamples: int = 5) -> Certificate:
    """
    Проверяет закон на хвостах длины tail_bound. Нарушение побочных условий параметров
    вызывает ParameterError до начала перебора.
    """
    if tail_bound < 1:
        raise DomainError('tail bound must be positive, got %d' % tail_bound)
    cert = Certificate(str(law), max_counterexamples=max_counterexamples)
    LAW_CHECKS[law.law_id](_LawCheck(law, m, tail_bound, cert), *law.params)
    logger.debug('%s in %s: %s, %d products', law, m, cert.status.value, cert.checked)
    return cert


def check_unit_periodicity(m: ModelSpec, i: int, powers: int, j: int,
                           max_counterexamples: int = 5) -> Certificate:
    """Степени UnitGroup(i), i ≠ 0, не попадают в окрестность U_j единицы."""
    if not m.has_unit_group:
        raise ParameterError('model %s has no group of units' % m)
    if i == 0:
        raise ParameterError('the identity is periodic')
    u = BasicNbhd(m, UnitGroup(0), j)
    cert = Certificate('unit periodicity %d' % i, max_counterexamples=max_counterexamples)
    g = UnitGroup(i)
    power = g
    for p in range(1, powers + 1):
        cert.check(not nbhd_contains(u, power), lambda p=p, power=power: {
            'check': 'unit periodicity',
            'model': str(m),
            'word': [format_element(m, g)] * p,
            'product': format_element(m, power),
            'expected': 'outside %s' % u,
        })
        power = ext_multiply(m, power, g)
    return cert


# ----------------------------------------------------------------------------
# DL-множества и дискретность 𝒞_ℤ

def dl_set(a: int, b: int, w: Window) -> Set[CzElement]:
    """{(x, y) из окна: (x, y)·(b, a) = (a, a)}"""
    g, e = CzElement(b, a), CzElement(a, a)
    return {x for x in w.elements() if multiply(x, g) == e}


def dl_set_closed_form(a: int, b: int, w: Window) -> Set[CzElement]:
    return {x for x in w.elements() if x.a - x.b == a - b and x.a <= a}


def singleton_identity(a: int, b: int, w: Window) -> Status:
    """
    {(a, b)} = DL_(b,a)[(a,a)] \\ DL_(b-1,a-1)[(a-1,a-1)] на окне.
    INCONCLUSIVE, если окно не опускается ниже a или b.
    """
    x = CzElement(a, b)
    if x not in w:
        raise DomainError('%s lies outside window %s' % (x, w))
    if a - 1 < w.lo or b - 1 < w.lo:
        return Status.INCONCLUSIVE
    diff = dl_set(a, b, w) - dl_set(a - 1, b - 1, w)
    return Status.PASS if diff == {x} else Status.FAIL


class Witness(NamedTuple):
    offender: CzElement
    escape: CzElement
    side: Side


def discreteness_witness(a: int, v: Iterable[CzElement]) -> Optional[Witness]:
    """
    Для конечной окрестности v точки (a, a) ищет неидемпотент (x, y) с max(x, y) <= a
    и его сдвиг, уводящий из любой окрестности, не содержащей таких элементов.
    """
    v = set(v)
    if CzElement(a, a) not in v:
        raise DomainError('(%d,%d) does not belong to the candidate neighbourhood' % (a, a))
    for x in sorted(v):
        if x.a < x.b <= a:
            return Witness(x, CzElement(a, a + (x.b - x.a)), Side.left)
        if x.b < x.a <= a:
            return Witness(x, CzElement(a + (x.a - x.b), a), Side.right)
    return None


def random_candidate_nbhd(rng: random.Random, a: int, spread: int = 6, size: int = 6) -> Set[CzElement]:
    """Случайная конечная окрестность (a, a) с хотя бы одним неидемпотентом из области max(x, y) <= a."""
    v = {CzElement(a, a)}
    x = rng.randint(a - spread, a)
    y = rng.choice([t for t in range(a - spread, a + 1) if t != x])
    v.add(CzElement(x, y))
    for _ in range(rng.randint(0, size)):
        v.add(CzElement(rng.randint(a - spread, a), rng.randint(a - spread, a)))
    return v


# ----------------------------------------------------------------------------
# ↑(a, b), L, R и I

class Upset(NamedTuple):
    members: List[ExtElement]
    alternates_agree: bool


def upset(m: ModelSpec, a: int, b: int, w: Window, group_bound: int) -> Upset:
    """
    ↑(a, b) = {x: x·(b,b) = (a,b)} по ограниченному носителю модели; заодно сравнивается
    с определениями {x: (a,a)·x = (a,b)} и {x: (a,a)·x·(b,b) = (a,b)}.
    """
    target, ea, eb = CzElement(a, b), CzElement(a, a), CzElement(b, b)
    elements = model_elements(m, w, group_bound)
    first = [x for x in elements if ext_multiply(m, x, eb) == target]
    second = [x for x in elements if ext_multiply(m, ea, x) == target]
    third = [x for x in elements if ext_multiply(m, ext_multiply(m, ea, x), eb) == target]
    return Upset(first, first == second == third)


class BoundarySets(NamedTuple):
    left: List[ExtElement]
    right: List[ExtElement]
    ideal: List[ExtElement]


class _Boundary:
    """Критерии принадлежности L, R и I по элементам окна в роли свидетелей."""

    def __init__(self, m: ModelSpec, w: Window):
        self.m = m
        self.witnesses = w.elements()

    def in_left(self, x: ExtElement) -> bool:
        return not isinstance(x, CzElement) and any(
            isinstance(ext_multiply(self.m, x, y), CzElement) for y in self.witnesses)

    def in_right(self, x: ExtElement) -> bool:
        return not isinstance(x, CzElement) and any(
            isinstance(ext_multiply(self.m, y, x), CzElement) for y in self.witnesses)

    def in_ideal(self, x: ExtElement) -> bool:
        return not isinstance(x, CzElement) and not self.in_left(x) and not self.in_right(x)


def boundary_sets(m: ModelSpec, w: Window, group_bound: int) -> BoundarySets:
    criteria = _Boundary(m, w)
    outside = [x for x in model_elements(m, w, group_bound) if not isinstance(x, CzElement)]
    return BoundarySets(
        left=[x for x in outside if criteria.in_left(x)],
        right=[x for x in outside if criteria.in_right(x)],
        ideal=[x for x in outside if criteria.in_ideal(x)],
    )


def boundary_certificate(m: ModelSpec, w: Window, group_bound: int, max_counterexamples: int = 5) -> Certificate:
    """Свойства множеств L, R и I: L = R, I - идеал, L - подполугруппа, |↑(a,b) ∩ L| <= 1, согласие с classify."""
    cert = Certificate('boundary', max_counterexamples=max_counterexamples)
    criteria = _Boundary(m, w)
    sets = boundary_sets(m, w, group_bound)
    elements = model_elements(m, w, group_bound)
    fmt = lambda xs: [format_element(m, x) for x in xs]  # noqa: E731

    cert.check(sets.left == sets.right, lambda: {
        'check': 'L = R', 'model': str(m), 'left': fmt(sets.left), 'right': fmt(sets.right),
    })

    for i in sets.ideal:
        for x in elements:
            for word in ((x, i), (i, x)):
                p = ext_multiply(m, *word)
                cert.check(criteria.in_ideal(p), lambda word=word, p=p: {
                    'check': 'I is an ideal', 'model': str(m), 'word': fmt(word), 'product': format_element(m, p),
                })

    for x in sets.left:
        for y in sets.left:
            p = ext_multiply(m, x, y)
            cert.check(criteria.in_left(p), lambda x=x, y=y, p=p: {
                'check': 'L is a subsemigroup', 'model': str(m), 'word': fmt((x, y)), 'product': format_element(m, p),
            })

    left = set(sets.left)
    for x in w.elements():
        up = upset(m, x.a, x.b, w, group_bound)
        cert.check(up.alternates_agree, lambda x=x: {
            'check': 'upset definitions agree', 'model': str(m), 'word': [str(x)],
        })
        hits = [y for y in up.members if y in left]
        cert.check(len(hits) <= 1, lambda x=x, hits=hits: {
            'check': 'upset meets L at most once', 'model': str(m), 'word': [str(x)], 'product': fmt(hits),
        })

    for x in sets.left:
        cert.check(classify(m, x) in (Part.Unit, Part.UnitGroupPart), lambda x=x: {
            'check': 'L consists of units', 'model': str(m), 'word': [format_element(m, x)],
        })
    for x in sets.ideal:
        cert.check(classify(m, x) is Part.IdealPart, lambda x=x: {
            'check': 'I lies in the ideal part', 'model': str(m), 'word': [format_element(m, x)],
        })
    outside = sorted((x for x in elements if not isinstance(x, CzElement)), key=sort_key)
    cert.check(sorted(left | set(sets.ideal), key=sort_key) == outside, lambda: {
        'check': 'L and I cover the non-Cz part', 'model': str(m), 'word': fmt(outside),
    })
    return cert
