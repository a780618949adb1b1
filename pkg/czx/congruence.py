"""
Конгруэнции на 𝒞_ℤ.

Всякая нетривиальная конгруэнция групповая, поэтому решётка исчерпывается тождественной
конгруэнцией и семейством σ_k: (a,b) σ_k (c,d) тогда и только тогда, когда a - b ≡ c - d (mod k).
σ_0 - минимальная групповая конгруэнция, σ_1 - универсальная.
"""
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .core import CzElement, Window, index, multiply
from .exceptions import DomainError

Pair = Tuple[CzElement, CzElement]
PairList = Sequence[Pair]


@dataclass(frozen=True)
class CongruenceSpec:
    Kind_Identity = 'identity'
    Kind_SigmaK = 'sigma'

    KIND_CHOICES = (
        (Kind_Identity, 'identity'),
        (Kind_SigmaK, 'sigma'),
    )

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in dict(self.KIND_CHOICES):
            raise DomainError('unknown congruence kind %r' % self.kind)
        if self.k < 0:
            raise DomainError('sigma modulus must be non-negative, got %d' % self.k)
        if self.kind == self.Kind_Identity and self.k:
            raise DomainError('identity congruence takes no modulus')

    @classmethod
    def identity(cls) -> 'CongruenceSpec':
        return cls(cls.Kind_Identity)

    @classmethod
    def sigma(cls, k: int) -> 'CongruenceSpec':
        return cls(cls.Kind_SigmaK, k)

    @property
    def is_identity(self) -> bool:
        return self.kind == self.Kind_Identity

    def quotient_label(self) -> str:
        """Фактор-группа по σ_k: Z при k = 0, trivial при k = 1, Z/kZ иначе."""
        if self.is_identity:
            return ''
        if self.k == 0:
            return 'Z'
        if self.k == 1:
            return 'trivial'
        return 'Z/%dZ' % self.k

    def __str__(self):
        if self.is_identity:
            return 'identity'
        return 'sigma k=%d quotient=%s' % (self.k, self.quotient_label())


def related(spec: CongruenceSpec, x: CzElement, y: CzElement) -> bool:
    if spec.is_identity:
        return x == y
    if spec.k == 0:
        return index(x) == index(y)
    return (index(x) - index(y)) % spec.k == 0


def quotient_map(k: int, x: CzElement) -> int:
    """Естественный гомоморфизм на ℤ (k = 0) или на ℤ/kℤ с вычетами в [0, k)."""
    if k < 0:
        raise DomainError('quotient modulus must be non-negative, got %d' % k)
    if k == 0:
        return index(x)
    return index(x) % k


def quotient_add(k: int, p: int, q: int) -> int:
    """Сложение в циклической группе порядка k (в ℤ при k = 0)."""
    return p + q if k == 0 else (p + q) % k


def congruence_from_pairs(gens: PairList) -> CongruenceSpec:
    """Наименьшая конгруэнция, содержащая пары gens."""
    if all(x == y for x, y in gens):
        return CongruenceSpec.identity()
    g = reduce(math.gcd, (abs(index(x) - index(y)) for x, y in gens), 0)
    return CongruenceSpec.sigma(g)


def cyclic_generator(n: int, k: int) -> int:
    """Неотрицательная образующая подгруппы ℤ, порождённой {n} ∪ kℤ."""
    if k <= 0:
        raise DomainError('the group kZ must be non-trivial, got k=%d' % k)
    return math.gcd(abs(n), k)


def additive_closure(gens: Iterable[int], bound: int) -> Set[int]:
    """
    Переборное замыкание: все целые из [-bound, bound], достижимые из 0 шагами ±g,
    не покидающими отрезок. Служит оракулом для cyclic_generator.
    """
    steps = {s for g in gens if g for s in (g, -g)}
    seen = {0}
    frontier = [0]
    while frontier:
        value = frontier.pop()
        for s in steps:
            nxt = value + s
            if -bound <= nxt <= bound and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def minimal_group_witness(x: CzElement, y: CzElement) -> CzElement:
    """Для σ_0-эквивалентных x, y возвращает идемпотент e с x·e = y·e."""
    if index(x) != index(y):
        raise DomainError('%s and %s are not related by the minimal group congruence' % (x, y))
    g = max(x.b, y.b)
    return CzElement(g, g)


def idempotent_chain(a: int, b: int, steps: int) -> List[CzElement]:
    """Цепочка идемпотентов (a + j(a - b), a + j(a - b)), j = 0..steps, склеиваемых парой (a,a) ~ (b,b)."""
    if a <= b:
        raise DomainError('chain needs a > b, got a=%d, b=%d' % (a, b))
    return [CzElement(a + j * (a - b), a + j * (a - b)) for j in range(steps + 1)]


class UnionFind:
    """Система непересекающихся множеств со сжатием путей и рангами."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        """Объединяет классы i и j; возвращает True, если классы были различны."""
        i, j = self.find(i), self.find(j)
        if i == j:
            return False
        if self.rank[i] < self.rank[j]:
            i, j = j, i
        self.parent[j] = i
        if self.rank[i] == self.rank[j]:
            self.rank[i] += 1
        return True


@lru_cache(maxsize=8)
def _window_tables(w: Window) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
    """
    Таблицы умножения, ограниченные окном: right[u][p] - номер p·u, left[u][p] - номер u·p,
    либо -1, если произведение выходит за окно.
    """
    elements = w.elements()
    position = {x: i for i, x in enumerate(elements)}
    right = tuple(tuple(position.get(multiply(p, u), -1) for p in elements) for u in elements)
    left = tuple(tuple(position.get(multiply(u, p), -1) for p in elements) for u in elements)
    return right, left


def saturate_window(gens: PairList, w: Window) -> List[List[CzElement]]:
    """
    Наименьшее отношение эквивалентности на окне, содержащее gens и замкнутое относительно
    умножения на элементы окна слева и справа, когда оба произведения остаются в окне.
    Возвращает разбиение окна на классы (каждый класс отсортирован, классы упорядочены по первому элементу).
    """
    elements = w.elements()
    position = {x: i for i, x in enumerate(elements)}
    for x, y in gens:
        if x not in w or y not in w:
            raise DomainError('generator pair (%s, %s) lies outside window %s' % (x, y, w))

    uf = UnionFind(len(elements))
    for x, y in gens:
        uf.union(position[x], position[y])

    right, left = _window_tables(w)
    changed = True
    while changed:
        changed = False
        for table in (right, left):
            for row in table:
                roots = [uf.find(p) for p in range(len(elements))]
                image: Dict[int, int] = {}
                for p, q in enumerate(row):
                    if q < 0:
                        continue
                    first = image.setdefault(roots[p], q)
                    if first != q and uf.union(first, q):
                        changed = True

    classes: Dict[int, List[CzElement]] = {}
    for i, x in enumerate(elements):
        classes.setdefault(uf.find(i), []).append(x)
    return sorted(classes.values(), key=lambda cls: cls[0])


def partition_of(spec: CongruenceSpec, elements: Sequence[CzElement]) -> List[List[CzElement]]:
    """Разбиение конечного множества элементов на классы конгруэнции spec."""
    classes: Dict[object, List[CzElement]] = {}
    for x in sorted(elements):
        if spec.is_identity:
            key = x
        else:
            key = quotient_map(spec.k, x)
        classes.setdefault(key, []).append(x)
    return sorted(classes.values(), key=lambda cls: cls[0])


def restrict_partition(partition: List[List[CzElement]], box: Window) -> List[List[CzElement]]:
    """Ограничение разбиения на подокно box (пустые классы отбрасываются)."""
    restricted = ([x for x in cls if x in box] for cls in partition)
    return sorted((cls for cls in restricted if cls), key=lambda cls: cls[0])
