"""
Проверочные наборы cz_verify.

Каждый набор - функция от SuiteConfig, возвращающая Certificate. Наборы, неприменимые к модели,
возвращают INCONCLUSIVE с пояснением и никогда не падают из-за неприменимости.
"""
import logging
import random
from collections import OrderedDict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from django.conf import settings

from . import congruence as cg
from .certificates import Certificate, Status
from .core import (
    CzElement, GreenOracle, GreenRelation, Side, Window,
    bicyclic_embed, bicyclic_multiply, green_related, idem_leq, idem_meet, in_principal_left_ideal,
    in_principal_right_ideal, index, inverse, is_idempotent, multiply,
)
from .exceptions import ParameterError
from .models import (
    E1, IdealGroup, ModelSpec, UnitGroup,
    associativity_report, ext_idem_leq, ext_inverse, ext_multiply, format_element, hom_to_ideal, identity,
    idempotents, model_elements, sort_key,
)
from .topology import (
    BasicNbhd, InclusionLaw, boundary_certificate, check_law, check_unit_periodicity, discreteness_witness,
    dl_set, dl_set_closed_form, nbhd_extent_agrees, nbhd_members, random_candidate_nbhd, singleton_identity,
    unit_nbhd_index_profile,
)

logger = logging.getLogger(__name__)

QUOTIENT_MODULI = (0, 1, 2, 3, 5, 12)
CLOSURE_BOUND = 60


@dataclass(frozen=True)
class SuiteConfig:
    model: ModelSpec
    window: Window
    group_bound: int = 3
    tail_bound: int = 200
    suites: Tuple[str, ...] = ()
    seed: int = 0
    max_counterexamples: int = field(default=5, compare=False)

    def certificate(self, name: str) -> Certificate:
        return Certificate(name, max_counterexamples=self.max_counterexamples)

    @property
    def elements(self) -> list:
        return model_elements(self.model, self.window, self.group_bound)


def _fmt(m: ModelSpec, *xs) -> List[str]:
    return [format_element(m, x) for x in xs]


# ----------------------------------------------------------------------------

def suite_assoc(cfg: SuiteConfig) -> Certificate:
    return associativity_report(cfg.model, cfg.window, cfg.group_bound, cfg.max_counterexamples)


def suite_inverse(cfg: SuiteConfig) -> Certificate:
    m = cfg.model
    cert = cfg.certificate('inverse')
    elements = cfg.elements

    for x in elements:
        xi = ext_inverse(m, x)
        for check, word, expected in (('x*x^-1*x = x', (x, xi, x), x), ('x^-1*x*x^-1 = x^-1', (xi, x, xi), xi)):
            got = ext_multiply(m, ext_multiply(m, word[0], word[1]), word[2])
            cert.check(got == expected, lambda check=check, word=word, got=got, expected=expected: {
                'check': check, 'model': str(m), 'word': _fmt(m, *word),
                'left': format_element(m, got), 'right': format_element(m, expected),
            })

    for x in elements:
        for y in elements:
            lhs = ext_inverse(m, ext_multiply(m, x, y))
            rhs = ext_multiply(m, ext_inverse(m, y), ext_inverse(m, x))
            cert.check(lhs == rhs, lambda x=x, y=y, lhs=lhs, rhs=rhs: {
                'check': '(xy)^-1 = y^-1*x^-1', 'model': str(m), 'word': _fmt(m, x, y),
                'left': format_element(m, lhs), 'right': format_element(m, rhs),
            })

    idems = [x for x in elements if ext_multiply(m, x, x) == x]
    for e in idems:
        for f in idems:
            ef, fe = ext_multiply(m, e, f), ext_multiply(m, f, e)
            cert.check(ef == fe, lambda e=e, f=f, ef=ef, fe=fe: {
                'check': 'idempotents commute', 'model': str(m), 'word': _fmt(m, e, f),
                'left': format_element(m, ef), 'right': format_element(m, fe),
            })
            if isinstance(e, CzElement) and isinstance(f, CzElement):
                cert.check(ef == idem_meet(e, f), lambda e=e, f=f, ef=ef: {
                    'check': 'e*f = meet(e, f)', 'model': str(m), 'word': _fmt(m, e, f),
                    'left': str(ef), 'right': str(idem_meet(e, f)),
                })

    # максимальные подгруппы 𝒞_ℤ тривиальны
    window = cfg.window.elements()
    for e in (x for x in window if is_idempotent(x)):
        group = [x for x in window if multiply(x, inverse(x)) == e and multiply(inverse(x), x) == e]
        cert.check(group == [e], lambda e=e, group=group: {
            'check': 'maximal subgroup is trivial', 'model': str(m), 'word': [str(e)],
            'left': [str(x) for x in group], 'right': [str(e)],
        })
    return cert


def suite_green(cfg: SuiteConfig) -> Certificate:
    """Отношения Грина на 𝒞_ℤ против переборного оракула, главные идеалы и вложение углов."""
    cert = cfg.certificate('green')
    w = cfg.window
    search = w.enlarged(settings.CZX_GREEN_SEARCH_MARGIN)
    oracle = GreenOracle(w, search)
    elements = w.elements()

    for x in elements:
        for y in elements:
            for rel in GreenRelation:
                expected, got = green_related(x, y, rel), oracle.related(x, y, rel)
                cert.check(expected == got, lambda x=x, y=y, rel=rel, expected=expected, got=got: {
                    'check': 'green %s' % rel.value, 'model': 'cz', 'word': [str(x), str(y)],
                    'left': expected, 'right': got,
                })
            for check, expected, got in (
                ('right ideal', in_principal_right_ideal(y, x), oracle.in_right_ideal(y, x)),
                ('left ideal', in_principal_left_ideal(y, x), oracle.in_left_ideal(y, x)),
            ):
                cert.check(expected == got, lambda x=x, y=y, check=check, expected=expected, got=got: {
                    'check': check, 'model': 'cz', 'word': [str(x), str(y)], 'left': expected, 'right': got,
                })

    for n in w.values():
        corner = [x for x in elements if x.a >= n and x.b >= n]
        images = {x: bicyclic_embed(n, x) for x in corner}
        cert.check(len(set(images.values())) == len(corner), lambda n=n: {
            'check': 'corner embedding is injective', 'model': 'cz', 'word': [str(n)],
        })
        for x in corner:
            for y in corner:
                lhs = bicyclic_embed(n, multiply(x, y))
                rhs = bicyclic_multiply(images[x], images[y])
                cert.check(lhs == rhs, lambda n=n, x=x, y=y, lhs=lhs, rhs=rhs: {
                    'check': 'corner embedding is a homomorphism', 'model': 'cz', 'word': [str(x), str(y)],
                    'left': list(lhs), 'right': list(rhs), 'corner': n,
                })

    if cfg.model.model != ModelSpec.Model_PlainCz:
        cert.note('checked on the extended bicyclic part of %s' % cfg.model)
    return cert


def _random_pair_lists(rng: random.Random, box: Window, count: int) -> List[List[cg.Pair]]:
    values = list(box.values())

    def element():
        return CzElement(rng.choice(values), rng.choice(values))

    return [[(element(), element()) for _ in range(rng.choice((1, 2)))] for _ in range(count)]


def all_pair_lists(box: Window) -> Iterator[List[cg.Pair]]:
    """Все списки из одной или двух различных пар с элементами из box."""
    pairs = [(x, y) for x in box.elements() for y in box.elements()]
    for pair in pairs:
        yield [pair]
    for first, second in combinations(pairs, 2):
        yield [first, second]


def _check_saturation(cert: Certificate, gens: Sequence[cg.Pair], big: Window, box: Window) -> int:
    """Сверяет congruence_from_pairs с насыщением; возвращает число неподтверждённых окном пар."""
    spec = cg.congruence_from_pairs(gens)
    partition = cg.saturate_window(gens, big)
    word = ['(%s,%s)' % pair for pair in gens]

    for cls in partition:
        rep = cls[0]
        for x in cls[1:]:
            cert.check(cg.related(spec, rep, x), lambda rep=rep, x=x: {
                'check': 'saturation is sound', 'model': 'cz', 'word': word,
                'left': str(spec), 'right': [str(rep), str(x)],
            })

    # полнота на подокне: оракул может не дотянуться до всех пар, это не ошибка
    expected = cg.partition_of(spec, box.elements())
    got = cg.restrict_partition(partition, box)
    if expected == got:
        cert.check(True)
        return 0
    position = {x: i for i, cls in enumerate(got) for x in cls}
    return sum(1 for cls in expected for x in cls for y in cls if x < y and position[x] != position[y])


def suite_congruence(cfg: SuiteConfig) -> Certificate:
    cert = cfg.certificate('congruence')
    w = cfg.window
    elements = w.elements()

    for k in QUOTIENT_MODULI:
        for x in elements:
            for y in elements:
                lhs = cg.quotient_map(k, multiply(x, y))
                rhs = cg.quotient_add(k, cg.quotient_map(k, x), cg.quotient_map(k, y))
                cert.check(lhs == rhs, lambda k=k, x=x, y=y, lhs=lhs, rhs=rhs: {
                    'check': 'quotient map is a homomorphism', 'model': 'cz', 'word': [str(x), str(y)],
                    'left': lhs, 'right': rhs, 'k': k,
                })

    points = Window(-settings.CZX_CONGRUENCE_CHECK_WINDOW, settings.CZX_CONGRUENCE_CHECK_WINDOW).elements()
    specs = [cg.CongruenceSpec.identity()] + [cg.CongruenceSpec.sigma(k) for k in QUOTIENT_MODULI]
    for spec in specs:
        for x in points:
            for y in points:
                if not cg.related(spec, x, y):
                    continue
                for u in points:
                    ok = cg.related(spec, multiply(x, u), multiply(y, u)) and \
                        cg.related(spec, multiply(u, x), multiply(u, y))
                    cert.check(ok, lambda spec=spec, x=x, y=y, u=u: {
                        'check': 'compatible with multiplication', 'model': 'cz',
                        'word': [str(x), str(y), str(u)], 'left': str(spec),
                    })

    sigma0 = cg.CongruenceSpec.sigma(0)
    for x in points:
        for y in points:
            if cg.related(sigma0, x, y):
                e = cg.minimal_group_witness(x, y)
                cert.check(multiply(x, e) == multiply(y, e), lambda x=x, y=y, e=e: {
                    'check': 'minimal group witness', 'model': 'cz', 'word': [str(x), str(y), str(e)],
                })

    big = Window(-settings.CZX_CONGRUENCE_WINDOW, settings.CZX_CONGRUENCE_WINDOW)
    box = Window(-settings.CZX_CONGRUENCE_BOX, settings.CZX_CONGRUENCE_BOX)
    fixed = [
        [(CzElement(0, 0), CzElement(0, 0))],
        [(CzElement(1, 1), CzElement(2, 2))],
        [(CzElement(1, 0), CzElement(0, 0))],
        [(CzElement(4, 0), CzElement(1, 0)), (CzElement(6, 0), CzElement(0, 0))],
    ]
    if settings.CZX_CONGRUENCE_EXHAUSTIVE:
        generator_lists = all_pair_lists(box)
        cert.note('every list of at most two generator pairs from %s is saturated' % box)
    else:
        generator_lists = fixed + _random_pair_lists(random.Random(cfg.seed), box, settings.CZX_CONGRUENCE_SAMPLES)
    unwitnessed = 0
    for gens in generator_lists:
        if any(x not in big or y not in big for x, y in gens):
            cert.skip('generator lists outside the saturation window are skipped')
            continue
        unwitnessed += _check_saturation(cert, gens, big, box)
    if unwitnessed:
        cert.mark_inconclusive('saturation on %s did not witness %d related pairs of %s' % (big, unwitnessed, box))

    chain_window = Window(-6, 6)
    for a, b in ((1, 0), (2, 0), (3, 1)):
        partition = cg.saturate_window([(CzElement(a, a), CzElement(b, b))], chain_window)
        position = {x: i for i, cls in enumerate(partition) for x in cls}
        chain = [e for e in cg.idempotent_chain(a, b, chain_window.hi) if e in chain_window]
        for e, f in zip(chain, chain[1:]):
            cert.check(position[e] == position[f], lambda e=e, f=f: {
                'check': 'idempotent chain', 'model': 'cz', 'word': [str(e), str(f)],
            })

    for n in range(-6, 7):
        for k in range(1, 9):
            g = cg.cyclic_generator(n, k)
            closure = cg.additive_closure((n, k), CLOSURE_BOUND)
            ok = k % g == 0 and n % g == 0 and \
                all(v % g == 0 for v in closure) and \
                all(v in closure for v in range(-CLOSURE_BOUND // 2, CLOSURE_BOUND // 2 + 1) if v % g == 0)
            cert.check(ok, lambda n=n, k=k, g=g: {
                'check': 'cyclic generator', 'model': 'cz', 'word': [str(n), str(k)], 'left': g,
            })
    return cert


def law_grid(m: ModelSpec) -> List[InclusionLaw]:
    """Сетка параметров законов, применимых к модели."""
    laws = []
    if m.has_adjoined_unit:
        laws += [InclusionLaw('L1', (n,)) for n in (1, 2, 5)]
    if m.has_unit_group:
        laws += [InclusionLaw('L2', (i1, i2, j)) for i1 in range(-2, 3) for i2 in range(-2, 3) for j in (5, 8)]
        laws += [InclusionLaw('L7', (j,)) for j in (1, 3)]
    if m.has_ideal:
        for k1 in range(-3, 4):
            for k2 in range(-3, 4):
                base = max(abs(k1), abs(k2), 1)
                laws += [InclusionLaw('L3', (base * f, k1, k2)) for f in (1, 2)]
        laws += [InclusionLaw('L6', (i, k)) for i in (1, 2, 4) for k in range(-3, 4)]
    if m.has_adjoined_unit and m.has_ideal:
        laws += [InclusionLaw('L4', (n1, n0, k0)) for n1 in (1, 3) for n0 in (1, 3) for k0 in range(-2, 3)]
    if m.has_unit_group and m.has_ideal:
        for i in range(-1, 2):
            for n in range(-2, 3):
                base = max(abs(m.k * i), abs(n), 1)
                laws += [InclusionLaw('L5', (base * f, i, n)) for f in (1, 2)]
    return laws


def suite_laws(cfg: SuiteConfig) -> Certificate:
    m = cfg.model
    cert = cfg.certificate('laws')
    if m.model == ModelSpec.Model_PlainCz:
        cert.mark_inconclusive('every point of the extended bicyclic semigroup is isolated: no laws to check')
        return cert

    for law in law_grid(m):
        try:
            cert.merge(check_law(law, m, cfg.tail_bound, cfg.max_counterexamples))
        except ParameterError as e:
            cert.skip('%s instances outside their parameter conditions are skipped' % law.law_id)
            logger.debug('skipped %s in %s: %s', law, m, e)

    centers = []
    if m.has_adjoined_unit:
        centers.append(E1)
    if m.has_unit_group:
        centers += [UnitGroup(i) for i in range(-cfg.group_bound, cfg.group_bound + 1)]
    if m.has_ideal:
        centers += [IdealGroup(n) for n in range(-cfg.group_bound, cfg.group_bound + 1)]
    for center in centers:
        for idx in (1, 2, 3):
            nb = BasicNbhd(m, center, idx)
            cert.check(nbhd_extent_agrees(nb, cfg.window), lambda nb=nb: {
                'check': 'closed-form membership matches enumeration', 'model': str(m), 'word': [str(nb)],
            })

    profiles = {}
    for center in (c for c in centers if not isinstance(c, IdealGroup)):
        nb = BasicNbhd(m, center, 1)
        profile = unit_nbhd_index_profile(m, nb)
        profiles.setdefault(profile, []).append(format_element(m, center))
        for x in nbhd_members(nb, 10)[1:]:
            cert.check(index(x) == profile, lambda nb=nb, x=x, profile=profile: {
                'check': 'unit neighbourhood index profile', 'model': str(m), 'word': [str(nb), str(x)],
                'left': profile, 'right': index(x),
            })
    for profile, owners in profiles.items():
        # e1 и единица группы единиц не встречаются в одной модели
        cert.check(len(owners) == 1, lambda profile=profile, owners=owners: {
            'check': 'unit profiles are distinct', 'model': str(m), 'word': owners, 'left': profile,
        })

    if m.has_unit_group:
        for i in range(-cfg.group_bound, cfg.group_bound + 1):
            if i:
                for j in (1, 3):
                    cert.merge(check_unit_periodicity(m, i, 50, j, cfg.max_counterexamples))
    return cert


def suite_discreteness(cfg: SuiteConfig) -> Certificate:
    cert = cfg.certificate('discreteness')
    w = cfg.window
    outer = w.enlarged(max(abs(w.lo), abs(w.hi), 1))

    for x in w.elements():
        got, expected = dl_set(x.a, x.b, outer), dl_set_closed_form(x.a, x.b, outer)
        cert.check(got == expected, lambda x=x: {
            'check': 'DL-set closed form', 'model': 'cz', 'word': [str(x)],
        })
        status = singleton_identity(x.a, x.b, outer)
        if status is Status.INCONCLUSIVE:
            cert.mark_inconclusive('window %s cannot witness every singleton identity' % outer)
        else:
            cert.check(status is Status.PASS, lambda x=x: {
                'check': 'singleton identity', 'model': 'cz', 'word': [str(x)],
            })

    rng = random.Random(cfg.seed)
    for _ in range(settings.CZX_RANDOM_NEIGHBOURHOODS):
        a = rng.randint(w.lo, w.hi)
        v = random_candidate_nbhd(rng, a)
        witness = discreteness_witness(a, v)
        cert.check(_valid_witness(a, v, witness), lambda a=a, v=v, witness=witness: {
            'check': 'discreteness witness', 'model': 'cz', 'word': [str(x) for x in sorted(v)],
            'left': a, 'right': None if witness is None else [str(witness.offender), str(witness.escape)],
        })
    return cert


def _valid_witness(a: int, v: set, witness) -> bool:
    if witness is None:
        return False
    x, escape, side = witness
    e = CzElement(a, a)
    if x not in v or is_idempotent(x) or max(x.a, x.b) > a or escape in v:
        return False
    if side is Side.left:
        return escape == multiply(e, x) and all(y.b != escape.b for y in v if y.a == a)
    return escape == multiply(x, e) and all(y.a != escape.a for y in v if y.b == a)


def suite_boundary(cfg: SuiteConfig) -> Certificate:
    return boundary_certificate(cfg.model, cfg.window, cfg.group_bound, cfg.max_counterexamples)


def suite_idempotents(cfg: SuiteConfig) -> Certificate:
    """Идемпотенты модели образуют цепь с ē внизу и единицей наверху."""
    m = cfg.model
    cert = cfg.certificate('idempotents')
    idems = sorted(idempotents(m, cfg.window, cfg.group_bound), key=sort_key)
    allowed = {E1, UnitGroup(0), IdealGroup(0)}

    for e in idems:
        ok = is_idempotent(e) if isinstance(e, CzElement) else e in allowed
        cert.check(ok, lambda e=e: {'check': 'idempotent inventory', 'model': str(m), 'word': _fmt(m, e)})
    required = [IdealGroup(0)] if m.has_ideal else []
    if identity(m) is not None:
        required.append(identity(m))
    for e in required:
        cert.check(e in idems, lambda e=e: {
            'check': 'idempotent is present', 'model': str(m), 'word': _fmt(m, e),
        })
    diagonal = [x for x in cfg.window.elements() if is_idempotent(x)]
    cert.check([e for e in idems if isinstance(e, CzElement)] == diagonal, lambda: {
        'check': 'idempotent inventory', 'model': str(m), 'word': _fmt(m, *idems),
    })

    for e in idems:
        for f in idems:
            leq, geq = ext_idem_leq(m, e, f), ext_idem_leq(m, f, e)
            cert.check(leq or geq, lambda e=e, f=f: {
                'check': 'idempotents are comparable', 'model': str(m), 'word': _fmt(m, e, f),
            })
            cert.check(not (leq and geq) or e == f, lambda e=e, f=f: {
                'check': 'order is antisymmetric', 'model': str(m), 'word': _fmt(m, e, f),
            })
            if isinstance(e, CzElement) and isinstance(f, CzElement):
                cert.check(leq == idem_leq(e, f), lambda e=e, f=f: {
                    'check': 'order agrees with (Z, max)', 'model': str(m), 'word': _fmt(m, e, f),
                })

    bottom, top = IdealGroup(0), identity(m)
    for e in idems:
        if m.has_ideal:
            cert.check(ext_idem_leq(m, bottom, e), lambda e=e: {
                'check': 'z:0 is the least idempotent', 'model': str(m), 'word': _fmt(m, e),
            })
        if top is not None:
            cert.check(ext_idem_leq(m, e, top), lambda e=e: {
                'check': 'identity is the greatest idempotent', 'model': str(m), 'word': _fmt(m, e, top),
            })
    return cert


def suite_structure(cfg: SuiteConfig) -> Certificate:
    """Поглощение идеалом, центральность ē, гомоморфизм на G0 и действие группы единиц."""
    m = cfg.model
    cert = cfg.certificate('structure')
    elements = cfg.elements
    cz = cfg.window.elements()

    if m.has_ideal:
        bar_e = IdealGroup(0)
        ideal = [x for x in elements if isinstance(x, IdealGroup)]
        for x in elements:
            for i in ideal:
                for word in ((x, i), (i, x)):
                    p = ext_multiply(m, *word)
                    cert.check(isinstance(p, IdealGroup), lambda word=word, p=p: {
                        'check': 'ideal absorbs', 'model': str(m), 'word': _fmt(m, *word),
                        'product': format_element(m, p),
                    })
            lhs, rhs = ext_multiply(m, x, bar_e), ext_multiply(m, bar_e, x)
            cert.check(lhs == rhs, lambda x=x, lhs=lhs, rhs=rhs: {
                'check': 'z:0 is central', 'model': str(m), 'word': _fmt(m, x),
                'left': format_element(m, lhs), 'right': format_element(m, rhs),
            })
        for x in elements:
            for y in elements:
                lhs = hom_to_ideal(m, ext_multiply(m, x, y))
                rhs = ext_multiply(m, hom_to_ideal(m, x), hom_to_ideal(m, y))
                cert.check(lhs == rhs, lambda x=x, y=y, lhs=lhs, rhs=rhs: {
                    'check': 'hom to the ideal is a homomorphism', 'model': str(m), 'word': _fmt(m, x, y),
                    'left': format_element(m, lhs), 'right': format_element(m, rhs),
                })
        sigma0 = cg.CongruenceSpec.sigma(0)
        for x in cz:
            cert.check(hom_to_ideal(m, x) == IdealGroup(-index(x)), lambda x=x: {
                'check': 'h = -index on the extended bicyclic part', 'model': str(m), 'word': [str(x)],
            })
            for y in cz:
                same = hom_to_ideal(m, x) == hom_to_ideal(m, y)
                cert.check(same == cg.related(sigma0, x, y), lambda x=x, y=y: {
                    'check': 'kernel of h is the minimal group congruence', 'model': str(m),
                    'word': [str(x), str(y)],
                })

    if m.has_unit_group:
        units = [x for x in elements if isinstance(x, UnitGroup)]
        for u in units:
            for x in cz:
                for word in ((u, x), (x, u)):
                    p = ext_multiply(m, *word)
                    cert.check(isinstance(p, CzElement), lambda word=word, p=p: {
                        'check': 'units act on the extended bicyclic part', 'model': str(m),
                        'word': _fmt(m, *word), 'product': format_element(m, p),
                    })
            for v in units:
                p = ext_multiply(m, u, v)
                cert.check(p == UnitGroup(u.i + v.i), lambda u=u, v=v, p=p: {
                    'check': 'units form a group', 'model': str(m), 'word': _fmt(m, u, v),
                    'product': format_element(m, p),
                })
            p = ext_multiply(m, u, ext_inverse(m, u))
            cert.check(p == UnitGroup(0), lambda u=u, p=p: {
                'check': 'unit inverse', 'model': str(m), 'word': _fmt(m, u), 'product': format_element(m, p),
            })

    if m.has_adjoined_unit:
        for x in elements:
            cert.check(ext_multiply(m, E1, x) == x == ext_multiply(m, x, E1), lambda x=x: {
                'check': 'e1 is the identity', 'model': str(m), 'word': _fmt(m, x),
            })

    if not cert.checked:
        cert.mark_inconclusive('model %s has no adjoined sorts' % m)
    return cert


SUITES: Dict[str, Callable[[SuiteConfig], Certificate]] = OrderedDict([
    ('assoc', suite_assoc),
    ('inverse', suite_inverse),
    ('green', suite_green),
    ('congruence', suite_congruence),
    ('laws', suite_laws),
    ('discreteness', suite_discreteness),
    ('boundary', suite_boundary),
    ('idempotents', suite_idempotents),
    ('structure', suite_structure),
])
SUITE_NAMES = tuple(SUITES)


def run_suites(cfg: SuiteConfig) -> List[Certificate]:
    """Последовательно запускает выбранные наборы (по умолчанию все)."""
    ret = []
    for name in cfg.suites or SUITE_NAMES:
        logger.info('suite %s started for %s on window %s', name, cfg.model, cfg.window)
        cert = SUITES[name](cfg)
        cert.name = name
        logger.info('suite %s: %s, %d checked, %d violations', name, cert.status.value, cert.checked, cert.violations)
        for counterexample in cert.counterexamples:
            logger.warning('suite %s counterexample: %s', name, counterexample)
        ret.append(cert)
    return ret


def overall_status(certificates: Sequence[Certificate]) -> Status:
    statuses = {cert.status for cert in certificates}
    if Status.FAIL in statuses:
        return Status.FAIL
    if Status.INCONCLUSIVE in statuses:
        return Status.INCONCLUSIVE
    return Status.PASS
