import random

import pytest
from hypothesis import given, strategies as st

from czx.certificates import Certificate, Status
from czx.core import CzElement, Side, Window, multiply
from czx.exceptions import CzOverflowError, DomainError, ParameterError
from czx.models import E1, IdealGroup, ModelSpec, UnitGroup
from czx.topology import (
    BasicNbhd, InclusionLaw, _LawCheck, boundary_certificate, boundary_sets, check_law, check_unit_periodicity,
    discreteness_witness, dl_set, dl_set_closed_form, nbhd_contains, nbhd_extent_agrees, nbhd_members,
    random_candidate_nbhd, singleton_identity, unit_nbhd_index_profile, upset,
)

TAIL = 20


def test_ideal_neighbourhood(s3):
    nb = BasicNbhd(s3, IdealGroup(2), 1)
    assert str(nb) == 'U_1(z:2)'
    assert nbhd_contains(nb, IdealGroup(2))
    assert nbhd_contains(nb, CzElement(1, 3))
    assert not nbhd_contains(nb, CzElement(0, 2))
    assert not nbhd_contains(nb, CzElement(1, 4))
    assert not nbhd_contains(nb, IdealGroup(3))
    assert BasicNbhd(s3, IdealGroup(-2), 1).member(1) == CzElement(3, 1)


def test_unit_neighbourhood(s2):
    nb = BasicNbhd(s2, UnitGroup(1), 1)
    assert nb.member(1) == CzElement(-2, 4)
    assert nbhd_contains(nb, CzElement(-4, 2))
    assert not nbhd_contains(nb, CzElement(-3, 3))
    assert unit_nbhd_index_profile(s2, nb) == -6


def test_adjoined_unit_neighbourhood(s1):
    nb = BasicNbhd(s1, E1, 2)
    assert nbhd_members(nb, 2) == [E1, CzElement(-2, -2), CzElement(-3, -3), CzElement(-4, -4)]
    assert not nbhd_contains(nb, CzElement(-1, -1))
    assert unit_nbhd_index_profile(s1, nb) == 0


def test_neighbourhood_validation(s3, cz):
    with pytest.raises(DomainError):
        BasicNbhd(s3, IdealGroup(0), 0)
    with pytest.raises(DomainError):
        BasicNbhd(s3, CzElement(0, 0), 1)
    with pytest.raises(DomainError):
        BasicNbhd(cz, E1, 1)


@pytest.mark.parametrize('center', [IdealGroup(-2), IdealGroup(0), IdealGroup(3), UnitGroup(-1), UnitGroup(2)])
def test_extent_agrees(s5, center):
    for idx in (1, 2, 3):
        assert nbhd_extent_agrees(BasicNbhd(s5, center, idx), Window(-8, 8))


@pytest.mark.parametrize('model, law', [
    (ModelSpec(ModelSpec.Model_S1), InclusionLaw('L1', (2,))),
    (ModelSpec(ModelSpec.Model_S4, m1=-2, step=2), InclusionLaw('L1', (1,))),
    (ModelSpec(ModelSpec.Model_S2, k=6, n_div=2), InclusionLaw('L2', (1, -1, 5))),
    (ModelSpec(ModelSpec.Model_S2, k=6, n_div=3), InclusionLaw('L2', (-2, 2, 5))),
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L3', (2, 1, -2))),
    (ModelSpec(ModelSpec.Model_S5, k=6, n_div=2), InclusionLaw('L3', (3, 3, -3))),
    (ModelSpec(ModelSpec.Model_S4), InclusionLaw('L4', (1, 3, -2))),
    (ModelSpec(ModelSpec.Model_S5, k=6, n_div=2), InclusionLaw('L5', (6, 1, 0))),
    (ModelSpec(ModelSpec.Model_S5, k=6, n_div=2), InclusionLaw('L5', (4, 0, -4))),
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L6', (2, 3))),
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L6', (2, -2))),
    (ModelSpec(ModelSpec.Model_S2, k=3, n_div=1), InclusionLaw('L7', (1,))),
    (ModelSpec(ModelSpec.Model_S5, k=2, n_div=1), InclusionLaw('L7', (3,))),
], ids=str)
def test_laws_hold(model, law):
    cert = check_law(law, model, TAIL)
    assert cert.status is Status.PASS, cert.counterexamples
    assert cert.checked > 0


@pytest.mark.parametrize('model, law', [
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L1', (1,))),
    (ModelSpec(ModelSpec.Model_S2, k=6, n_div=2), InclusionLaw('L2', (2, 0, 5))),
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L3', (1, 2, 0))),
    (ModelSpec(ModelSpec.Model_S5, k=6, n_div=2), InclusionLaw('L5', (5, 1, 0))),
    (ModelSpec(ModelSpec.Model_S3), InclusionLaw('L6', (0, 1))),
    (ModelSpec(ModelSpec.Model_S2, k=6, n_div=2), InclusionLaw('L7', (1,))),
], ids=str)
def test_law_side_conditions(model, law):
    with pytest.raises(ParameterError):
        check_law(law, model, TAIL)


def test_law_arity():
    with pytest.raises(ParameterError):
        InclusionLaw('L9', (1,))
    with pytest.raises(ParameterError):
        InclusionLaw('L1', (1, 2))


def test_unit_periodicity(s2):
    cert = check_unit_periodicity(s2, 1, 20, 1)
    assert cert.status is Status.PASS
    assert cert.checked == 20
    with pytest.raises(ParameterError):
        check_unit_periodicity(s2, 0, 20, 1)


def test_dl_sets():
    w = Window(-3, 3)
    assert dl_set(2, 0, w) == dl_set_closed_form(2, 0, w)
    assert CzElement(2, 0) in dl_set(2, 0, w)
    assert singleton_identity(0, 0, w) is Status.PASS
    assert singleton_identity(1, -2, w) is Status.PASS
    assert singleton_identity(-3, 0, w) is Status.INCONCLUSIVE
    with pytest.raises(DomainError):
        singleton_identity(5, 0, w)


def test_discreteness_witness():
    witness = discreteness_witness(0, {CzElement(0, 0), CzElement(-2, -1)})
    assert witness.offender == CzElement(-2, -1)
    assert witness.escape == CzElement(0, 1) == multiply(CzElement(0, 0), CzElement(-2, -1))
    assert witness.side is Side.left
    witness = discreteness_witness(0, {CzElement(0, 0), CzElement(-1, -3)})
    assert witness.escape == CzElement(2, 0) == multiply(CzElement(-1, -3), CzElement(0, 0))
    assert witness.side is Side.right
    assert discreteness_witness(0, {CzElement(0, 0), CzElement(-1, -1)}) is None
    with pytest.raises(DomainError):
        discreteness_witness(0, {CzElement(1, 1)})


@given(st.integers(0, 10 ** 6), st.integers(-10, 10))
def test_random_neighbourhood_has_witness(seed, a):
    v = random_candidate_nbhd(random.Random(seed), a)
    witness = discreteness_witness(a, v)
    assert witness is not None
    assert witness.escape not in v


def test_upset(s2):
    up = upset(s2, 0, 6, Window(-6, 6), 1)
    assert UnitGroup(1) in up.members
    assert up.alternates_agree


def test_boundary_sets(s5):
    sets = boundary_sets(s5, Window(-2, 2), 1)
    assert sets.left == [UnitGroup(-1), UnitGroup(0), UnitGroup(1)]
    assert sets.left == sets.right
    assert sets.ideal == [IdealGroup(-1), IdealGroup(0), IdealGroup(1)]


@pytest.mark.parametrize('model', [
    ModelSpec(),
    ModelSpec(ModelSpec.Model_S1),
    ModelSpec(ModelSpec.Model_S2, k=6, n_div=2),
    ModelSpec(ModelSpec.Model_S3),
    ModelSpec(ModelSpec.Model_S4),
    ModelSpec(ModelSpec.Model_S5, k=6, n_div=3),
], ids=str)
def test_boundary_certificate(model):
    cert = boundary_certificate(model, Window(-2, 2), 1)
    assert cert.status is Status.PASS, cert.counterexamples


@pytest.fixture
def doubling_s1():
    return ModelSpec(ModelSpec.Model_S1, seq=(-1, -2, -4, -8), step=4)


def test_adjoined_unit_neighbourhood_with_sequence_prefix(doubling_s1):
    nb = BasicNbhd(doubling_s1, E1, 3)
    assert nbhd_members(nb, 2) == [E1, CzElement(-4, -4), CzElement(-8, -8), CzElement(-12, -12)]
    assert nbhd_contains(nb, CzElement(-16, -16))
    assert not nbhd_contains(nb, CzElement(-2, -2))
    assert not nbhd_contains(nb, CzElement(-3, -3))
    assert not nbhd_contains(nb, CzElement(-10, -10))
    for idx in (1, 2, 3, 4, 5):
        assert nbhd_extent_agrees(BasicNbhd(doubling_s1, E1, idx), Window(-20, 4))


@pytest.mark.parametrize('model, law', [
    (ModelSpec(ModelSpec.Model_S1, seq=(-1, -2, -4, -8), step=4), InclusionLaw('L1', (1,))),
    (ModelSpec(ModelSpec.Model_S1, seq=(-1, -2, -4, -8), step=4), InclusionLaw('L1', (3,))),
    (ModelSpec(ModelSpec.Model_S4, seq=(-3, -5, -6), step=2), InclusionLaw('L1', (2,))),
    (ModelSpec(ModelSpec.Model_S4, seq=(-3, -5, -6), step=2), InclusionLaw('L4', (2, 1, -2))),
    (ModelSpec(ModelSpec.Model_S4, seq=(-3, -5, -6), step=2), InclusionLaw('L4', (1, 3, 2))),
], ids=str)
def test_laws_hold_for_sequence_prefix(model, law):
    cert = check_law(law, model, TAIL)
    assert cert.status is Status.PASS, cert.counterexamples


def test_law_counters(s1, s3):
    # 22 элемента окрестности: произведения 22², обратное включение, инверсия и 49 точек сдвига
    cert = check_law(InclusionLaw('L1', (2,)), s1, TAIL)
    assert cert.checked == 22 * 22 + 22 + 22 + 22 + 49 * 22 * 2
    cert = check_law(InclusionLaw('L6', (2, 3)), s3, TAIL)
    assert cert.checked == 22 + 22


def test_law_check_counterexample(s3):
    law = InclusionLaw('L3', (1, 2, 2))
    cert = Certificate(str(law))
    c = _LawCheck(law, s3, 4, cert)
    members = c.members(BasicNbhd(s3, IdealGroup(2), 2))
    c.include('left translation', [CzElement(-1, 1)], members, BasicNbhd(s3, IdealGroup(4), 1))
    assert cert.checked == 6
    assert cert.violations == 1
    assert cert.counterexamples == [{
        'check': 'L3(1, 2, 2) left translation',
        'model': 's3',
        'word': ['(-1,1)', '(2,4)'],
        'product': '(0,4)',
        'expected': 'U_1(z:4)',
    }]


def test_law_check_products_overflow(s3):
    c = _LawCheck(InclusionLaw('L6', (1, 0)), s3, 1, Certificate('L6'))
    assert c.products([CzElement(3, 1)], [IdealGroup(2), CzElement(0, 5)]) == {IdealGroup(0): 1, (3, 6): 1}
    with pytest.raises(CzOverflowError):
        c.products([CzElement(2 ** 62, 0)], [CzElement(2 ** 62, 0)])
