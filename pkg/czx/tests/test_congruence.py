import pytest
from hypothesis import given, strategies as st

from czx.congruence import (
    CongruenceSpec, UnionFind, additive_closure, congruence_from_pairs, cyclic_generator, idempotent_chain,
    minimal_group_witness, partition_of, quotient_add, quotient_map, related, restrict_partition, saturate_window,
)
from czx.core import CzElement, Window, index, multiply
from czx.exceptions import DomainError

coords = st.integers(min_value=-30, max_value=30)
elements = st.builds(CzElement, coords, coords)


def E(a, b):
    return CzElement(a, b)


@pytest.mark.parametrize('pairs, expected', [
    ([(E(1, 1), E(2, 2))], 'sigma k=0 quotient=Z'),
    ([(E(0, 0), E(0, 0))], 'identity'),
    ([(E(4, 0), E(1, 0)), (E(6, 0), E(0, 0))], 'sigma k=3 quotient=Z/3Z'),
    ([(E(1, 0), E(0, 0))], 'sigma k=1 quotient=trivial'),
    ([(E(5, 0), E(0, 0)), (E(0, 0), E(0, 0))], 'sigma k=5 quotient=Z/5Z'),
])
def test_congruence_from_pairs(pairs, expected):
    assert str(congruence_from_pairs(pairs)) == expected


def test_spec_validation():
    with pytest.raises(DomainError):
        CongruenceSpec.sigma(-1)
    with pytest.raises(DomainError):
        CongruenceSpec(CongruenceSpec.Kind_Identity, 2)
    with pytest.raises(DomainError):
        CongruenceSpec('rees')


def test_related():
    assert related(CongruenceSpec.sigma(3), E(4, 0), E(1, 0))
    assert not related(CongruenceSpec.sigma(3), E(4, 0), E(2, 0))
    assert related(CongruenceSpec.sigma(1), E(4, 0), E(-7, 9))
    assert not related(CongruenceSpec.identity(), E(1, 1), E(2, 2))


def test_quotient_map():
    assert quotient_map(5, E(1, 8)) == 3
    assert quotient_map(0, E(1, 8)) == -7
    assert quotient_add(5, 3, 4) == 2
    with pytest.raises(DomainError):
        quotient_map(-1, E(0, 0))


def test_cyclic_generator():
    assert cyclic_generator(4, 6) == 2
    assert cyclic_generator(0, 5) == 5
    assert cyclic_generator(-3, 9) == 3
    with pytest.raises(DomainError):
        cyclic_generator(3, 0)


def test_additive_closure():
    assert additive_closure({4, 6}, 20) == set(range(-20, 21, 2))
    assert additive_closure({0}, 5) == {0}


def test_minimal_group_witness():
    x, y = E(3, 1), E(5, 3)
    e = minimal_group_witness(x, y)
    assert e == E(3, 3)
    assert multiply(x, e) == multiply(y, e)
    with pytest.raises(DomainError):
        minimal_group_witness(E(1, 0), E(0, 0))


def test_idempotent_chain():
    assert idempotent_chain(1, 0, 3) == [E(1, 1), E(2, 2), E(3, 3), E(4, 4)]
    assert idempotent_chain(3, 1, 1) == [E(3, 3), E(5, 5)]
    with pytest.raises(DomainError):
        idempotent_chain(0, 1, 2)


def test_union_find():
    uf = UnionFind(4)
    assert uf.union(0, 1)
    assert not uf.union(1, 0)
    assert uf.union(2, 3)
    assert uf.find(0) == uf.find(1)
    assert uf.find(1) != uf.find(2)


def test_saturation_collapses_diagonal():
    w = Window(0, 6)
    partition = saturate_window([(E(2, 2), E(3, 3))], w)
    cls = next(c for c in partition if E(0, 0) in c)
    assert [x for x in cls if x.a == x.b] == [E(t, t) for t in range(7)]
    for c in partition:
        assert len({index(x) for x in c}) == 1


def test_saturation_universal_seed():
    partition = saturate_window([(E(1, 0), E(0, 0))], Window(-4, 4))
    cls = next(c for c in partition if E(0, 0) in c)
    assert {E(0, 0), E(1, 0), E(0, 1), E(1, 1)} <= set(cls)
    spec = congruence_from_pairs([(E(1, 0), E(0, 0))])
    for c in partition:
        assert all(related(spec, c[0], x) for x in c)


def test_saturation_complete_on_box():
    gens = [(E(1, 1), E(2, 2))]
    box = Window(-3, 3)
    partition = saturate_window(gens, Window(-6, 6))
    assert restrict_partition(partition, box) == partition_of(congruence_from_pairs(gens), box.elements())


def test_saturation_rejects_outside_generators():
    with pytest.raises(DomainError):
        saturate_window([(E(5, 0), E(0, 0))], Window(-2, 2))


def test_partition_of_identity():
    box = Window(0, 1)
    assert partition_of(CongruenceSpec.identity(), box.elements()) == [[x] for x in box.elements()]


@given(st.sampled_from([0, 1, 2, 3, 5, 12]), elements, elements)
def test_quotient_map_is_homomorphism(k, x, y):
    assert quotient_map(k, multiply(x, y)) == quotient_add(k, quotient_map(k, x), quotient_map(k, y))


@given(st.integers(0, 6), elements, elements, elements)
def test_sigma_is_congruence(k, x, y, u):
    spec = CongruenceSpec.sigma(k)
    if related(spec, x, y):
        assert related(spec, multiply(x, u), multiply(y, u))
        assert related(spec, multiply(u, x), multiply(u, y))
