import random

import pytest

from toric.errors import GroupDoesNotPreserveFan, InvalidInput, NotFinite
from toric.lattice_fan import blow_up, del_pezzo6, hirzebruch, projective_plane, square
from toric.symmetry import (
    ConjugacyLabel,
    acts_freely_on_rays,
    classify_subgroup,
    compute_aut,
    cone_orbits,
    eigenlattice_index,
    enumerate_subgroups,
    find_conjugator,
    group_from_dict,
    group_from_generators,
    reduce_group,
    rotation_subgroup,
    table_representative,
    trivial_group,
)
from toric.unimodular import UnimodularMatrix

from oracles import brute_conjugator, random_unimodular
from samples import A, C, C_PRIME


@pytest.mark.parametrize('fan, order', [
    (projective_plane(), 6),
    (square(), 8),
    (del_pezzo6(), 12),
    (hirzebruch(2), 2),
    (hirzebruch(3), 2),
    (hirzebruch(5), 2),
])
def test_aut_orders(fan, order):
    group = compute_aut(fan)
    assert group.order == order
    assert group.preserves(fan)


@pytest.mark.parametrize('fan, label', [
    (projective_plane(), ConjugacyLabel.D6),
    (square(), ConjugacyLabel.D8),
    (del_pezzo6(), ConjugacyLabel.D12),
    (hirzebruch(2), ConjugacyLabel.D2_PRIME),
    (hirzebruch(4), ConjugacyLabel.D2_PRIME),
    (hirzebruch(3), ConjugacyLabel.D2),
])
def test_aut_labels(fan, label):
    assert classify_subgroup(compute_aut(fan)) == label


def test_hirzebruch_automorphism_matrix():
    a = 3
    group = compute_aut(hirzebruch(a))
    assert UnimodularMatrix(-1, 0, a, 1) in group


@pytest.mark.parametrize('label', list(ConjugacyLabel))
def test_table_representatives_classify_to_themselves(label):
    assert classify_subgroup(table_representative(label)) == label


def test_table_orders():
    orders = {label: table_representative(label).order for label in ConjugacyLabel}
    assert orders[ConjugacyLabel.C1] == 1
    assert orders[ConjugacyLabel.C6] == 6
    assert orders[ConjugacyLabel.D8] == 8
    assert orders[ConjugacyLabel.D12] == 12
    assert orders[ConjugacyLabel.D6] == orders[ConjugacyLabel.D6_PRIME] == 6


def test_eigenlattice_index():
    assert eigenlattice_index(UnimodularMatrix.from_list(C)) == 2
    assert eigenlattice_index(UnimodularMatrix.from_list(C_PRIME)) == 1


@pytest.mark.parametrize('fan, count', [
    (projective_plane(), 6),
    (square(), 10),
    (del_pezzo6(), 16),
])
def test_subgroup_counts(fan, count):
    subgroups = enumerate_subgroups(compute_aut(fan))
    assert len(subgroups) == count
    assert len({s.elements for s in subgroups}) == count


@pytest.mark.parametrize('fan', [projective_plane(), square(), del_pezzo6()])
def test_labels_stable_under_conjugation(fan):
    rng = random.Random(11)
    for subgroup in enumerate_subgroups(compute_aut(fan)):
        label = classify_subgroup(subgroup)
        for _ in range(100):
            x = random_unimodular(rng)
            assert classify_subgroup(subgroup.conjugate(x)) == label


def test_subgroup_labels_of_dp6():
    labels = sorted(str(classify_subgroup(s)) for s in enumerate_subgroups(compute_aut(del_pezzo6())))
    assert labels.count('D12') == 1
    assert labels.count('C6') == 1
    assert 'D6' in labels and "D6'" in labels


def test_find_conjugator_agrees_with_brute_force():
    x = UnimodularMatrix(2, 1, 1, 1)
    for label in (ConjugacyLabel.D6, ConjugacyLabel.D6_PRIME, ConjugacyLabel.D4_PRIME):
        group = table_representative(label).conjugate(x)
        conjugator = find_conjugator(group, label)
        assert conjugator is not None
        assert group.conjugate(conjugator).elements == table_representative(label).elements
        assert brute_conjugator(group, table_representative(label)) is not None


def test_d6_and_d6_prime_are_not_conjugate():
    d6_prime = table_representative(ConjugacyLabel.D6_PRIME)
    assert find_conjugator(d6_prime, ConjugacyLabel.D6) is None
    assert brute_conjugator(d6_prime, table_representative(ConjugacyLabel.D6)) is None


def test_reduce_group_gives_conjugate():
    group = table_representative(ConjugacyLabel.C6).conjugate(UnimodularMatrix(3, 2, 1, 1))
    reduced, p = reduce_group(group)
    assert reduced.order == 6
    assert max(m.max_entry() for m in reduced.elements) <= 2
    assert reduced.conjugate(p).elements == group.elements


def test_group_from_generators_rejects_infinite_order():
    with pytest.raises(NotFinite):
        group_from_generators([UnimodularMatrix(1, 1, 0, 1)])


def test_group_from_dict():
    assert group_from_dict(None).is_trivial()
    group = group_from_dict({'generators': [A, C]})
    assert group.order == 12
    with pytest.raises(InvalidInput):
        group_from_dict({'generators': [[[2, 0], [0, 1]]]})
    with pytest.raises(InvalidInput):
        group_from_dict({'gens': []})


def test_attach_rejects_group_not_preserving_fan(p2):
    with pytest.raises(GroupDoesNotPreserveFan):
        table_representative(ConjugacyLabel.C2).attach(p2)


def test_ray_and_cone_orbits(dp6, d12, quadric, d8):
    assert d12.ray_orbits(dp6) == [tuple(range(6))]
    assert cone_orbits(dp6, d12) == [tuple(range(6))]
    assert cone_orbits(quadric, d8) == [(0, 1, 2, 3)]
    assert cone_orbits(dp6, trivial_group()) == [(i,) for i in range(6)]


def test_rotation_subgroup_acts_freely(dp6, d12, p2):
    assert rotation_subgroup(d12) == 6
    assert acts_freely_on_rays(dp6, d12)
    assert rotation_subgroup(compute_aut(p2)) == 3
    assert acts_freely_on_rays(p2, compute_aut(p2))
    assert dp6.n % rotation_subgroup(d12) == 0


def test_blow_up_of_orbit_keeps_group(p2):
    group = compute_aut(p2)
    bigger = blow_up(p2, cone_orbits(p2, group)[0])
    assert group.preserves(bigger)
    assert compute_aut(bigger).order == 12
