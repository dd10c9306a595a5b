import random

import pytest

from toric.errors import NotMinimal
from toric.lattice_fan import blow_up, del_pezzo6, fans_isomorphic, hirzebruch, projective_plane, square, transform
from toric.minimal_model import (
    KIND_DP6,
    KIND_HIRZEBRUCH,
    KIND_P1XP1,
    KIND_P2,
    canonical_positions,
    classify_minimal,
    contractible_orbits,
    is_allowed_pair,
    is_g_minimal,
    minimalize,
    pair_key,
    surface_family,
)
from toric.symmetry import ConjugacyLabel as L, classify_subgroup, compute_aut, enumerate_subgroups, group_from_generators, trivial_group
from toric.unimodular import UnimodularMatrix

from oracles import random_unimodular
from samples import C_PRIME


def test_dp6_trivial_group_contracts_to_p2(dp6, trivial):
    trace = minimalize(dp6, trivial)
    assert len(trace) == 3
    assert trace.terminal.n == 3
    label = classify_minimal(trace.terminal, trivial)
    assert label.kind == KIND_P2
    assert label.group == L.C1


def test_dp6_full_group_is_minimal(dp6, d12):
    trace = minimalize(dp6, d12)
    assert len(trace) == 0
    label = classify_minimal(trace.terminal, d12)
    assert (label.kind, label.group, label.family) == (KIND_DP6, L.D12, 'iv')


def test_blow_up_of_p2_orbit_contracts_back(p2):
    group = compute_aut(p2)
    bigger = blow_up(p2, [0, 1, 2])
    trace = minimalize(bigger, group)
    # D6 作用下 dP6 的六条 (-1)-曲线分成两个不相容的轨道，收缩其中一个
    assert len(trace) == 1
    assert len(trace.steps[0].contracted) == 3
    assert classify_minimal(trace.terminal, group).kind == KIND_P2


def test_f1_contracts_to_p2(trivial):
    trace = minimalize(hirzebruch(1), trivial)
    assert len(trace) == 1
    # 端点只在格同构意义下是 P2
    assert fans_isomorphic(trace.terminal, projective_plane()) is not None
    assert classify_minimal(trace.terminal, trivial).kind == KIND_P2


def test_each_step_contracts_one_orbit(dp6, trivial):
    bigger = blow_up(blow_up(dp6, [0]), [0])
    trace = minimalize(bigger, trivial)
    for step in trace.steps:
        assert len(step.contracted) == 1
        assert step.after.n == step.before.n - 1
    assert is_g_minimal(trace.terminal, trivial)


@pytest.mark.parametrize('a, group_label', [(2, L.D2_PRIME), (4, L.D2_PRIME), (3, L.D2), (5, L.D2)])
def test_hirzebruch_with_aut(a, group_label):
    fan = hirzebruch(a)
    label = classify_minimal(fan, compute_aut(fan))
    assert (label.kind, label.a, label.group) == (KIND_HIRZEBRUCH, a, group_label)
    assert label.kind_name == f'F({a})'
    assert label.family == 'i'


def test_square_kind_depends_on_group(quadric, d8, trivial):
    assert classify_minimal(quadric, d8).kind == KIND_P1XP1
    assert classify_minimal(quadric, d8).family == 'iii'
    f0 = classify_minimal(quadric, trivial)
    assert (f0.kind_name, f0.family) == ('F(0)', 'i')
    d2_prime = group_from_generators([UnimodularMatrix.from_list(C_PRIME)])
    assert classify_minimal(quadric, d2_prime).kind_name == 'F(0)'


def test_classify_minimal_rejects_non_minimal(dp6, trivial):
    with pytest.raises(NotMinimal):
        classify_minimal(dp6, trivial)
    assert contractible_orbits(dp6, trivial) == [(i,) for i in range(6)]


@pytest.mark.parametrize('kind, a, group, allowed', [
    (KIND_P2, None, L.C1, True),
    (KIND_HIRZEBRUCH, 1, L.C1, False),
    (KIND_HIRZEBRUCH, 0, L.C1, True),
    (KIND_P2, None, L.D2, True),
    (KIND_P1XP1, None, L.D2, True),
    (KIND_HIRZEBRUCH, 3, L.D2, True),
    (KIND_HIRZEBRUCH, 2, L.D2, False),
    (KIND_HIRZEBRUCH, 2, L.D2_PRIME, True),
    (KIND_HIRZEBRUCH, 3, L.D2_PRIME, False),
    (KIND_P1XP1, None, L.D8, True),
    (KIND_P2, None, L.D8, False),
    (KIND_P2, None, L.C3, True),
    (KIND_P2, None, L.D6, True),
    (KIND_DP6, None, L.D6, False),
    (KIND_DP6, None, L.D6_PRIME, True),
    (KIND_DP6, None, L.C6, True),
    (KIND_P2, None, L.C4, False),
])
def test_allowed_pairs(kind, a, group, allowed):
    assert is_allowed_pair(kind, a, group) is allowed


def test_surface_family():
    assert [surface_family(k) for k in (KIND_HIRZEBRUCH, KIND_P2, KIND_P1XP1, KIND_DP6)] == ['i', 'ii', 'iii', 'iv']
    with pytest.raises(NotMinimal):
        surface_family('P3')


@pytest.mark.parametrize('fan', [projective_plane(), square(), del_pezzo6()])
def test_every_subgroup_reaches_an_allowed_pair(fan):
    for group in enumerate_subgroups(compute_aut(fan)):
        trace = minimalize(fan, group)
        label = classify_minimal(trace.terminal, group)
        assert is_allowed_pair(label.kind, label.a, label.group)


def test_trace_to_dict(dp6, trivial):
    data = minimalize(dp6, trivial).to_dict()
    assert len(data['steps']) == 3
    assert len(data['terminal']) == 3


@pytest.mark.parametrize('fan', [projective_plane(), square(), del_pezzo6(), blow_up(del_pezzo6(), [0, 3])])
def test_results_do_not_depend_on_lattice_basis(fan):
    rng = random.Random(5)
    aut = compute_aut(fan)
    aut_label = classify_subgroup(aut)
    cases = []
    for group in enumerate_subgroups(aut):
        trace = minimalize(fan, group)
        label = classify_minimal(trace.terminal, group)
        cases.append((group, trace, (label.kind, label.a, label.group)))
    for _ in range(100):
        x = random_unimodular(rng)
        moved = transform(fan, x)
        moved_aut = compute_aut(moved)
        assert moved_aut.order == aut.order
        assert classify_subgroup(moved_aut) == aut_label
        group, trace, endpoint = rng.choice(cases)
        conjugated = group.conjugate(x)
        moved_trace = minimalize(moved, conjugated)
        assert len(moved_trace) == len(trace)
        assert fans_isomorphic(moved_trace.terminal, trace.terminal) is not None
        label = classify_minimal(moved_trace.terminal, conjugated)
        assert (label.kind, label.a, label.group) == endpoint


def test_canonical_positions_follow_the_fan(dp6, trivial):
    fan = blow_up(dp6, [0, 1])

    def ordered_sequence(f):
        position = canonical_positions(f, trivial)
        return [f.self_intersections[i] for i in sorted(range(f.n), key=position.__getitem__)]

    assert sorted(canonical_positions(fan, trivial)) == list(range(fan.n))
    moved = transform(fan, UnimodularMatrix(2, 1, 1, 1))
    assert ordered_sequence(moved) == ordered_sequence(fan)
    assert ordered_sequence(fan)[0] == min(fan.self_intersections)


def test_pair_key_detects_isomorphic_pairs(dp6, d12, trivial):
    x = UnimodularMatrix(1, 2, 1, 3)
    assert pair_key(transform(dp6, x), d12.conjugate(x)) == pair_key(dp6, d12)
    assert pair_key(dp6, d12) != pair_key(dp6, trivial)
    assert pair_key(blow_up(dp6, [0]), trivial) == pair_key(blow_up(dp6, [3]), trivial)
    assert pair_key(hirzebruch(2), trivial) != pair_key(hirzebruch(3), trivial)
