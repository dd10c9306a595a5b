import pytest

from toric.errors import UnverifiedBasis
from toric.grothendieck import make_basis, standard_permutation_basis
from toric.lattice_fan import blow_up, hirzebruch
from toric.minimal_model import classify_minimal, minimalize
from toric.motivic import annotate_family, decompose
from toric.symmetry import ConjugacyLabel, compute_aut, table_representative, trivial_group


def decomposition_of(fan, group):
    trace = minimalize(fan, group)
    basis = standard_permutation_basis(trace)
    return decompose(basis, group)


@pytest.mark.parametrize('a, product', [(2, 'k×Q×k×Q'), (4, 'k×Q×k×Q'), (3, 'k×k×k×k'), (5, 'k×k×k×k')])
def test_hirzebruch_products(a, product):
    fan = hirzebruch(a)
    assert decomposition_of(fan, compute_aut(fan)).render() == product


def test_plane_product(p2):
    result = decomposition_of(p2, compute_aut(p2))
    assert result.render() == 'k×A×A^{⊗2}'
    assert result.family.family == 'ii'


def test_quadric_with_ruling_swap(quadric, d8):
    result = decomposition_of(quadric, d8)
    assert result.render() == 'k×B×A'
    assert [f.base_degree for f in result.factors] == [1, 2, 1]
    assert result.family.slots == ('k', 'B', 'A')


def test_quadric_without_ruling_swap(quadric):
    # -I 保持两族直线
    group = table_representative(ConjugacyLabel.C2)
    result = decomposition_of(quadric, group)
    assert result.render() == 'k×B_1×B_2×A'
    assert result.family.slots == ('k', 'B_1', 'B_2', 'A')


def test_dp6_product(dp6, d12):
    result = decomposition_of(dp6, d12)
    assert result.render() == 'k×P×Q'
    assert [f.base_degree for f in result.factors] == [1, 3, 2]
    assert result.family.family == 'iv'
    assert 'dp6_label_tension' in result.metadata


def test_exceptional_orbits_become_hom_factors(p2):
    result = decomposition_of(blow_up(p2, [0]), trivial_group())
    assert result.render() == 'k×A×A^{⊗2}×Hom_G(E1,l)'
    assert result.family.family == 'ii'


def test_dp6_with_trivial_group(dp6, trivial):
    result = decomposition_of(dp6, trivial)
    assert result.render() == 'k×A×A^{⊗2}×Hom_G(E1,l)×Hom_G(E2,l)×Hom_G(E3,l)'
    assert sum(f.base_degree for f in result.factors) == dp6.n


def test_exceptional_factors_follow_contraction_order(dp6, trivial):
    basis = standard_permutation_basis(minimalize(dp6, trivial))
    assert basis.slots() == ['1', 'J1', 'J1^2', 'E1.1', 'E2.1', 'E3.1']
    steps = [f.source_orbit[0] for f in decompose(basis, trivial).factors[3:]]
    assert steps == ['E1.1', 'E2.1', 'E3.1']


def test_hirzebruch_quaternion_factors_are_not_split(f2):
    labels = [f.brauer_label for f in decomposition_of(f2, compute_aut(f2)).factors]
    assert labels == ['k', 'Q', 'k', 'Q']
    assert labels.count('Q') == 2


def test_full_blow_up_keeps_degree_sum(dp6, d12):
    bigger = blow_up(dp6, range(6))
    result = decomposition_of(bigger, d12)
    assert sum(f.base_degree for f in result.factors) == bigger.n
    assert result.factors[0].brauer_label == 'k'


def test_endomorphism_rendering(f2):
    result = decomposition_of(f2, compute_aut(f2))
    assert result.render(economical=False) == 'k×End(π_*J1)×End(π_*J2)×End(π_*J1J2)'


def test_annotate_family(quadric, d8, dp6, d12, f2):
    assert annotate_family(classify_minimal(quadric, d8)).family == 'iii'
    dp6_family = annotate_family(classify_minimal(dp6, d12))
    assert (dp6_family.family, dp6_family.slots) == ('iv', ('k', 'P', 'Q'))
    f0 = annotate_family(classify_minimal(quadric, trivial_group()))
    assert f0.family == 'i'
    assert annotate_family(classify_minimal(hirzebruch(3), compute_aut(hirzebruch(3)))).slots == ('k', 'k', 'k', 'k')


def test_unverified_basis_is_rejected(p2):
    basis = make_basis(p2, trivial_group(), [('1', [0, 0, 0]), ('a', [2, 0, 0]), ('b', [4, 0, 0])])
    with pytest.raises(UnverifiedBasis):
        decompose(basis, trivial_group())


def test_to_dict(dp6, d12):
    data = decomposition_of(dp6, d12).to_dict()
    assert data['product'] == 'k×P×Q'
    assert data['family']['family'] == 'iv'
    assert [f['base_degree'] for f in data['factors']] == [1, 3, 2]
