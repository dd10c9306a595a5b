import random
from itertools import product

import pytest

from services.corpus_service import CorpusService
from toric.cohomology import ext_line_bundles, ext_table, global_sections, line_bundle_cohomology
from toric.grothendieck import canonical_class, euler_characteristic
from toric.lattice_fan import blow_up, del_pezzo6, hirzebruch, projective_plane, square

from oracles import chamber_cohomology, oracle_radius


@pytest.mark.parametrize('d, expected', [
    (0, (1, 0, 0)),
    (1, (3, 0, 0)),
    (2, (6, 0, 0)),
    (-1, (0, 0, 0)),
    (-2, (0, 0, 0)),
    (-3, (0, 0, 1)),
    (-4, (0, 0, 3)),
])
def test_p2_line_bundles(p2, d, expected):
    assert tuple(line_bundle_cohomology(p2, [d, 0, 0])) == expected


def test_twice_negative_fibre_has_h1(f2):
    # O(-2F) 是 P1 上 O(-2) 的拉回
    assert tuple(line_bundle_cohomology(f2, [-2, 0, 0, 0])) == (0, 1, 0)


@pytest.mark.parametrize('fan', [projective_plane(), hirzebruch(2)])
def test_h1_matches_chamber_oracle(fan):
    for coeffs in product(range(-3, 4), repeat=fan.n):
        assert tuple(line_bundle_cohomology(fan, coeffs)) == chamber_cohomology(fan, coeffs), coeffs


@pytest.mark.parametrize('fan', [
    projective_plane(), square(), hirzebruch(3), hirzebruch(5), del_pezzo6(), blow_up(del_pezzo6(), [0, 2, 4]),
])
def test_random_divisors_match_chamber_oracle(fan):
    rng = random.Random(fan.n)
    k = canonical_class(fan)
    for _ in range(500):
        d = [rng.randint(-4, 4) for _ in range(fan.n)]
        h = line_bundle_cohomology(fan, d)
        assert tuple(h) == chamber_cohomology(fan, d, oracle_radius(fan)), d
        assert h.euler == euler_characteristic(fan, d)
        dual = chamber_cohomology(fan, [a - b for a, b in zip(k, d)], oracle_radius(fan, 5))
        assert dual == (h.h2, h.h1, h.h0)


@pytest.mark.slow
def test_corpus_fans_match_chamber_oracle():
    corpus = CorpusService(max_rays=9, max_depth=0, random_chains=0, hirzebruch_range=[2, 3, 4, 5])
    fans = {fan.rays: fan for fan, _ in corpus.corpus(seed=0)}
    rng = random.Random(0)
    for fan in fans.values():
        for _ in range(500):
            d = [rng.randint(-4, 4) for _ in range(fan.n)]
            assert tuple(line_bundle_cohomology(fan, d)) == chamber_cohomology(fan, d, oracle_radius(fan)), (fan, d)


def test_global_sections_counts_polytope_points(quadric):
    assert global_sections(quadric, [1, 1, 1, 1]) == 9
    assert global_sections(quadric, [-1, 0, 0, 0]) == 0


def test_ext_line_bundles(p2):
    assert tuple(ext_line_bundles(p2, [1, 0, 0], [2, 0, 0])) == (3, 0, 0)
    assert ext_line_bundles(p2, [2, 0, 0], [1, 0, 0]).is_zero()


def test_ext_table(p2):
    table = ext_table(p2, [[0, 0, 0], [1, 0, 0], [2, 0, 0]])
    assert tuple(table[(0, 2)]) == (6, 0, 0)
    assert all(tuple(table[(i, i)]) == (1, 0, 0) for i in range(3))
    assert table[(2, 0)].is_zero()
