from math import comb

import pytest

from troprr.cycles import check_balancing, degree, power_tower
from troprr.hypersurface import TropicalPolynomial, tropical_hypersurface
from troprr.matroids import (
    Matroid,
    bergman_complex,
    bergman_fan,
    beta,
    beta_by_rank_sum,
    characteristic_polynomial,
    csm_cycle,
    flag_minor,
    graphic_matroid,
    uniform_matroid,
)
from troprr.polyhedra import cone_in_union, validate_complex


K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_uniform_basics():
    m = uniform_matroid(2, 3)
    assert m.rank() == 2
    assert m.rank({1}) == 1
    assert m.closure({1}) == frozenset({1})
    assert sorted(map(sorted, m.proper_flats())) == [[1], [2], [3]]
    assert m.is_connected()


def test_exchange_axiom_rejected():
    with pytest.raises(ValueError):
        Matroid(4, [frozenset({1, 2}), frozenset({3, 4})])


def test_minors():
    m = uniform_matroid(2, 4)
    d = m.delete({4})
    assert (d.n, d.rank_value) == (3, 2)
    c = m.contract({4})
    assert (c.n, c.rank_value) == (3, 1)
    fm = flag_minor(uniform_matroid(3, 4), frozenset(), frozenset({1, 2}))
    assert (fm.n, fm.rank_value) == (2, 2)


def test_beta_uniform_binomials():
    for n in range(2, 7):
        for r in range(1, n + 1):
            assert beta(uniform_matroid(r, n)) == comb(n - 2, r - 1)


def test_beta_against_rank_sum_oracle():
    mats = [uniform_matroid(r, n) for n in range(1, 6) for r in range(1, n + 1)]
    mats.append(graphic_matroid(K4_EDGES))
    for m in mats:
        assert beta(m) == beta_by_rank_sum(m)


def test_beta_disconnected_is_zero():
    free2 = Matroid(2, [frozenset({1, 2})])  # two coloops
    assert beta(free2) == 0


def test_characteristic_polynomials():
    assert characteristic_polynomial(uniform_matroid(2, 3)) == [2, -3, 1]
    assert characteristic_polynomial(graphic_matroid(K4_EDGES)) == [-6, 11, -6, 1]


def test_graphic_k4():
    m = graphic_matroid(K4_EDGES)
    assert (m.n, m.rank_value) == (6, 3)
    assert len(m.bases) == 16  # Cayley: 4^2 spanning trees


def test_bergman_fan_u23_is_tropical_line():
    x = bergman_fan(uniform_matroid(2, 3))
    rays = sorted(x.complex.cells[i].rays[0] for i in x.weights)
    assert rays == [(-1, 0), (0, -1), (1, 1)]
    assert check_balancing(x).ok
    assert validate_complex(x.complex).ok


@pytest.mark.parametrize(
    "m",
    [uniform_matroid(2, 4), uniform_matroid(3, 4), graphic_matroid(K4_EDGES)],
    ids=["U24", "U34", "K4"],
)
def test_bergman_and_csm_balancing(m):
    x = bergman_fan(m)
    assert check_balancing(x).ok
    for k in range(m.rank_value):
        c = csm_cycle(m, k)
        assert check_balancing(c).ok


def test_csm_top_is_bergman_with_unit_weights():
    for m in (uniform_matroid(2, 4), uniform_matroid(3, 4), graphic_matroid(K4_EDGES)):
        top = csm_cycle(m, m.rank_value - 1)
        berg = bergman_fan(m)
        assert top.weights == berg.weights


def test_csm_zero_of_boolean_is_empty():
    # Free matroid on three elements: disconnected, beta = 0, so the
    # 0-dimensional CSM cycle carries no weight at all.
    m = uniform_matroid(3, 3)
    assert csm_cycle(m, 0).is_empty()


def test_csm_zero_degrees_match_complement_euler_characteristics():
    # Generic arrangements: line minus three points and the complement of
    # four generic lines in the plane.
    assert degree(csm_cycle(uniform_matroid(2, 3), 0)) == -1
    assert degree(csm_cycle(uniform_matroid(3, 4), 0)) == 1


@pytest.mark.parametrize("r", [2, 3])
def test_support_identity_small_rank(r):
    # Powers of the hyperplane cut down supports through the chain of
    # uniform Bergman fans.
    terms = {tuple(0 for _ in range(r)): 0}
    for i in range(r):
        terms[tuple(1 if j == i else 0 for j in range(r))] = 0
    f = TropicalPolynomial(r, terms)
    x = tropical_hypersurface(f)
    tower = power_tower(f, x)
    assert len(tower.layers) == r
    for j in range(r):
        layer = tower.layers[j]
        weighted = [layer.complex.cells[i] for i in layer.weights]
        assert len(weighted) == comb(r + 1, j + 2)
        assert all(w > 0 for w in layer.weights.values())
        berg = bergman_fan(uniform_matroid(r - j, r + 1))
        cones = [berg.complex.cells[i] for i in berg.weights]
        for cone in cones:
            assert any(c.contains_polyhedron(cone) for c in weighted)
        for c in weighted:
            assert cone_in_union(c, cones)
