import itertools
import random

import pytest

from troprr.curves import (
    TropicalCurveGraph,
    baker_norine_rank,
    brute_force_rank,
    chi_complement_by_surgery,
    chi_complement_curve,
    compactly_supported_complement_ranks,
    complement_cohomology_ranks,
    subdivide_edge,
    divisor_degree,
    is_equivalent_to_effective,
    linear_equivalent,
    q_reduced,
    rr_number_curve,
)


def theta_graph():
    return TropicalCurveGraph(2, [(0, 1), (0, 1), (0, 1)])


def dumbbell_graph():
    return TropicalCurveGraph(2, [(0, 0), (0, 1), (1, 1)])


def path_graph(n):
    return TropicalCurveGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return TropicalCurveGraph(n, [(i, (i + 1) % n) for i in range(n)])


def test_genus_and_canonical():
    t = theta_graph()
    assert t.genus() == 2
    assert t.euler_characteristic() == -1
    assert t.canonical_divisor() == (1, 1)
    d = dumbbell_graph()
    assert d.genus() == 2
    assert d.canonical_divisor() == (1, 1)
    assert divisor_degree(d.canonical_divisor()) == 2 * d.genus() - 2


def test_tree_ranks_equal_degree():
    g = path_graph(4)
    assert baker_norine_rank(g, (2, 0, 0, 1)) == 3
    assert baker_norine_rank(g, (0, 1, 0, 0)) == 1
    assert baker_norine_rank(g, (0, 0, 0, 0)) == 0


def test_cycle_graph_ranks():
    g = cycle_graph(4)
    # Genus 1: a single point has rank 0, degree-2 divisors have rank 1.
    assert baker_norine_rank(g, (1, 0, 0, 0)) == 0
    assert baker_norine_rank(g, (1, 0, 1, 0)) == 1
    assert baker_norine_rank(g, (0, 0, 0, 0)) == 0
    assert baker_norine_rank(g, (1, -1, 0, 0)) == -1


def test_genus_two_ranks():
    t = theta_graph()
    k = t.canonical_divisor()
    assert baker_norine_rank(t, k) == 1
    assert baker_norine_rank(t, (1, 0)) == 0
    assert baker_norine_rank(t, (2, 0)) == 0
    assert baker_norine_rank(t, (1, 1)) == 1
    d = dumbbell_graph()
    assert baker_norine_rank(d, d.canonical_divisor()) == 1
    assert baker_norine_rank(d, (1, 0)) == 0


def test_q_reduction_is_equivalent_and_effective_off_q():
    g = cycle_graph(5)
    reduced, full = q_reduced(g, (3, -1, 0, 2, -2), 0)
    assert all(c >= 0 for i, c in enumerate(reduced) if i != 0)
    assert linear_equivalent(g, (3, -1, 0, 2, -2), reduced)


def test_linear_equivalence_on_cycle():
    g = cycle_graph(3)
    # Firing vertex 0 moves one chip to each neighbour.
    assert linear_equivalent(g, (2, 0, 0), (0, 1, 1))
    assert not linear_equivalent(g, (1, 0, 0), (0, 1, 0))
    assert not linear_equivalent(g, (1, 0, 0), (0, 1, 1))


@pytest.mark.parametrize(
    "graph",
    [theta_graph(), dumbbell_graph(), cycle_graph(4), path_graph(4)],
    ids=["theta", "dumbbell", "C4", "P4"],
)
def test_rank_matches_brute_force(graph):
    rng = random.Random(7)
    for _ in range(12):
        d = [rng.randint(-1, 2) for _ in range(graph.n)]
        assert baker_norine_rank(graph, d) == brute_force_rank(graph, d)


def test_riemann_roch_identity_random():
    rng = random.Random(11)
    graphs = [theta_graph(), dumbbell_graph(), cycle_graph(5)]
    for g in graphs:
        k = g.canonical_divisor()
        for _ in range(10):
            d = [rng.randint(-2, 3) for _ in range(g.n)]
            lhs = baker_norine_rank(g, d) - baker_norine_rank(
                g, [a - b for a, b in zip(k, d)]
            )
            assert lhs == divisor_degree(d) + 1 - g.genus()


def test_rr_number_curve():
    t = theta_graph()
    assert rr_number_curve(t, (3, 0)) == 3 + 1 - 2


def test_chi_complement_and_surgery_agree():
    t = theta_graph()
    for punctures in ([], [0], [0, 1], [0, 1, 2]):
        assert chi_complement_curve(t, len(punctures)) == chi_complement_by_surgery(
            t, punctures
        )


def test_compactly_supported_complement_ranks():
    t = theta_graph()
    # Effective degree-3 divisor: h0_c = 0, h1_c = g - 1 + deg = 4.
    h0, h1 = compactly_supported_complement_ranks(t, (2, 1))
    assert (h0, h1) == (0, 4)
    assert h0 - h1 == t.euler_characteristic() - divisor_degree((2, 1))


def test_complement_cohomology_ranks_points_in_one_edge():
    t = theta_graph()
    for k in (1, 2, 3, 4, 5):
        model, mids = subdivide_edge(t, 0, k)
        divisor = [0] * model.n
        for m in mids:
            divisor[m] = 1
        h0, h1 = complement_cohomology_ranks(model, divisor)
        assert (h0, h1) == (k, 1)
        # chi(C \ D) = chi(C) + #D in both presentations.
        assert h0 - h1 == chi_complement_curve(t, k)


def test_complement_cohomology_ranks_circle():
    c = cycle_graph(4)
    assert complement_cohomology_ranks(c, (1, 0, 0, 0)) == (1, 0)
    assert complement_cohomology_ranks(c, (1, 0, 1, 0)) == (2, 0)
    with pytest.raises(ValueError, match="edge interiors"):
        complement_cohomology_ranks(theta_graph(), (1, 0))


def test_effectivity_detection():
    g = cycle_graph(3)
    assert is_equivalent_to_effective(g, (1, -1, 1))
    assert not is_equivalent_to_effective(g, (1, -1, 0))
