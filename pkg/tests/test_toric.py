from fractions import Fraction
from math import comb

import pytest
import sympy

from troprr.polyhedra import LatticePolytope, standard_simplex
from troprr.toric import (
    ProjectiveSpace,
    ToricSurface,
    fan_from_polygon,
    is_delzant,
    pick_area_count,
    polygon_vertices_ccw,
    todd_series,
)


def test_todd_series_known_values():
    assert todd_series(4) == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 12),
        Fraction(0),
        Fraction(-1, 720),
    ]


def test_todd_series_against_sympy():
    x = sympy.symbols("x")
    expr = x / (1 - sympy.exp(-x))
    s = sympy.series(expr, x, 0, 9).removeO()
    ours = todd_series(8)
    for k in range(9):
        coeff = sympy.Rational(s.coeff(x, k))
        assert Fraction(int(coeff.p), int(coeff.q)) == ours[k]


def test_projective_space_rr_is_binomial():
    for n in (1, 2, 3):
        ps = ProjectiveSpace(n)
        for d in range(0, 7):
            assert ps.rr_number(d) == comb(n + d, n)


def test_projective_space_rr_duality():
    for n in (1, 2, 3):
        ps = ProjectiveSpace(n)
        for d in range(1, 7):
            assert ps.rr_number(-d) == (-1) ** n * comb(d - 1, n)


def test_rr_of_trivial_bundle_on_plane_is_one():
    assert ProjectiveSpace(2).rr_number(0) == 1


def p2_surface():
    return ToricSurface([(1, 0), (0, 1), (-1, -1)])


def test_p2_surface_ring():
    s = p2_surface()
    assert s.self_intersections == [1, 1, 1]
    k = s.canonical_class()
    assert s.intersection(k, k) == 9


def test_p2_rr_matches_binomial():
    s = p2_surface()
    h = s.polygon_divisor(standard_simplex(2, 1))
    for d in range(0, 7):
        div = tuple(d * c for c in h)
        assert s.rr_number(div) == comb(d + 2, 2)


def test_hirzebruch_self_intersections():
    for k in (0, 1, 2, 3):
        s = ToricSurface([(1, 0), (0, 1), (-1, k), (0, -1)])
        by_ray = dict(zip(s.rays, s.self_intersections))
        assert by_ray[(0, 1)] == -k
        assert by_ray[(0, -1)] == k


def test_rectangle_rr_counts_lattice_points():
    for a in (1, 2, 3):
        for b in (1, 2, 4):
            q = LatticePolytope([(0, 0), (a, 0), (0, b), (a, b)])
            s = fan_from_polygon(q)
            div = s.polygon_divisor(q)
            assert s.rr_number(div) == (a + 1) * (b + 1)


def test_adjunction_genus_equals_interior_points():
    polys = [
        standard_simplex(2, 3),
        standard_simplex(2, 4),
        LatticePolytope([(0, 0), (3, 0), (0, 2), (3, 2)]),
        LatticePolytope([(0, 0), (4, 0), (1, 3), (0, 3)]),  # Hirzebruch trapezoid
    ]
    for q in polys:
        s = fan_from_polygon(q)
        div = s.polygon_divisor(q)
        assert s.adjunction_genus(div) == len(q.interior_lattice_points())


def test_pick_oracle_agrees_with_enumeration():
    polys = [
        standard_simplex(2, 5),
        LatticePolytope([(0, 0), (4, 0), (0, 3), (4, 3)]),
        LatticePolytope([(0, 0), (3, 1), (1, 4)]),
    ]
    for q in polys:
        assert pick_area_count(q) == len(q.lattice_points())


def test_is_delzant():
    assert is_delzant(LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert is_delzant(standard_simplex(2, 2))
    assert not is_delzant(LatticePolytope([(0, 0), (1, 0), (0, 2)]))


def test_polygon_vertices_ccw_orientation():
    verts = polygon_vertices_ccw(LatticePolytope([(0, 0), (2, 0), (0, 2), (2, 2)]))
    area2 = 0
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        area2 += a[0] * b[1] - a[1] * b[0]
    assert area2 > 0


def test_virtual_genus_integrals():
    s = p2_surface()
    h = s.polygon_divisor(standard_simplex(2, 1))
    conic = tuple(2 * c for c in h)
    cubic = tuple(3 * c for c in h)
    # chi(O_D) = 1 - g: conic has genus 0, cubic genus 1.
    assert s.virtual_genus_integral([conic]) == 1
    assert s.virtual_genus_integral([cubic]) == 0
    # Two divisors: Bezout.
    assert s.virtual_genus_integral([conic, cubic]) == 6
