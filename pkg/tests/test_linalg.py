from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from troprr.linalg import (
    det,
    in_span,
    integer_kernel,
    lattice_basis_of_span,
    matrix_rank,
    nullspace,
    primitive,
    quotient_generator,
    sign_normalize,
    solve_linear,
    vdot,
)


def test_primitive_scaling():
    assert primitive((2, 4)) == (1, 2)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((-2, 0)) == (-1, 0)
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_sign_normalize():
    assert sign_normalize((-1, 2)) == (1, -2)
    assert sign_normalize((0, -3)) == (0, 3)
    assert sign_normalize((2, 5)) == (2, 5)


def test_rank_and_nullspace():
    assert matrix_rank([(1, 0), (0, 1)]) == 2
    assert matrix_rank([(1, 2), (2, 4)]) == 1
    ns = nullspace([(1, 2, 3)])
    assert len(ns) == 2
    for v in ns:
        assert vdot((1, 2, 3), v) == 0


def test_solve_linear():
    assert solve_linear([(1, 1), (1, -1)], (3, 1)) == (2, 1)
    assert solve_linear([(1, 1), (2, 2)], (1, 3)) is None


def test_det():
    assert det([(1, 0), (0, 1)]) == 1
    assert det([(0, 1), (1, 0)]) == -1
    assert det([(2, 0), (0, 3)]) == 6


def test_integer_kernel_is_saturated():
    # Kernel of (1, 1, 2): contains (1,-1,0) and (0,2,-1); the saturated kernel
    # lattice must contain (0,2,-1) itself, not only twice a generator.
    ker = integer_kernel([(1, 1, 2)], 3)
    assert len(ker) == 2
    for v in ker:
        assert vdot((1, 1, 2), v) == 0
    assert in_span((0, 2, -1), [tuple(Fraction(c) for c in k) for k in ker])
    # integrality of coordinates in the kernel basis
    sol = solve_linear(list(zip(*ker)), (0, 2, -1))
    assert all(s.denominator == 1 for s in sol)


def test_lattice_basis_of_span_saturation():
    basis = lattice_basis_of_span([(2, 4)], 2)
    assert len(basis) == 1
    assert tuple(map(abs, basis[0])) == (1, 2)
    basis = lattice_basis_of_span([(1, 0, 0), (0, 2, 2)], 3)
    assert len(basis) == 2
    sol = solve_linear(list(zip(*basis)), (0, 1, 1))
    assert sol is not None and all(s.denominator == 1 for s in sol)


def test_quotient_generator_index_two_case():
    # sigma spanned by (1,1) inside ambient Z^2, tau = origin: the primitive
    # generator of the quotient is (1,1) itself, oriented by the reference.
    g = quotient_generator([], [(1, 1)], (2, 2), 2)
    assert g == (1, 1)
    g = quotient_generator([], [(1, 1)], (-1, -1), 2)
    assert g == (-1, -1)


def test_quotient_generator_modulo_line():
    # tau = x-axis, sigma = plane Z^2: quotient generated by anything with
    # second coordinate +-1.
    g = quotient_generator([(1, 0)], [(1, 0), (0, 1)], (0, 5), 2)
    assert abs(g[1]) == 1 and g[1] > 0


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=4).filter(lambda v: any(v)))
def test_primitive_is_primitive(v):
    from math import gcd
    p = primitive(tuple(v))
    g = 0
    for x in p:
        g = gcd(g, abs(x))
    assert g == 1
