"""Tropical polynomials (max-plus), regular subdivisions of Newton polytopes,
hypersurface cycles as dual complexes, and piecewise-affine restrictions of
polynomials to cycles."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .cycles import CartierFunction, TropicalCycle
from .linalg import (
    frac,
    gcd_list,
    is_zero_vec,
    matrix_rank,
    primitive,
    solve_linear,
    vadd,
    vdot,
    vscale,
    vsub,
)
from .polyhedra import (
    LatticePolytope,
    PolyhedralComplex,
    Polyhedron,
    polytope_normalized_volume,
)


class TropicalPolynomial:
    """max_a (<a, x> + c_a) over a finite set of integer exponents a with
    rational coefficients c_a."""

    def __init__(self, n: int, terms):
        self.n = int(n)
        items = dict(terms).items() if isinstance(terms, dict) else terms
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in items:
            e = tuple(int(c) for c in exp)
            if len(e) != self.n:
                raise ValueError("exponent of wrong length")
            c = frac(coeff)
            if e in self.terms:
                self.terms[e] = max(self.terms[e], c)
            else:
                self.terms[e] = c
        if not self.terms:
            raise ValueError("a tropical polynomial needs at least one term")

    def value(self, x) -> Fraction:
        xv = tuple(frac(c) for c in x)
        return max(vdot(e, xv) + c for e, c in self.terms.items())

    def argmax(self, x) -> frozenset:
        xv = tuple(frac(c) for c in x)
        vals = {e: vdot(e, xv) + c for e, c in self.terms.items()}
        m = max(vals.values())
        return frozenset(e for e, v in vals.items() if v == m)

    def __repr__(self):
        return f"TropicalPolynomial(n={self.n}, terms={len(self.terms)})"


def newton_polytope(f: TropicalPolynomial) -> LatticePolytope:
    return LatticePolytope(list(f.terms))


@dataclass
class RegularSubdivision:
    """Regular subdivision of the Newton polytope induced by the coefficients
    (upper-hull convention matching the max-plus polynomial).

    maximal_cells: list of (exponent frozenset, dual vertex in R^n); the
    exponent set is the full argmax set at the dual vertex."""

    polynomial: TropicalPolynomial
    polytope: LatticePolytope
    maximal_cells: list

    def faces(self):
        """All faces of all maximal cells as (member frozenset, dim), each
        listed once; members are ALL exponents of f lying on the face."""
        if not hasattr(self, "_faces"):
            found: dict[frozenset, int] = {}
            for exps, _x in self.maximal_cells:
                cell_lp = LatticePolytope(list(exps))
                for fdim, fverts in cell_lp.faces():
                    fpoly = Polyhedron(list(fverts))
                    members = frozenset(e for e in exps if fpoly.contains(e))
                    found[members] = fdim
            self._faces = sorted(found.items(), key=lambda t: (t[1], sorted(t[0])))
        return self._faces

    def is_smooth(self) -> bool:
        """All maximal cells are unimodular simplices."""
        from .polyhedra import normalized_volume

        n = self.polynomial.n
        for exps, _x in self.maximal_cells:
            if len(exps) != n + 1:
                return False
            if normalized_volume(sorted(exps)) != 1:
                return False
        return True


def regular_subdivision(f: TropicalPolynomial) -> RegularSubdivision:
    """Maximal cells via dual-vertex enumeration: for every affinely
    independent (n+1)-subset of exponents, solve the equal-value system and
    keep the solutions where those terms attain the global maximum."""
    n = f.n
    p = newton_polytope(f)
    if p.dim != n:
        raise ValueError("Newton polytope must be full-dimensional")
    terms = sorted(f.terms.items())
    cells: dict[frozenset, tuple] = {}
    for subset in itertools.combinations(range(len(terms)), n + 1):
        a0, c0 = terms[subset[0]]
        rows = [vsub(terms[i][0], a0) for i in subset[1:]]
        if matrix_rank(rows) != n:
            continue
        rhs = [c0 - terms[i][1] for i in subset[1:]]
        x = solve_linear(rows, rhs)
        if x is None:
            continue
        val = vdot(a0, x) + c0
        vals = {e: vdot(e, x) + c for e, c in terms}
        if any(v > val for v in vals.values()):
            continue
        argmax = frozenset(e for e, v in vals.items() if v == val)
        if argmax in cells:
            continue
        if matrix_rank([vsub(e, a0) for e in argmax]) == n:
            cells[argmax] = tuple(x)
    maximal = sorted(cells.items(), key=lambda t: sorted(t[0]))
    sub = RegularSubdivision(f, p, maximal)
    total = sum(
        polytope_normalized_volume(LatticePolytope(list(exps))) for exps, _ in maximal
    )
    if total != polytope_normalized_volume(p):
        raise ValueError("subdivision cells do not cover the Newton polytope")
    return sub


def is_smooth(f: TropicalPolynomial) -> bool:
    return regular_subdivision(f).is_smooth()


def _dual_complex(sub: RegularSubdivision, min_face_dim: int):
    """Complex of cells dual to the subdivision faces of dim >= min_face_dim:
    vertices are dual vertices of the incident maximal cells, rays the
    primitive outer normals of the Newton-polytope facets through the face.
    Returns (complex, {face members -> cell index}, face list)."""
    f = sub.polynomial
    n = f.n
    faces = [(members, d) for members, d in sub.faces() if d >= min_face_dim]
    eqs, ineqs = sub.polytope.polyhedron().hrep()
    facet_data = []
    for h in ineqs:
        if is_zero_vec(h[1:]):
            continue
        tight = frozenset(
            e for e in f.terms
            if vdot(h, (Fraction(1),) + tuple(Fraction(c) for c in e)) == 0
        )
        outer = primitive(tuple(-c for c in h[1:]))
        facet_data.append((tight, outer))
    cells = []
    index: dict[frozenset, int] = {}
    for members, d in faces:
        dual_verts = [x for exps, x in sub.maximal_cells if members <= exps]
        rays = [outer for tight, outer in facet_data if members <= tight]
        cell = Polyhedron(dual_verts, rays=rays).canonicalize()
        if cell.dim != n - d:
            raise ValueError("dual cell of unexpected dimension")
        index[members] = len(cells)
        cells.append(cell)
    relation = set()
    for (m1, d1), (m2, d2) in itertools.combinations(faces, 2):
        if d2 == d1 + 1 and m1 < m2:
            relation.add((index[m2], index[m1]))
        elif d1 == d2 + 1 and m2 < m1:
            relation.add((index[m1], index[m2]))
    return PolyhedralComplex(n, cells, relation), index, faces


def tropical_hypersurface(f: TropicalPolynomial) -> TropicalCycle:
    """The hypersurface of f as a weighted complex dual to the regular
    subdivision: cells dual to subdivision faces of dimension >= 1, rays from
    outer normals of Newton-polytope facets, codimension-1 weights equal to
    the lattice lengths of the dual subdivision edges."""
    sub = regular_subdivision(f)
    n = f.n
    complex_, index, faces = _dual_complex(sub, 1)
    weights = {}
    for members, d in faces:
        if d != 1:
            continue
        ends = LatticePolytope(list(members)).vertices
        weights[index[members]] = gcd_list(vsub(ends[1], ends[0]))
    cycle = TropicalCycle(complex_, n - 1, weights)
    cycle.subdivision = sub
    cycle.dual_face_index = index
    return cycle


def ambient_cycle(f: TropicalPolynomial) -> TropicalCycle:
    """All of R^n as a weight-1 cycle on the full dual complex of f's regular
    subdivision (regions of linearity down to the dual points), so that f is
    affine on every cell; the base of divisor power towers."""
    sub = regular_subdivision(f)
    n = f.n
    complex_, index, faces = _dual_complex(sub, 0)
    weights = {index[members]: 1 for members, d in faces if d == 0}
    cycle = TropicalCycle(complex_, n, weights)
    cycle.subdivision = sub
    cycle.dual_face_index = index
    return cycle


def complement_components(f: TropicalPolynomial):
    """Connected components of R^n minus the hypersurface, for smooth f: one
    bounded-or-unbounded region per lattice point of the Newton polytope."""
    sub = regular_subdivision(f)
    if not sub.is_smooth():
        raise ValueError("complement components are catalogued for smooth f only")
    eqs, ineqs = sub.polytope.polyhedron().hrep()
    out = []
    for a in sub.polytope.lattice_points():
        dual_verts = [x for exps, x in sub.maximal_cells if a in exps]
        rays = []
        for h in ineqs:
            if is_zero_vec(h[1:]):
                continue
            if vdot(h, (Fraction(1),) + tuple(Fraction(c) for c in a)) == 0:
                rays.append(primitive(tuple(-c for c in h[1:])))
        region = Polyhedron(dual_verts, rays=rays).canonicalize()
        out.append({"label": a, "region": region, "contractible": True})
    return out


# -- restriction of a polynomial to a cycle -----------------------------------


def _dominates(a, ca, b, cb, cell: Polyhedron) -> bool:
    """Whether <a,x>+ca >= <b,x>+cb on the whole cell."""
    diff = vsub(a, b)
    for v in cell.vertices:
        if vdot(diff, v) + (ca - cb) < 0:
            return False
    for r in cell.rays:
        if vdot(diff, r) < 0:
            return False
    for l in cell.lineality:
        if vdot(diff, l) != 0:
            return False
    return True


def cartier_from_polynomial(f: TropicalPolynomial, cycle: TropicalCycle,
                            allow_refine: bool = True) -> CartierFunction:
    """Restrict f to the cycle as a Cartier function: one dominating term per
    weighted cell. If f is not affine on some cell of a curve, the curve is
    refined at the breakpoints of f first; higher-dimensional cycles whose
    cells f breaks are rejected."""
    terms = sorted(f.terms.items())
    pieces = {}
    for i in sorted(cycle.weights):
        cell = cycle.complex.cells[i]
        p = cell.relative_interior_point()
        vals = [(vdot(e, p) + c, e, c) for e, c in terms]
        m = max(v for v, _, _ in vals)
        piece = None
        for v, e, c in vals:
            if v == m and all(
                _dominates(e, c, b, cb, cell) for b, cb in terms if b != e
            ):
                piece = (e, c)
                break
        if piece is None:
            if cycle.dim == 1 and allow_refine:
                refined = refine_curve_by_polynomial(f, cycle)
                return cartier_from_polynomial(f, refined, allow_refine=False)
            raise ValueError(
                f"polynomial is not affine on weighted cell {i} of the cycle"
            )
        pieces[i] = piece
    return CartierFunction(cycle, pieces)


def _envelope_breakpoints(f: TropicalPolynomial, base, direction, lo, hi):
    """Parameter values t in the open interval (lo, hi) (hi may be None for
    +infinity, lo None for -infinity) where max_a <a, base + t dir> + c_a has
    a kink."""
    forms = [(vdot(e, direction), vdot(e, base) + c) for e, c in f.terms.items()]
    bps = set()
    for (s1, i1), (s2, i2) in itertools.combinations(forms, 2):
        if s1 == s2:
            continue
        t = (i2 - i1) / (s1 - s2)
        if lo is not None and t <= lo:
            continue
        if hi is not None and t >= hi:
            continue
        val = s1 * t + i1
        if all(s * t + i <= val for s, i in forms):
            bps.add(t)
    return sorted(bps)


def refine_curve_by_polynomial(f: TropicalPolynomial, cycle: TropicalCycle) -> TropicalCycle:
    """Refine the weighted 1-cells of a curve at the breakpoints of f, keeping
    weights; returns an equivalent cycle on the refined complex."""
    if cycle.dim != 1:
        raise ValueError("refinement is implemented for curves only")
    points: list[tuple] = []
    point_index: dict[tuple, int] = {}

    def pt(v):
        key = tuple(frac(c) for c in v)
        if key not in point_index:
            point_index[key] = len(points)
            points.append(key)
        return point_index[key]

    segments = []  # (Polyhedron, weight, endpoint point-indices)
    for i, w in sorted(cycle.weights.items()):
        cell = cycle.complex.cells[i]
        if cell.lineality:
            base = cell.vertices[0]
            d = cell.lineality[0]
            bps = _envelope_breakpoints(f, base, d, None, None)
            if not bps:
                segments.append((cell, w, []))
                continue
            cuts = [vadd(base, vscale(t, d)) for t in bps]
            neg = tuple(-c for c in d)
            segments.append((Polyhedron([cuts[0]], rays=[neg]), w, [pt(cuts[0])]))
            for a, b in zip(cuts, cuts[1:]):
                segments.append((Polyhedron([a, b]), w, [pt(a), pt(b)]))
            segments.append((Polyhedron([cuts[-1]], rays=[d]), w, [pt(cuts[-1])]))
        elif cell.rays:
            base = cell.vertices[0]
            d = tuple(Fraction(c) for c in cell.rays[0])
            bps = _envelope_breakpoints(f, base, d, Fraction(0), None)
            cuts = [base] + [vadd(base, vscale(t, d)) for t in bps]
            for a, b in zip(cuts, cuts[1:]):
                segments.append((Polyhedron([a, b]), w, [pt(a), pt(b)]))
            segments.append((Polyhedron([cuts[-1]], rays=[cell.rays[0]]), w, [pt(cuts[-1])]))
        else:
            u, v = cell.canonicalize().vertices[:2]
            d = vsub(v, u)
            bps = _envelope_breakpoints(f, u, d, Fraction(0), Fraction(1))
            cuts = [u] + [vadd(u, vscale(t, d)) for t in bps] + [v]
            for a, b in zip(cuts, cuts[1:]):
                segments.append((Polyhedron([a, b]), w, [pt(a), pt(b)]))
    # Carry over the existing 0-cells of the closed support.
    for i in cycle.support_cells():
        c = cycle.complex.cells[i]
        if c.dim == 0:
            pt(c.vertices[0])
    cells = [Polyhedron([p]) for p in points]
    relation = set()
    weights = {}
    for poly, w, ends in segments:
        idx = len(cells)
        cells.append(poly)
        weights[idx] = w
        for e in ends:
            relation.add((e, idx))
    refined = TropicalCycle(PolyhedralComplex(cycle.complex.ambient_dim, cells, relation), 1, weights)
    return refined


# -- generators ----------------------------------------------------------------


def polynomial_from_heights(n: int, points, heights) -> TropicalPolynomial:
    return TropicalPolynomial(n, list(zip([tuple(p) for p in points], heights)))


def alcove_heights(points, d: int):
    """Heights inducing a regular unimodular triangulation of the dilated
    standard simplex d*Delta_n using all its lattice points.

    Pull the points through the unimodular staircase map y_i = x_1 + ... + x_i
    and take the negative of a convex piecewise-linear function creasing
    exactly on the alcove hyperplanes y_i - y_j = k, y_i = k."""
    pts = [tuple(int(c) for c in p) for p in points]
    n = len(pts[0])

    def g(y):
        full = (0,) + y
        total = 0
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                for k in range(-d + 1, d):
                    total += abs(full[i] - full[j] - k)
        return total

    heights = []
    for p in pts:
        y = tuple(sum(p[:i + 1]) for i in range(n))
        heights.append(Fraction(-g(y)))
    return heights


def smooth_simplex_polynomial(n: int, d: int) -> TropicalPolynomial:
    """Smooth degree-d polynomial on R^n with Newton polytope d*Delta_n."""
    from .polyhedra import standard_simplex

    pts = standard_simplex(n, d).lattice_points()
    return polynomial_from_heights(n, pts, alcove_heights(pts, max(d, 1)))


def random_smooth_polynomial(points, seed: int = 0, max_retries: int = 50) -> TropicalPolynomial:
    """Random smooth polynomial in two variables using all the given lattice
    points: strictly concave base heights plus a small jitter, retried until
    the induced subdivision is a unimodular triangulation."""
    pts = [tuple(int(c) for c in p) for p in points]
    n = len(pts[0])
    if n != 2:
        raise ValueError("random smooth generation is implemented for the plane")
    rng = random.Random(seed)
    for _ in range(max_retries):
        heights = [
            Fraction(-(x * x + y * y)) + Fraction(rng.randint(0, 10**6), 8 * 10**6)
            for x, y in pts
        ]
        f = polynomial_from_heights(n, pts, heights)
        sub = regular_subdivision(f)
        used = set().union(*(set(e) for e, _ in sub.maximal_cells))
        if sub.is_smooth() and len(used) == len(pts):
            return f
    raise ValueError("failed to draw a smooth polynomial; enlarge retries")
