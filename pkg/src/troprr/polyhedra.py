"""Exact-rational polyhedral geometry: polyhedra in V-representation, polyhedral
complexes with explicit face relations, local cones, lineality spaces,
sedentarity, and lattice-point enumeration.

All polyhedra are stored as vertices + rays + lineality generators over exact
rationals; half-space representations are derived on demand and cached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    Fraction as _Fraction,
    IntVec,
    Vec,
    frac,
    gcd_list,
    in_span,
    integer_kernel,
    is_zero_vec,
    lattice_basis_of_span,
    matrix_rank,
    nullspace,
    primitive,
    rref,
    scale_rows_to_int,
    sign_normalize,
    solve_linear,
    vadd,
    vdot,
    vscale,
    vsub,
    det,
)


class _NegInf:
    """Distinguished -infinity marker for T^n chart coordinates."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __hash__(self):
        return hash("_NegInf")


NEG_INF = _NegInf()


@dataclass(frozen=True)
class RationalPoint:
    """Point in a T^n chart: exact rationals, possibly -infinity entries."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ValueError("point must have at least one coordinate")
        norm = tuple(c if c is NEG_INF else frac(c) for c in self.coords)
        object.__setattr__(self, "coords", norm)

    def __len__(self):
        return len(self.coords)

    def is_finite(self) -> bool:
        return all(c is not NEG_INF for c in self.coords)


def sedentarity(x: RationalPoint) -> int:
    """Number of -infinity coordinates of a point in a T^n chart."""
    return sum(1 for c in x.coords if c is NEG_INF)


def _as_vec(p) -> Vec:
    if isinstance(p, RationalPoint):
        if not p.is_finite():
            raise ValueError("operation requires a finite point")
        return tuple(p.coords)
    return tuple(frac(c) for c in p)


class Polyhedron:
    """Rational polyhedron in V-representation.

    vertices: finite rational points (at least one); rays: primitive integer
    directions; lineality: integer directions spanning the lineality space.
    """

    def __init__(self, vertices, rays=(), lineality=()):
        vs = tuple(_as_vec(v) for v in vertices)
        if not vs:
            raise ValueError("a polyhedron needs at least one vertex/base point")
        self.ambient_dim = len(vs[0])
        if any(len(v) != self.ambient_dim for v in vs):
            raise ValueError("inconsistent ambient dimensions")
        self.vertices = tuple(sorted(set(vs)))
        self.rays = tuple(sorted(set(primitive(r) for r in rays)))
        lin = []
        for l in lineality:
            lv = sign_normalize(primitive(l))
            if lv not in lin:
                lin.append(lv)
        self.lineality = tuple(sorted(lin))
        self._hrep = None
        self._dim = None
        self._lattice = None

    # -- basic geometry ----------------------------------------------------

    def directions(self) -> list[Vec]:
        """Vectors spanning the direction (tangent) space."""
        base = self.vertices[0]
        out = [vsub(v, base) for v in self.vertices[1:]]
        out.extend(tuple(Fraction(c) for c in r) for r in self.rays)
        out.extend(tuple(Fraction(c) for c in l) for l in self.lineality)
        return [v for v in out if not is_zero_vec(v)]

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = matrix_rank(self.directions())
        return self._dim

    def lattice_basis(self) -> list[IntVec]:
        """Integer basis of the saturated lattice of the direction space."""
        if self._lattice is None:
            self._lattice = lattice_basis_of_span(self.directions(), self.ambient_dim)
        return self._lattice

    def is_cone(self) -> bool:
        zero = tuple(Fraction(0) for _ in range(self.ambient_dim))
        return self.vertices == (zero,)

    def relative_interior_point(self) -> Vec:
        n = len(self.vertices)
        p = tuple(sum(v[i] for v in self.vertices) / n for i in range(self.ambient_dim))
        for r in self.rays:
            p = vadd(p, r)
        return p

    # -- H-representation ----------------------------------------------------

    def hrep(self):
        """(equalities, inequalities) in homogeneous coordinates: a point x is
        in the polyhedron iff  e . (1, x) == 0 for all equalities and
        f . (1, x) >= 0 for all inequalities."""
        if self._hrep is None:
            self._hrep = _hrep_from_vrep(self)
        return self._hrep

    def contains(self, point) -> bool:
        x = _as_vec(point)
        hx = (Fraction(1),) + tuple(x)
        eqs, ineqs = self.hrep()
        return all(vdot(e, hx) == 0 for e in eqs) and all(vdot(f, hx) >= 0 for f in ineqs)

    def contains_direction(self, d) -> bool:
        """Whether the direction d lies in the recession cone."""
        hd = (Fraction(0),) + tuple(frac(c) for c in d)
        eqs, ineqs = self.hrep()
        return all(vdot(e, hd) == 0 for e in eqs) and all(vdot(f, hd) >= 0 for f in ineqs)

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        return all(self.contains(v) for v in other.vertices) and all(
            self.contains_direction(r) for r in other.rays
        ) and all(
            self.contains_direction(l) and self.contains_direction(vscale(-1, l))
            for l in other.lineality
        )

    # -- canonical form ------------------------------------------------------

    def canonicalize(self) -> "Polyhedron":
        """Irredundant V-representation recomputed from the H-representation."""
        eqs, ineqs = self.hrep()
        poly = polyhedron_from_hrep(eqs, ineqs, self.ambient_dim)
        if poly is None:
            raise ValueError("canonicalization emptied a nonempty polyhedron")
        return poly

    def canonical_key(self):
        can = self.canonicalize()
        lin_lattice = lattice_basis_of_span(
            [tuple(Fraction(c) for c in l) for l in can.lineality], can.ambient_dim
        ) if can.lineality else []
        lin_key = tuple(sorted(sign_normalize(b) for b in lin_lattice))
        # Rays are only canonical modulo lineality; reduce each ray mod the
        # lineality lattice via projection onto a complement is overkill here:
        # our constructions never mix rays with lineality in ambiguous ways,
        # so sorted primitive rays + sorted vertices + lineality lattice work.
        return (can.vertices, can.rays, lin_key)

    def __repr__(self):
        return (
            f"Polyhedron(dim={self.dim}, vertices={len(self.vertices)}, "
            f"rays={len(self.rays)}, lineality={len(self.lineality)})"
        )


def _hrep_from_vrep(poly: Polyhedron):
    """Facet enumeration of the homogenization cone."""
    n = poly.ambient_dim
    gens: list[Vec] = [(Fraction(1),) + v for v in poly.vertices]
    gens += [(Fraction(0),) + tuple(Fraction(c) for c in r) for r in poly.rays]
    for l in poly.lineality:
        lv = tuple(Fraction(c) for c in l)
        gens.append((Fraction(0),) + lv)
        gens.append((Fraction(0),) + tuple(-c for c in lv))
    # Linear equalities: covectors vanishing on all generators.
    eqs = [tuple(e) for e in nullspace(gens)]
    d = (n + 1) - len(eqs)  # dim of the homogenization cone's span
    # Coordinates within the span.
    span_basis = _column_space_basis(gens)
    coords = [_coords_in_basis(g, span_basis) for g in gens]
    ineqs: list[Vec] = []
    seen = set()
    if d >= 1:
        for subset in itertools.combinations(range(len(gens)), max(d - 1, 0)):
            sub = [coords[i] for i in subset]
            if matrix_rank(sub) != d - 1:
                continue
            normals = nullspace(sub) if sub else [tuple(
                Fraction(1) if i == j else Fraction(0) for j in range(d)
            ) for i in range(d)]
            if len(normals) != 1:
                if d == 1 and not sub:
                    normals = normals[:1]
                else:
                    continue
            nrm = normals[0]
            vals = [vdot(nrm, c) for c in coords]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                nrm = tuple(-x for x in nrm)
            else:
                continue
            amb = _functional_to_ambient(nrm, span_basis)
            amb = tuple(Fraction(c) for c in primitive(amb))
            if amb not in seen:
                seen.add(amb)
                ineqs.append(amb)
    eqs = [tuple(Fraction(c) for c in primitive(e)) for e in eqs]
    return eqs, ineqs


def _column_space_basis(vectors):
    basis = []
    for v in vectors:
        if not in_span(v, basis):
            basis.append(tuple(v))
    return basis


def _coords_in_basis(v, basis):
    if not basis:
        return ()
    sol = solve_linear(list(zip(*basis)), v)
    if sol is None:
        raise ValueError("vector not in span")
    return sol


def _functional_to_ambient(nrm, span_basis):
    """Covector on span coordinates -> ambient covector agreeing on the span.

    With G the matrix whose rows are the basis, coordinates of x are
    (G G^T)^{-1} G x; the ambient covector is nrm^T (G G^T)^{-1} G.
    """
    k = len(span_basis)
    n = len(span_basis[0])
    gram = [[vdot(span_basis[i], span_basis[j]) for j in range(k)] for i in range(k)]
    y = solve_linear(gram, nrm)
    if y is None:
        raise ValueError("gram system unsolvable")
    return tuple(sum(y[i] * span_basis[i][j] for i in range(k)) for j in range(n))


def polyhedron_from_hrep(equalities, inequalities, ambient_dim: int) -> Polyhedron | None:
    """Vertex/ray/lineality enumeration for a homogeneous-coordinate H-rep.

    Returns None for an empty polyhedron.
    """
    eqs = [tuple(frac(c) for c in e) for e in equalities]
    ineqs = [tuple(frac(c) for c in f) for f in inequalities]
    n = ambient_dim
    # Solve the affine equalities: e0 + e . x = 0.
    if eqs:
        a_rows = [e[1:] for e in eqs]
        b = [-e[0] for e in eqs]
        p0 = solve_linear(a_rows, b)
        if p0 is None:
            return None
        null = nullspace(a_rows)
    else:
        p0 = tuple(Fraction(0) for _ in range(n))
        null = [
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        ]
    k = len(null)
    if k == 0:
        hx = (Fraction(1),) + tuple(p0)
        if all(vdot(f, hx) >= 0 for f in ineqs):
            return Polyhedron([p0])
        return None
    # Substitute x = p0 + N t. Inequality f0 + f.x >= 0 becomes
    # (f.N) t >= -(f0 + f.p0).
    t_ineqs = []
    for f in ineqs:
        fx = f[1:]
        coeffs = tuple(vdot(fx, nv) for nv in null)
        rhs = -(f[0] + vdot(fx, p0))
        t_ineqs.append((coeffs, rhs))
    # Lineality in t-space.
    normals = [c for c, _ in t_ineqs if not is_zero_vec(c)]
    lin_t = nullspace(normals) if normals else [
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(k)) for i in range(k)
    ]
    # Feasibility of zero-coefficient inequalities.
    for c, rhs in t_ineqs:
        if is_zero_vec(c) and rhs > 0:
            return None
    t_ineqs = [(c, rhs) for c, rhs in t_ineqs if not is_zero_vec(c)]
    # Reduce modulo lineality: complement coordinates.
    if lin_t:
        comp = [v for v in nullspace(lin_t)]
    else:
        comp = [
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(k)) for i in range(k)
        ]
    q = len(comp)
    # Write t = C^T s + lineality component where rows of C span the complement;
    # since inequalities vanish on lineality, they only constrain s via
    # c . t = c . C^T s.
    red_ineqs = []
    for c, rhs in t_ineqs:
        red = tuple(vdot(c, cv) for cv in comp)
        red_ineqs.append((red, rhs))
    verts_s = set()
    rays_s = set()
    if q == 0:
        verts_s.add(tuple())
    else:
        for subset in itertools.combinations(range(len(red_ineqs)), q):
            rows = [red_ineqs[i][0] for i in subset]
            if matrix_rank(rows) != q:
                continue
            rhs = [red_ineqs[i][1] for i in subset]
            s = solve_linear(rows, rhs)
            if s is None:
                continue
            if all(vdot(c, s) >= r for c, r in red_ineqs):
                verts_s.add(tuple(s))
        if not red_ineqs:
            verts_s.add(tuple(Fraction(0) for _ in range(q)))
        for subset in itertools.combinations(range(len(red_ineqs)), q - 1):
            rows = [red_ineqs[i][0] for i in subset]
            if rows and matrix_rank(rows) != q - 1:
                continue
            dirs = nullspace(rows) if rows else [
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(q))
                for i in range(q)
            ]
            if len(dirs) != 1:
                continue
            dvec = dirs[0]
            for dd in (dvec, tuple(-a for a in dvec)):
                if all(vdot(c, dd) >= 0 for c, _ in red_ineqs):
                    rays_s.add(primitive(dd))
        if not verts_s:
            return None
    # Map back: s-coordinates -> t via solving [C^T s_coord] with the basis.
    # t(s) solves comp-matrix system: choose t = sum s_i * comp_dual_i where
    # comp_dual is the pseudo-inverse mapping; easiest exact route: pick t with
    # comp . t = s and lin-normal . t = 0, i.e. solve the square system.
    def s_to_t(s, homogeneous: bool):
        rows = list(comp) + list(lin_t)
        rhs = list(s) + [Fraction(0)] * len(lin_t)
        t = solve_linear(rows, rhs)
        return t

    def t_to_x(t, homogeneous: bool):
        x = tuple(sum(t[i] * null[i][j] for i in range(k)) for j in range(n))
        if not homogeneous:
            x = vadd(x, p0)
        return x

    verts = [t_to_x(s_to_t(s, False), False) for s in sorted(verts_s)]
    rays = [t_to_x(s_to_t(r, True), True) for r in sorted(rays_s)]
    lin = [t_to_x(lv, True) for lv in lin_t]
    rays = [primitive(r) for r in rays if not is_zero_vec(r)]
    lin = [primitive(l) for l in lin if not is_zero_vec(l)]
    return Polyhedron(verts, rays, lin)


def intersect_polyhedra(p: Polyhedron, q: Polyhedron) -> Polyhedron | None:
    peq, pineq = p.hrep()
    qeq, qineq = q.hrep()
    return polyhedron_from_hrep(list(peq) + list(qeq), list(pineq) + list(qineq), p.ambient_dim)


def polyhedra_equal(p: Polyhedron, q: Polyhedron) -> bool:
    return p.contains_polyhedron(q) and q.contains_polyhedron(p)


# -- complexes ---------------------------------------------------------------


class PolyhedralComplex:
    """Finite polyhedral complex with an explicit covering face relation.

    face_relation: set of (face_index, cofacet_index) pairs where the face has
    dimension exactly one less than the cofacet (transitive reduction).
    """

    def __init__(self, ambient_dim: int, cells, face_relation):
        self.ambient_dim = ambient_dim
        self.cells: list[Polyhedron] = list(cells)
        self.face_relation = frozenset(tuple(p) for p in face_relation)
        self._faces_of = None
        self._cofaces_of = None

    def maximal_cells(self) -> list[int]:
        non_max = {i for i, _ in self.face_relation}
        return [i for i in range(len(self.cells)) if i not in non_max]

    def facets_of(self, i: int) -> list[int]:
        return [a for a, b in self.face_relation if b == i]

    def cofacets_of(self, i: int) -> list[int]:
        return [b for a, b in self.face_relation if a == i]

    def faces_closure(self, cell_indices) -> set[int]:
        """All (iterated) faces of the given cells, including themselves."""
        out = set(cell_indices)
        frontier = list(cell_indices)
        while frontier:
            i = frontier.pop()
            for a in self.facets_of(i):
                if a not in out:
                    out.add(a)
                    frontier.append(a)
        return out

    def support_contains(self, point) -> bool:
        return any(c.contains(point) for c in self.cells)

    def cells_containing(self, point) -> list[int]:
        return [i for i, c in enumerate(self.cells) if c.contains(point)]

    def is_cone_complex(self) -> bool:
        return all(c.is_cone() for c in self.cells)

    def __repr__(self):
        return f"PolyhedralComplex(ambient={self.ambient_dim}, cells={len(self.cells)})"


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def validate_complex(c: PolyhedralComplex, pairwise_limit: int | None = None) -> ValidationReport:
    """Check the complex axioms; reports every violation found.

    pairwise_limit caps the number of pairwise-intersection checks (the
    expensive part) for large constructed complexes; None means check all.
    """
    violations: list[str] = []
    for i, cell in enumerate(c.cells):
        for r in cell.rays:
            if gcd_list(r) != 1:
                violations.append(f"cell {i}: non-primitive ray {r}")
    for a, b in c.face_relation:
        ca, cb = c.cells[a], c.cells[b]
        if ca.dim != cb.dim - 1:
            violations.append(f"face relation ({a},{b}): not a covering pair")
        if not cb.contains_polyhedron(ca):
            violations.append(f"face relation ({a},{b}): face not contained in cofacet")
    # Geometric facets of each cell must be cells of the complex.
    for i, cell in enumerate(c.cells):
        eqs, ineqs = cell.hrep()
        listed = {tuple(sorted(c.cells[j].vertices)) for j in c.facets_of(i)}
        for f in ineqs:
            if is_zero_vec(f[1:]):
                continue
            face = polyhedron_from_hrep(list(eqs) + [f, tuple(-x for x in f)], list(ineqs), c.ambient_dim)
            if face is None or face.dim != cell.dim - 1:
                continue
            found = any(
                polyhedra_equal(face, c.cells[j]) for j in c.facets_of(i)
            )
            if not found:
                violations.append(f"cell {i}: missing face {face!r}")
    # Pairwise intersections are common faces.
    pairs = list(itertools.combinations(range(len(c.cells)), 2))
    if pairwise_limit is not None:
        pairs = pairs[:pairwise_limit]
    for i, j in pairs:
        inter = intersect_polyhedra(c.cells[i], c.cells[j])
        if inter is None:
            continue
        faces_i = c.faces_closure([i])
        faces_j = c.faces_closure([j])
        common = (faces_i & faces_j) | {i, j}
        if not any(polyhedra_equal(inter, c.cells[k]) for k in common):
            violations.append(f"cells {i},{j}: non-face intersection")
    return ValidationReport(ok=not violations, violations=violations)


def local_cone(c: PolyhedralComplex, x) -> PolyhedralComplex:
    """Star of x recentred at the origin, as a fan."""
    containing = c.cells_containing(x)
    if not containing:
        raise ValueError("point not in the support of the complex")
    xv = _as_vec(x)
    hx = (Fraction(1),) + tuple(xv)
    cones: list[Polyhedron] = []
    keys = {}
    index_map = {}
    for i in containing:
        eqs, ineqs = c.cells[i].hrep()
        # Tangent cone at x: homogeneous parts of the tight constraints.
        tight_ineqs = [f[1:] for f in ineqs if vdot(f, hx) == 0 and not is_zero_vec(f[1:])]
        lin_eqs = [e[1:] for e in eqs if not is_zero_vec(e[1:])]
        heqs = [(Fraction(0),) + tuple(e) for e in lin_eqs]
        hineqs = [(Fraction(0),) + tuple(f) for f in tight_ineqs]
        cone = polyhedron_from_hrep(heqs, hineqs, c.ambient_dim)
        key = cone.canonical_key()
        if key not in keys:
            keys[key] = len(cones)
            cones.append(cone)
        index_map[i] = keys[key]
    relation = set()
    for a, b in c.face_relation:
        if a in index_map and b in index_map and index_map[a] != index_map[b]:
            if cones[index_map[a]].dim == cones[index_map[b]].dim - 1:
                relation.add((index_map[a], index_map[b]))
    fan = PolyhedralComplex(c.ambient_dim, cones, relation)
    fan.index_map = index_map  # original cell index -> cone index
    return fan


def lineality_space(fan: PolyhedralComplex) -> list[IntVec]:
    """Integer basis of the largest linear subspace contained in the support
    (and in every maximal cone's span) of a cone complex."""
    if not fan.is_cone_complex():
        raise ValueError("lineality_space expects a cone complex")
    maxcells = fan.maximal_cells()
    if not maxcells:
        return []
    n = fan.ambient_dim
    # Start from the intersection of the cells' own lineality spaces.
    current: list | None = None
    for i in maxcells:
        lin = [tuple(Fraction(c) for c in l) for l in fan.cells[i].lineality]
        if current is None:
            current = lin
        else:
            current = _intersect_subspaces(current, lin, n)
        if not current:
            current = []
            break
    current = current or []
    # Try to extend by support-contained lines.
    candidate_rays = set()
    for i in maxcells:
        for r in fan.cells[i].rays:
            candidate_rays.add(r)
    changed = True
    while changed:
        changed = False
        for r in sorted(candidate_rays):
            rv = tuple(Fraction(c) for c in r)
            if in_span(rv, current):
                continue
            neg = tuple(-c for c in rv)
            if not any(fan.cells[i].contains_direction(neg) for i in maxcells):
                continue
            # Accept r only if every maximal cone, translated along the line,
            # stays inside the support.
            cones = [fan.cells[i] for i in maxcells]
            ok = True
            for i in maxcells:
                shifted = Polyhedron(
                    fan.cells[i].vertices,
                    rays=fan.cells[i].rays,
                    lineality=list(fan.cells[i].lineality) + [r],
                )
                if not cone_in_union(shifted, cones):
                    ok = False
                    break
            if ok:
                current = current + [rv]
                changed = True
    if not current:
        return []
    return lattice_basis_of_span(current, n)


def cone_in_union(p: Polyhedron, cones: list[Polyhedron]) -> bool:
    """Exact test whether the polyhedron p is covered by the union of the
    given polyhedra, by recursive splitting along their facet hyperplanes."""
    hyperplanes = []
    seen = set()
    for c in cones:
        eqs, ineqs = c.hrep()
        for h in list(eqs) + list(ineqs):
            key = sign_normalize(primitive(h)) if not is_zero_vec(h) else None
            if key and key not in seen:
                seen.add(key)
                hyperplanes.append(tuple(Fraction(x) for x in key))

    def rec(piece: Polyhedron, depth: int) -> bool:
        if any(c.contains_polyhedron(piece) for c in cones):
            return True
        if depth > len(hyperplanes):
            return False
        gens_pts = [(Fraction(1),) + v for v in piece.vertices]
        gens_dirs = [(Fraction(0),) + tuple(Fraction(x) for x in r) for r in piece.rays]
        for l in piece.lineality:
            lv = tuple(Fraction(x) for x in l)
            gens_dirs.append((Fraction(0),) + lv)
            gens_dirs.append((Fraction(0),) + tuple(-x for x in lv))
        gens = gens_pts + gens_dirs
        peqs, pineqs = piece.hrep()
        for h in hyperplanes:
            vals = [vdot(h, g) for g in gens]
            if any(v > 0 for v in vals) and any(v < 0 for v in vals):
                neg_h = tuple(-x for x in h)
                for half in (h, neg_h):
                    part = polyhedron_from_hrep(list(peqs), list(pineqs) + [half], piece.ambient_dim)
                    if part is None or part.dim < piece.dim:
                        continue
                    if not rec(part, depth + 1):
                        return False
                return True
        return False

    return rec(p, 0)


def _cone_generators(cone: Polyhedron):
    gens = [tuple(Fraction(c) for c in r) for r in cone.rays]
    for l in cone.lineality:
        lv = tuple(Fraction(c) for c in l)
        gens.append(lv)
        gens.append(tuple(-c for c in lv))
    return gens


def _intersect_subspaces(a, b, n):
    """Intersection of two subspaces given by spanning sets."""
    if not a or not b:
        return []
    na = nullspace(a)
    nb = nullspace(b)
    rows = list(na) + list(nb)
    if not rows:
        return [tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)]
    return nullspace(rows)


# -- lattice polytopes --------------------------------------------------------


class LatticePolytope:
    """Lattice polytope given by its integer vertices (irredundant)."""

    def __init__(self, points):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise ValueError("empty point list")
        self.ambient_dim = len(pts[0])
        poly = Polyhedron(pts).canonicalize()
        self.vertices = tuple(sorted(tuple(int(c) for c in v) for v in poly.vertices))
        self._poly = poly

    @property
    def dim(self) -> int:
        return self._poly.dim

    def polyhedron(self) -> Polyhedron:
        return self._poly

    def contains(self, point) -> bool:
        return self._poly.contains(point)

    def lattice_points(self) -> list[IntVec]:
        lo = [min(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        out = []
        for p in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
            if self._poly.contains(p):
                out.append(p)
        return sorted(out)

    def interior_lattice_points(self) -> list[IntVec]:
        if self.dim < self.ambient_dim:
            return []
        eqs, ineqs = self._poly.hrep()
        out = []
        for p in self.lattice_points():
            hx = (Fraction(1),) + tuple(Fraction(c) for c in p)
            if all(vdot(f, hx) > 0 for f in ineqs if not is_zero_vec(f[1:])):
                out.append(p)
        return out

    def faces(self) -> list[tuple[int, tuple[IntVec, ...]]]:
        """All proper and improper nonempty faces as (dim, vertex tuple),
        including the polytope itself; excludes the empty face."""
        eqs, ineqs = self._poly.hrep()
        found = {}

        def rec(vert_subset):
            key = tuple(sorted(vert_subset))
            if key in found:
                return
            sub = Polyhedron(list(vert_subset))
            found[key] = sub.dim
            sub_eqs, sub_ineqs = sub.hrep()
            for f in sub_ineqs:
                if is_zero_vec(f[1:]):
                    continue
                tight = [
                    v for v in vert_subset
                    if vdot(f, (Fraction(1),) + tuple(Fraction(c) for c in v)) == 0
                ]
                if tight and len(tight) < len(vert_subset):
                    rec(tuple(tight))

        rec(self.vertices)
        return sorted(((d, vs) for vs, d in found.items()), key=lambda t: (t[0], t[1]))

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={self.vertices})"


def lattice_points(p: LatticePolytope) -> list[IntVec]:
    return p.lattice_points()


def interior_lattice_points(p: LatticePolytope) -> list[IntVec]:
    return p.interior_lattice_points()


def normalized_volume(simplex_points) -> int:
    """|det| of the edge matrix of a full-dimensional lattice simplex."""
    pts = [tuple(int(c) for c in p) for p in simplex_points]
    n = len(pts[0])
    if len(pts) != n + 1:
        raise ValueError("need exactly dim+1 points for a simplex")
    edges = [vsub(p, pts[0]) for p in pts[1:]]
    vol = det(edges)
    if vol == 0:
        raise ValueError("degenerate simplex")
    return abs(int(vol))


def polytope_normalized_volume(p: LatticePolytope) -> int:
    """Normalized volume (n! * euclidean volume) of a full-dimensional lattice
    polytope, by fan triangulation from a base vertex over the facets."""
    n = p.ambient_dim
    if p.dim != n:
        raise ValueError("normalized volume needs a full-dimensional polytope")
    total = 0
    for simplex in _fan_triangulation(list(p.vertices)):
        total += normalized_volume(simplex)
    return total


def _fan_triangulation(vertices):
    """Triangulate a polytope (given by its vertices) by coning a base vertex
    over triangulations of the facets not containing it."""
    poly = Polyhedron(vertices)
    d = poly.dim
    if len(vertices) == d + 1:
        return [list(vertices)]
    base = vertices[0]
    eqs, ineqs = poly.hrep()
    simplices = []
    for f in ineqs:
        hb = (Fraction(1),) + tuple(Fraction(c) for c in base)
        if vdot(f, hb) == 0:
            continue
        facet_verts = [
            v for v in vertices
            if vdot(f, (Fraction(1),) + tuple(Fraction(c) for c in v)) == 0
        ]
        if not facet_verts or Polyhedron(facet_verts).dim != d - 1:
            continue
        for sub in _fan_triangulation(facet_verts):
            simplices.append([base] + sub)
    return simplices


def standard_simplex(n: int, d: int = 1) -> LatticePolytope:
    """The dilated standard simplex d * Delta_n."""
    verts = [tuple(0 for _ in range(n))]
    for i in range(n):
        verts.append(tuple(d if j == i else 0 for j in range(n)))
    return LatticePolytope(verts)
