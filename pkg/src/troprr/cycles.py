"""Tropical cycles: weighted balanced complexes, the Cartier-divisor pairing
(corner locus), divisor power towers, and the local position checks
(moderate position, relative uniformity)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    det,
    in_span,
    is_zero_vec,
    matrix_rank,
    primitive,
    quotient_generator,
    solve_linear,
    vadd,
    vdot,
    vscale,
    vsub,
)
from .polyhedra import (
    PolyhedralComplex,
    Polyhedron,
    lineality_space,
    local_cone,
)


class TropicalCycle:
    """Pure-dimensional weighted polyhedral complex.

    weights maps maximal-cell index -> nonzero integer. The empty cycle (no
    weighted cells) is a first-class value with a dimension label.
    """

    def __init__(self, complex_: PolyhedralComplex, dim: int, weights: dict[int, int]):
        self.complex = complex_
        self.dim = dim
        self.weights = {i: int(w) for i, w in weights.items() if w != 0}
        for i in self.weights:
            if complex_.cells[i].dim != dim:
                raise ValueError("weighted cell of wrong dimension; cycle must be pure")

    def is_empty(self) -> bool:
        return not self.weights

    def support_cells(self) -> set[int]:
        """Indices of all cells in the closed support (weighted cells and
        their faces)."""
        return self.complex.faces_closure(self.weights.keys())

    def support_contains(self, point) -> bool:
        return any(self.complex.cells[i].contains(point) for i in self.weights)

    def codim1_cells(self) -> dict[int, list[int]]:
        """Map codim-1 cell index -> adjacent weighted maximal cells."""
        out: dict[int, list[int]] = {}
        for i in self.weights:
            for tau in self.complex.facets_of(i):
                out.setdefault(tau, []).append(i)
        return out

    def __repr__(self):
        return f"TropicalCycle(dim={self.dim}, cells={len(self.weights)})"


def degree(a: TropicalCycle) -> int:
    """Sum of point weights of a 0-dimensional cycle."""
    if a.dim != 0:
        raise ValueError("degree is defined for 0-dimensional cycles")
    return sum(a.weights.values())


@dataclass
class BalancingReport:
    ok: bool
    failures: list[str] = field(default_factory=list)


def _normal_vector(complex_: PolyhedralComplex, tau_idx: int, sigma_idx: int):
    """Integer vector in sigma's lattice whose class generates
    (lattice of sigma)/(lattice of tau), pointing from tau into sigma."""
    tau = complex_.cells[tau_idx]
    sigma = complex_.cells[sigma_idx]
    ref = vsub(sigma.relative_interior_point(), tau.relative_interior_point())
    return quotient_generator(tau.directions(), sigma.lattice_basis(), ref, complex_.ambient_dim)


def check_balancing(a: TropicalCycle) -> BalancingReport:
    failures = []
    for tau_idx, sigmas in a.codim1_cells().items():
        tau = a.complex.cells[tau_idx]
        total = tuple(Fraction(0) for _ in range(a.complex.ambient_dim))
        for s in sigmas:
            v = _normal_vector(a.complex, tau_idx, s)
            total = vadd(total, vscale(a.weights[s], v))
        if not is_zero_vec(total) and not in_span(total, tau.directions()):
            failures.append(
                f"balancing fails at cell {tau_idx}: weighted normal sum {total} "
                f"not in the span of the cell"
            )
    return BalancingReport(ok=not failures, failures=failures)


class CartierFunction:
    """Piecewise integer-affine function on the support of a cycle: one affine
    piece (integer linear part, rational constant) per weighted maximal cell,
    agreeing on shared faces."""

    def __init__(self, cycle: TropicalCycle, pieces: dict[int, tuple[tuple[int, ...], Fraction]],
                 check_continuity: bool = True):
        self.cycle = cycle
        self.pieces = {
            i: (tuple(int(c) for c in lin), Fraction(const))
            for i, (lin, const) in pieces.items()
        }
        for i in cycle.weights:
            if i not in self.pieces:
                raise ValueError(f"missing affine piece for weighted cell {i}")
        if check_continuity:
            self._check_continuity()

    def _check_continuity(self):
        complex_ = self.cycle.complex
        by_facet: dict[int, list[int]] = {}
        for i in self.cycle.weights:
            for tau in complex_.facets_of(i):
                by_facet.setdefault(tau, []).append(i)
        for tau_idx, sigmas in by_facet.items():
            tau = complex_.cells[tau_idx]
            for s1, s2 in itertools.combinations(sigmas, 2):
                l1, c1 = self.pieces[s1]
                l2, c2 = self.pieces[s2]
                for v in tau.vertices:
                    if vdot(l1, v) + c1 != vdot(l2, v) + c2:
                        raise ValueError(
                            f"affine pieces of cells {s1},{s2} disagree on face {tau_idx}"
                        )
                for d in list(tau.rays) + list(tau.lineality):
                    if vdot(l1, d) != vdot(l2, d):
                        raise ValueError(
                            f"affine pieces of cells {s1},{s2} disagree on face {tau_idx}"
                        )

    def value(self, cell_idx: int, point):
        lin, const = self.pieces[cell_idx]
        return vdot(lin, point) + const

    def linear_on_face(self, tau_idx: int, adjacent_sigma: int):
        """Linear part valid on the face tau (restriction of any adjacent
        piece; they agree on tau's directions)."""
        return self.pieces[adjacent_sigma][0]


def divisor_intersect(phi: CartierFunction, a: TropicalCycle | None = None) -> TropicalCycle:
    """Corner locus of phi on its cycle: the codimension-1 cycle with the
    standard primitive-normal weight rule; zero-weight cells are dropped."""
    if a is None:
        a = phi.cycle
    if a is not phi.cycle:
        raise ValueError("phi is not defined on the given cycle")
    complex_ = a.complex
    if a.dim == 0 or a.is_empty():
        return TropicalCycle(complex_, max(a.dim - 1, 0), {})
    new_weights: dict[int, int] = {}
    for tau_idx, sigmas in a.codim1_cells().items():
        tau = complex_.cells[tau_idx]
        total = tuple(Fraction(0) for _ in range(complex_.ambient_dim))
        weight = Fraction(0)
        for s in sigmas:
            v = _normal_vector(complex_, tau_idx, s)
            lin_s = phi.pieces[s][0]
            weight += a.weights[s] * vdot(lin_s, v)
            total = vadd(total, vscale(a.weights[s], v))
        lin_tau = phi.linear_on_face(tau_idx, sigmas[0])
        weight -= vdot(lin_tau, total)
        if weight != 0:
            if weight.denominator != 1:
                raise ValueError("non-integer corner-locus weight; non-integral data")
            new_weights[tau_idx] = int(weight)
    return TropicalCycle(complex_, a.dim - 1, new_weights)


class DivisorPowerTower:
    """Cycles X, D.X, D^2.X, ... sharing one master complex, with supports."""

    def __init__(self, base_poly, layers: list[TropicalCycle]):
        self.base = base_poly
        self.layers = layers

    def support(self, k: int) -> set[int]:
        """Cell indices of |D^k| (closure) in the master complex; k = 0 gives
        the full support of X."""
        if k >= len(self.layers):
            return set()
        return self.layers[k].support_cells()

    def local_index(self, x) -> int:
        """#{k : x in |D^k|}."""
        if not self.layers[0].support_contains(x):
            raise ValueError("point outside the ambient cycle")
        count = 0
        for layer in self.layers:
            if layer.support_contains(x):
                count += 1
        return count


def power_tower(f, x_cycle: TropicalCycle, kmax: int | None = None) -> DivisorPowerTower:
    """Iterate the divisor pairing of a tropical polynomial f on a cycle,
    restricting f to each successive support."""
    from .hypersurface import cartier_from_polynomial  # cycle-free layering

    if kmax is None:
        kmax = x_cycle.dim
    layers = [x_cycle]
    current = x_cycle
    for _ in range(kmax):
        if current.is_empty() or current.dim == 0:
            break
        phi = cartier_from_polynomial(f, current)
        current = divisor_intersect(phi)
        layers.append(current)
    return DivisorPowerTower(f, layers)


# -- position checks -----------------------------------------------------------


@dataclass
class PositionReport:
    ok: bool
    witness: object = None


def moderate_position(pairs) -> PositionReport:
    """Each pair is (local cone of Y, local cone of X) at one sampled point;
    moderate position requires lineal(Y) to be a PROPER subspace of
    lineal(X) at every point."""
    for idx, (y_fan, x_fan) in enumerate(pairs):
        ly = lineality_space(y_fan)
        lx = lineality_space(x_fan)
        lx_vecs = [tuple(Fraction(c) for c in b) for b in lx]
        contained = all(in_span(tuple(Fraction(c) for c in b), lx_vecs) for b in ly)
        if not contained or len(ly) >= len(lx):
            return PositionReport(ok=False, witness=idx)
    return PositionReport(ok=True)


@dataclass
class UniformityResult:
    status: str  # "true", "false", or "unsupported"
    reason: str = ""

    def __bool__(self):
        return self.status == "true"


def relatively_uniform(y_local: TropicalCycle, x_local: PolyhedralComplex) -> UniformityResult:
    """Whether the local-cone inclusion Y in X matches the model
    L_M x L_{U_{r,r+1}} inside L_M x L_{U_{r+1,r+1}} for Boolean M.

    Supported catalogue: X locally linear (its local cone is a linear
    subspace); Y of codimension 1 in X whose quotient by its lineality is the
    fan over r+1 primitive rays summing to zero, any r of which form a lattice
    basis, with all weights 1. Anything else is flagged unsupported.
    """
    n = x_local.ambient_dim
    x_max = x_local.maximal_cells()
    lx = lineality_space(x_local)
    if len(x_max) != 1 or x_local.cells[x_max[0]].dim != len(lx):
        return UniformityResult("unsupported", "ambient local cone is not a linear space")
    w_basis = [tuple(Fraction(c) for c in b) for b in lx]
    dim_w = len(w_basis)
    y_complex = y_local.complex
    y_cells = [y_complex.cells[i] for i in y_local.weights]
    if not y_cells:
        return UniformityResult("unsupported", "empty local cycle")
    if any(w != 1 for w in y_local.weights.values()):
        return UniformityResult("false", "non-unit weight on a local cone")
    dim_y = y_local.dim
    if dim_y != dim_w - 1:
        return UniformityResult("unsupported", "Y is not of codimension 1 in X")
    ly = lineality_space(
        PolyhedralComplex(n, [y_complex.cells[i] for i in sorted(y_local.weights)], set())
    )
    m = len(ly)
    r = dim_w - m
    # Containment of Y in X's span.
    for c in y_cells:
        for d in c.directions():
            if not in_span(d, w_basis):
                return UniformityResult("false", "Y not contained in the ambient local cone")
    if r == 1:
        # Y = its own lineality space: a smooth point of D in a smooth chart.
        if all(c.dim == m for c in y_cells):
            return UniformityResult("true")
        return UniformityResult("false", "expected a linear local cone for r=1")
    # Quotient by Y's lineality: classes of the cells' rays modulo lineal(Y).
    ly_vecs = [tuple(Fraction(c) for c in b) for b in ly]
    class_reps: dict[tuple, tuple] = {}
    for c in y_cells:
        for l in c.lineality:
            lv = tuple(Fraction(x) for x in l)
            if not in_span(lv, ly_vecs):
                return UniformityResult("false", "cell lineality exceeds Y's lineality")
        for ray in c.rays:
            rv = tuple(Fraction(x) for x in ray)
            red = _reduce_mod_subspace(rv, ly_vecs, w_basis)
            if red is None:
                return UniformityResult("false", "ray not inside the ambient span")
            if is_zero_vec(red):
                return UniformityResult("false", "a ray collapses into the lineality space")
            key = primitive(red)
            prev = class_reps.get(key)
            if prev is not None and not is_zero_vec(
                _reduce_mod_subspace(vsub(rv, prev), ly_vecs, w_basis)
            ):
                return UniformityResult("false", "overlapping non-equal rays in the quotient")
            class_reps.setdefault(key, tuple(Fraction(x) for x in ray))
    reps = [class_reps[k] for k in sorted(class_reps)]
    if len(reps) != r + 1:
        return UniformityResult("false", f"expected {r + 1} rays after quotient, got {len(reps)}")
    total = tuple(Fraction(0) for _ in range(n))
    for rep in reps:
        total = vadd(total, rep)
    if not (is_zero_vec(total) or (ly_vecs and in_span(total, ly_vecs))):
        return UniformityResult("false", "quotient rays do not sum to zero")
    # Any r of the classes, together with lineal(Y), must form a lattice basis
    # of the saturated lattice of W: coordinates w.r.t. that lattice must have
    # determinant +-1.
    from .linalg import lattice_basis_of_span

    w_lattice = lattice_basis_of_span(w_basis, n)
    rows = list(zip(*w_lattice))

    def w_coords(v):
        sol = solve_linear([list(row) for row in rows], v)
        if sol is None:
            raise ValueError("vector outside the ambient span")
        return sol

    ly_coords = [w_coords(b) for b in ly_vecs]
    rep_coords = [w_coords(rep) for rep in reps]
    for subset in itertools.combinations(range(r + 1), r):
        mat = ly_coords + [rep_coords[i] for i in subset]
        d = det(mat)
        if abs(d) != 1:
            return UniformityResult("false", "a ray subset is not a lattice basis")
    return UniformityResult("true")


def _reduce_mod_subspace(v, sub_vecs, ambient_basis):
    """Component of v modulo the subspace spanned by sub_vecs (inside the span
    of ambient_basis); None if v is outside the ambient span."""
    if not in_span(v, ambient_basis):
        return None
    if not sub_vecs:
        return tuple(v)
    # Orthogonal-complement reduction: subtract the projection solving the
    # Gram system; linear in v and vanishing exactly on the subspace, so it is
    # a class invariant of v modulo the subspace.
    k = len(sub_vecs)
    gram = [[vdot(sub_vecs[i], sub_vecs[j]) for j in range(k)] for i in range(k)]
    rhs = [vdot(sub_vecs[i], v) for i in range(k)]
    c = solve_linear(gram, rhs)
    out = tuple(v)
    for ci, sv in zip(c, sub_vecs):
        out = vsub(out, vscale(ci, sv))
    return out




def local_cycle(a: TropicalCycle, x) -> TropicalCycle:
    """Star of a cycle at a point x of its support: the fan of tangent cones
    of the cells through x, with the inherited weights."""
    fan = local_cone(a.complex, x)
    weights: dict[int, int] = {}
    for i, w in a.weights.items():
        if a.complex.cells[i].contains(x):
            j = fan.index_map[i]
            weights[j] = weights.get(j, 0) + w
    return TropicalCycle(fan, a.dim, weights)
