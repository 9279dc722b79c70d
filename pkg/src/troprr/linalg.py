"""Exact rational and integer linear algebra used by the geometry modules.

Everything here works over ``fractions.Fraction`` (or plain ints for lattice
computations); no floating point is ever introduced.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]


def frac(x) -> Fraction:
    """Coerce an int, string ("p/q"), or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


def vadd(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Sequence) -> Vec:
    return tuple(c * a for a in v)


def vdot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v, strict=True))


def is_zero_vec(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def gcd_list(xs: Iterable[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, abs(x))
    return g


def primitive(v: Sequence) -> IntVec:
    """Scale a nonzero rational vector to the primitive integer vector with the
    same orientation (gcd of entries 1)."""
    fv = [Fraction(a) for a in v]
    if all(a == 0 for a in fv):
        raise ValueError("zero vector has no primitive representative")
    denom_lcm = 1
    for a in fv:
        d = a.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    iv = [int(a * denom_lcm) for a in fv]
    g = gcd_list(iv)
    return tuple(x // g for x in iv)


def sign_normalize(v: Sequence[int]) -> IntVec:
    """Flip sign so the first nonzero entry is positive (canonical form for
    lineality generators, where orientation is immaterial)."""
    for a in v:
        if a != 0:
            return tuple(v) if a > 0 else tuple(-x for x in v)
    return tuple(v)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fraction. Returns (rref_rows, pivot_cols)."""
    m = [[Fraction(a) for a in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [a / pv for a in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def matrix_rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    _, pivots = rref(rows)
    return len(pivots)


def solve_linear(a_rows: Sequence[Sequence], b: Sequence) -> Vec | None:
    """One exact solution of A x = b, or None if inconsistent."""
    if not a_rows:
        return ()
    ncols = len(a_rows[0])
    aug = [list(row) + [bi] for row, bi in zip(a_rows, b, strict=True)]
    m, pivots = rref(aug)
    for row in m:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = m[r][-1]
    return tuple(x)


def nullspace(rows: Sequence[Sequence]) -> list[Vec]:
    """Basis of {x : A x = 0} over the rationals."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = rref(rows)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix over Fraction (fraction-free pivoting is
    unnecessary at this scale)."""
    n = len(rows)
    m = [[Fraction(a) for a in row] for row in rows]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result * sign


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """Basis of the saturated lattice {x in Z^ncols : A x = 0} for an integer
    matrix A, via unimodular column reduction."""
    m = [list(row) for row in rows]
    nrows = len(m)
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op_swap(j, k):
        for row in m:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    def col_op_add(j, k, q):
        # column j += q * column k
        for row in m:
            row[j] += q * row[k]
        for row in u:
            row[j] += q * row[k]

    def col_op_neg(j):
        for row in m:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    pivot_col = 0
    for r in range(nrows):
        if pivot_col >= ncols:
            break
        # gcd-reduce row r across columns pivot_col..ncols-1
        while True:
            nz = [j for j in range(pivot_col, ncols) if m[r][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(m[r][j]))
            if jmin != pivot_col:
                col_op_swap(pivot_col, jmin)
            if m[r][pivot_col] < 0:
                col_op_neg(pivot_col)
            done = True
            for j in range(pivot_col + 1, ncols):
                if m[r][j] != 0:
                    q = -(m[r][j] // m[r][pivot_col])
                    col_op_add(j, pivot_col, q)
                    if m[r][j] != 0:
                        done = False
            if done and all(m[r][j] == 0 for j in range(pivot_col + 1, ncols)):
                break
        if m[r][pivot_col] != 0:
            pivot_col += 1
    kernel_cols = []
    for j in range(pivot_col, ncols):
        if all(m[r][j] == 0 for r in range(nrows)):
            kernel_cols.append(tuple(u[i][j] for i in range(ncols)))
    # Columns past pivot_col are exactly the kernel; keep the guard anyway.
    return kernel_cols


def scale_rows_to_int(rows: Sequence[Sequence]) -> list[IntVec]:
    out = []
    for row in rows:
        fr = [Fraction(a) for a in row]
        denom_lcm = 1
        for a in fr:
            d = a.denominator
            denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
        out.append(tuple(int(a * denom_lcm) for a in fr))
    return out


def lattice_basis_of_span(vectors: Sequence[Sequence], ambient_dim: int) -> list[IntVec]:
    """Integer basis of the saturated lattice span(vectors) ∩ Z^n."""
    vecs = [v for v in vectors if not is_zero_vec(v)]
    if not vecs:
        return []
    normals = nullspace(vecs)
    if not normals:
        return [tuple(1 if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim)]
    int_normals = scale_rows_to_int(normals)
    return list(integer_kernel(int_normals, ambient_dim))


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    vecs = [w for w in vectors if not is_zero_vec(w)]
    if is_zero_vec(v):
        return True
    if not vecs:
        return False
    return matrix_rank(vecs) == matrix_rank(list(vecs) + [list(v)])


def quotient_generator(
    tau_span: Sequence[Sequence],
    sigma_lattice: Sequence[Sequence[int]],
    reference: Sequence,
    ambient_dim: int,
) -> IntVec:
    """Primitive generator of (lattice of sigma) / (lattice of tau), oriented
    so it points to the same side of tau as ``reference``.

    tau_span: vectors spanning the direction space of tau (dim one less than
    sigma). sigma_lattice: integer basis of sigma's saturated direction
    lattice. reference: any vector in sigma's span not in tau's span.
    """
    tau_vecs = [v for v in tau_span if not is_zero_vec(v)]
    # Functional vanishing on tau, nonzero on sigma.
    if tau_vecs:
        candidates = nullspace(tau_vecs)
    else:
        candidates = [
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(ambient_dim))
            for i in range(ambient_dim)
        ]
    ell = None
    for cand in candidates:
        if any(vdot(cand, b) != 0 for b in sigma_lattice):
            ell = cand
            break
    if ell is None:
        raise ValueError("sigma does not properly contain tau")
    # Image ell(sigma lattice) is a subgroup gZ of Q; find a lattice vector
    # hitting +/- g by the extended euclidean recombination.
    values = [vdot(ell, b) for b in sigma_lattice]
    denom_lcm = 1
    for a in values:
        d = Fraction(a).denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    int_values = [int(Fraction(a) * denom_lcm) for a in values]
    coeffs = _extended_gcd_combo(int_values)
    w = tuple(
        sum(c * b[i] for c, b in zip(coeffs, sigma_lattice)) for i in range(ambient_dim)
    )
    val = vdot(ell, w)
    ref_val = vdot(ell, reference)
    if ref_val == 0:
        raise ValueError("reference vector lies in tau's span")
    if (val > 0) != (ref_val > 0):
        w = tuple(-x for x in w)
    return w


def _extended_gcd_combo(values: Sequence[int]) -> list[int]:
    """Integer coefficients c with sum(c_i * values_i) = gcd(values) > 0."""
    coeffs = [0] * len(values)
    g = 0
    g_coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            g_coeffs = [0] * len(values)
            g_coeffs[i] = 1 if v > 0 else -1
            continue
        a, b = g, v
        # extended gcd of (a, b)
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        new_g = old_r
        if new_g < 0:
            new_g, old_s, old_t = -new_g, -old_s, -old_t
        g_coeffs = [old_s * c for c in g_coeffs]
        g_coeffs[i] += old_t
        g = new_g
    if g == 0:
        raise ValueError("all values are zero")
    coeffs = g_coeffs
    return coeffs
