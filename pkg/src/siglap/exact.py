"""Exact rational vectors and matrices.

Every scalar is a ``fractions.Fraction``, so all results are exact and every
value is automatically kept in canonical form (positive denominator, reduced
to lowest terms).  Vectors are plain lists of Fractions and matrices are
lists of rows; operations never mutate their arguments.  Dimensions stay at
desk scale (tens of rows), so dense row-major storage and textbook
elimination are all that is needed.
"""

from fractions import Fraction
from math import gcd

Vec = list[Fraction]
Mat = list[list[Fraction]]


def vector(entries) -> Vec:
    """Build a vector, converting entries (int/str/Fraction) to Fractions."""
    return [Fraction(e) for e in entries]


def matrix(rows) -> Mat:
    """Build a matrix from an iterable of rows; rows must all have equal length."""
    out = [[Fraction(e) for e in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def shape(a: Mat) -> tuple[int, int]:
    """Return (rows, cols) of a matrix; raises on an empty or ragged matrix."""
    if not a or not a[0]:
        raise ValueError("matrix must have at least one row and one column")
    cols = len(a[0])
    if any(len(r) != cols for r in a):
        raise ValueError("matrix rows have unequal lengths")
    return len(a), cols


def identity(n: int) -> Mat:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Mat:
    return [[Fraction(0)] * n for _ in range(m)]


def transpose(a: Mat) -> Mat:
    shape(a)
    return [list(col) for col in zip(*a)]


def vec_inf_norm(x: Vec) -> Fraction:
    """Maximum absolute entry of a nonempty vector."""
    if not x:
        raise ValueError("vector must be nonempty")
    return max(abs(e) for e in x)


def induced_inf_norm(a: Mat) -> Fraction:
    """Induced (inf, inf) operator norm: the maximum absolute row sum."""
    shape(a)
    return max(sum(abs(e) for e in row) for row in a)


def mat_vec(a: Mat, x: Vec) -> Vec:
    m, n = shape(a)
    if len(x) != n:
        raise ValueError(f"dimension mismatch: {m}x{n} matrix times length-{len(x)} vector")
    zero = Fraction(0)
    return [sum((ai * xi for ai, xi in zip(row, x) if ai), zero) for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"dimension mismatch: {m}x{k} times {k2}x{n}")
    bt = list(zip(*b))
    zero = Fraction(0)
    return [
        [sum((ai * bi for ai, bi in zip(row, col) if ai), zero) for col in bt]
        for row in a
    ]


def rank(a: Mat) -> int:
    """Rank over the rationals by Gaussian elimination.

    Pivots on the largest absolute entry in each column; with exact
    arithmetic any nonzero pivot is valid, the choice only damps the
    growth of intermediate numerators.
    """
    m, n = shape(a)
    work = [row[:] for row in a]
    r = 0
    for col in range(n):
        pr, best = -1, None
        for i in range(r, m):
            v = abs(work[i][col])
            if v and (best is None or v > best):
                pr, best = i, v
        if pr < 0:
            continue
        work[r], work[pr] = work[pr], work[r]
        prow = work[r]
        pv = prow[col]
        for i in range(r + 1, m):
            f = work[i][col]
            if f:
                f = f / pv
                row = work[i]
                for j in range(col, n):
                    if prow[j]:
                        row[j] -= f * prow[j]
        r += 1
        if r == m:
            break
    return r


def solve_square(a: Mat, b: Mat) -> Mat:
    """Solve A X = B for a square invertible A by elimination with partial pivoting."""
    m, n = shape(a)
    if m != n:
        raise ValueError("coefficient matrix must be square")
    mb, nb = shape(b)
    if mb != n:
        raise ValueError("right-hand side has wrong number of rows")
    work = [a[i][:] + b[i][:] for i in range(n)]
    width = n + nb
    for col in range(n):
        pr, best = -1, None
        for i in range(col, n):
            v = abs(work[i][col])
            if v and (best is None or v > best):
                pr, best = i, v
        if pr < 0:
            raise ValueError("matrix is singular")
        work[col], work[pr] = work[pr], work[col]
        prow = work[col]
        pv = prow[col]
        for i in range(col + 1, n):
            f = work[i][col]
            if f:
                f = f / pv
                row = work[i]
                for j in range(col, width):
                    if prow[j]:
                        row[j] -= f * prow[j]
    x = zeros(n, nb)
    for i in range(n - 1, -1, -1):
        row = work[i]
        for j in range(nb):
            s = row[n + j] - sum(row[k] * x[k][j] for k in range(i + 1, n) if row[k])
            x[i][j] = s / row[i]
    return x


def nullspace(a: Mat) -> list[Vec]:
    """Basis of the right null space {x : A x = 0}, via reduced row echelon form."""
    m, n = shape(a)
    work = [row[:] for row in a]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pr, best = -1, None
        for i in range(r, m):
            v = abs(work[i][col])
            if v and (best is None or v > best):
                pr, best = i, v
        if pr < 0:
            continue
        work[r], work[pr] = work[pr], work[r]
        pv = work[r][col]
        work[r] = [e / pv for e in work[r]]
        prow = work[r]
        for i in range(m):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [e - f * p if p else e for e, p in zip(work[i], prow)]
        pivots.append(col)
        r += 1
        if r == m:
            break
    basis = []
    pivot_set = set(pivots)
    for free in (c for c in range(n) if c not in pivot_set):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row_i, pc in enumerate(pivots):
            v[pc] = -work[row_i][free]
        basis.append(v)
    return basis


def integer_primitive(x: Vec) -> Vec:
    """Scale a nonzero rational vector to coprime integers with the last
    nonzero entry positive (a canonical spanning vector for its line)."""
    if all(e == 0 for e in x):
        raise ValueError("vector must be nonzero")
    den_lcm = 1
    for e in x:
        den_lcm = den_lcm * e.denominator // gcd(den_lcm, e.denominator)
    ints = [int(e * den_lcm) for e in x]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    last = next(v for v in reversed(ints) if v)
    if last < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]
