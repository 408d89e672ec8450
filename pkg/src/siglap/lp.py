"""Exact rational linear programming.

A two-phase tableau simplex with Bland's anti-cycling rule, solved entirely
in rational arithmetic: no tolerances, no floating point, and guaranteed
finite termination.  On top of the general solver sit two L1 minimizers:
``min_l1_affine`` (smallest 1-norm point of an affine subspace, via the
standard positive/negative split) and ``weighted_median_l1`` (the scalar
weighted-median problem).

The public interface speaks ``fractions.Fraction``; internally the tableau
runs on ``gmpy2.mpq`` when available, which is an order of magnitude faster
with identical exact semantics.
"""

from dataclasses import dataclass, field
from fractions import Fraction

try:
    from gmpy2 import mpq as _q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _q = Fraction

from .exact import Mat, Vec, shape

RELATIONS = ("<=", "=", ">=")

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPProblem:
    """minimize objective . x subject to the listed constraints and bounds.

    constraints: (coefficient row, relation, right-hand side) triples with
    relation one of "<=", "=", ">=".  bounds: one (lower, upper) pair per
    variable, either side None for unbounded.
    """

    objective: Vec
    constraints: list[tuple[Vec, str, Fraction]]
    bounds: list[tuple[Fraction | None, Fraction | None]] = field(default_factory=list)


@dataclass
class LPSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    point: Vec | None = None


def _frac(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def _pivot(tableau, basis, r, c):
    prow = tableau[r]
    pv = prow[c]
    if pv != 1:
        prow = [v / pv for v in prow]
        tableau[r] = prow
    for i, row in enumerate(tableau):
        if i == r:
            continue
        f = row[c]
        if f:
            tableau[i] = [a - f * b if b else a for a, b in zip(row, prow)]
    basis[r] = c


def _reduced_cost_row(tableau, basis, costs):
    row = list(costs) + [_q(0)]
    for i, b in enumerate(basis):
        cb = costs[b]
        if cb:
            ti = tableau[i]
            row = [rv - cb * tv if tv else rv for rv, tv in zip(row, ti)]
    return row


def _run_simplex(tableau, basis, eligible):
    """Minimize with Bland's rule: entering column is the lowest-index one
    with a negative reduced cost, leaving row breaks ratio ties by the
    lowest basic-variable index.  Returns "optimal" or "unbounded"."""
    nrows = len(tableau) - 1
    limit = 10000 + 200 * (nrows + eligible)  # Bland terminates; backstop only
    for _ in range(limit):
        cost = tableau[-1]
        enter = -1
        for j in range(eligible):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        bvar = -1
        for i in range(nrows):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < bvar):
                    best, leave, bvar = ratio, i, basis[i]
        if leave < 0:
            return UNBOUNDED
        _pivot(tableau, basis, leave, enter)
    raise RuntimeError("simplex iteration backstop exceeded")


def solve(problem: LPProblem) -> LPSolution:
    """Solve an exact LP; classifies optimal / infeasible / unbounded.

    The returned point of an optimal solution is a basic feasible solution
    satisfying every constraint and bound exactly.
    """
    nv = len(problem.objective)
    bounds = problem.bounds if problem.bounds else [(None, None)] * nv
    if len(bounds) != nv:
        raise ValueError("bounds length does not match variable count")
    for coefs, rel, _ in problem.constraints:
        if len(coefs) != nv:
            raise ValueError("constraint row length does not match variable count")
        if rel not in RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")

    zero = _q(0)
    one = _q(1)

    # Normalize all variables to x' >= 0: fix lo==hi variables outright,
    # shift finite lower bounds, mirror upper-only bounds, split free ones.
    var_cols: list[list[tuple[int, int]]] = [[] for _ in range(nv)]  # (column, sign)
    var_const = [zero] * nv
    uppers: list[tuple[int, object]] = []
    ncols = 0
    for j, (lo, hi) in enumerate(bounds):
        lo_q = None if lo is None else _q(lo)
        hi_q = None if hi is None else _q(hi)
        if lo_q is not None and hi_q is not None and lo_q > hi_q:
            return LPSolution(INFEASIBLE)
        if lo_q is not None and hi_q is not None and lo_q == hi_q:
            var_const[j] = lo_q
            continue
        if lo_q is not None:
            var_cols[j] = [(ncols, 1)]
            var_const[j] = lo_q
            if hi_q is not None:
                uppers.append((ncols, hi_q - lo_q))
            ncols += 1
        elif hi_q is not None:
            var_cols[j] = [(ncols, -1)]
            var_const[j] = hi_q
            ncols += 1
        else:
            var_cols[j] = [(ncols, 1), (ncols + 1, -1)]
            ncols += 2

    rows = []
    for coefs, rel, rhs in problem.constraints:
        crow = [zero] * ncols
        r = _q(rhs)
        for j, a in enumerate(coefs):
            if a == 0:
                continue
            aq = _q(a)
            r -= aq * var_const[j]
            for c, s in var_cols[j]:
                crow[c] += aq if s > 0 else -aq
        rows.append((crow, rel, r))
    for c, ub in uppers:
        crow = [zero] * ncols
        crow[c] = one
        rows.append((crow, "<=", ub))

    # Standard form: nonnegative right-hand sides, slack per inequality.
    std = []
    for crow, rel, r in rows:
        if not any(crow):
            satisfied = r == 0 if rel == "=" else (r >= 0 if rel == "<=" else r <= 0)
            if not satisfied:
                return LPSolution(INFEASIBLE)
            continue
        if r < 0:
            crow = [-v for v in crow]
            r = -r
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        std.append((crow, rel, r))

    nslack = sum(1 for _, rel, _ in std if rel != "=")
    nart = sum(1 for _, rel, _ in std if rel != "<=")
    width = ncols + nslack + nart
    tableau = []
    basis: list[int] = []
    si, ai = ncols, ncols + nslack
    art_cols = []
    for crow, rel, r in std:
        row = crow + [zero] * (nslack + nart) + [r]
        if rel == "<=":
            row[si] = one
            basis.append(si)
            si += 1
        elif rel == ">=":
            row[si] = -one
            si += 1
            row[ai] = one
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        else:
            row[ai] = one
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        tableau.append(row)

    if art_cols:
        costs1 = [zero] * width
        for c in art_cols:
            costs1[c] = one
        tableau.append(_reduced_cost_row(tableau, basis, costs1))
        _run_simplex(tableau, basis, width)  # bounded below by 0, never unbounded
        if -tableau[-1][-1] != 0:
            return LPSolution(INFEASIBLE)
        tableau.pop()
        # Drive leftover zero-valued artificials out of the basis; a row with
        # no nonzero structural/slack entry is redundant and is dropped.
        art_set = set(art_cols)
        keep = []
        for i in range(len(basis)):
            if basis[i] in art_set:
                row = tableau[i]
                j = next((c for c in range(ncols + nslack) if row[c]), -1)
                if j < 0:
                    continue
                _pivot(tableau, basis, i, j)
            keep.append(i)
        if len(keep) < len(basis):
            tableau = [tableau[i] for i in keep]
            basis = [basis[i] for i in keep]

    costs2 = [zero] * width
    for j, cj in enumerate(problem.objective):
        if cj == 0:
            continue
        cq = _q(cj)
        for c, s in var_cols[j]:
            costs2[c] += cq if s > 0 else -cq
    tableau.append(_reduced_cost_row(tableau, basis, costs2))
    status = _run_simplex(tableau, basis, ncols + nslack)
    if status == UNBOUNDED:
        return LPSolution(UNBOUNDED)

    colval = [zero] * width
    for i, b in enumerate(basis):
        colval[b] = tableau[i][-1]
    point = []
    for j in range(nv):
        x = var_const[j]
        for c, s in var_cols[j]:
            x = x + colval[c] if s > 0 else x - colval[c]
        point.append(x)
    value = sum((_q(cj) * x for cj, x in zip(problem.objective, point)), zero)
    return LPSolution(OPTIMAL, _frac(value), [_frac(x) for x in point])


def min_l1_affine(a: Mat, b: Vec) -> tuple[Vec, Fraction]:
    """Minimize ||x||_1 over the affine subspace {x : A x = b}.

    Splits x into nonnegative parts (x = p - q) and minimizes the sum of all
    parts; at a simplex vertex the parts are complementary, so the optimum
    equals the 1-norm minimum.  Raises ValueError when A x = b is infeasible.
    """
    m, n = shape(a)
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    objective = [Fraction(1)] * (2 * n)
    constraints = []
    for i in range(m):
        row = list(a[i]) + [-e for e in a[i]]
        constraints.append((row, "=", b[i]))
    bnds = [(Fraction(0), None)] * (2 * n)
    sol = solve(LPProblem(objective, constraints, bnds))
    if sol.status != OPTIMAL:
        raise ValueError("linear system A x = b is infeasible")
    x = [p - qv for p, qv in zip(sol.point[:n], sol.point[n:])]
    return x, sum(abs(e) for e in x)


def weighted_median_l1(points) -> tuple[Fraction, Fraction]:
    """Minimize f(z) = sum of w_k * |z - p_k| over scalar z.

    Returns (z, f(z)) where z is the left endpoint of the minimizer set: the
    smallest position whose cumulative weight reaches half the total.  All
    weights must be strictly positive.
    """
    pts = [(Fraction(p), Fraction(w)) for p, w in points]
    if not pts:
        raise ValueError("at least one weighted point is required")
    if any(w <= 0 for _, w in pts):
        raise ValueError("weights must be positive")
    pts.sort(key=lambda t: t[0])
    total = sum(w for _, w in pts)
    half = total / 2
    acc = Fraction(0)
    z = pts[-1][0]
    for p, w in pts:
        acc += w
        if acc >= half:
            z = p
            break
    value = sum(w * abs(z - p) for p, w in pts)
    return z, value
