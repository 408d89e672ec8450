"""Incidence matrices and the eigenvalue side of the theory.

``mu_infinity`` computes the smallest normalized signless
infinity-Laplacian eigenvalue

    mu = min over ||x||_inf = 1 of  max over edges ij of |x_i/d_i + x_j/d_j|,

which is exactly the minimum of ||W x||_inf over the unit infinity-sphere
for the weighted signless incidence matrix W = B D^-1.  The minimum over
the sphere is attained on one of the faces x_k = +-1, and negating x leaves
||W x||_inf unchanged, so it suffices to fix x_k = +1 for each k in turn
and solve a small exact LP over the remaining cube.

``q_infinity_lp`` runs the same face decomposition on the unweighted
incidence matrix B, and ``q_infinity_formula`` evaluates the known
closed form 2 / max_u l(u), where l(u) is the length of the shortest odd
closed walk through u.  The two are independent cross-checks.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, HypothesisError
from .exact import Mat, Vec, mat_vec, vec_inf_norm
from .graphs import Graph, degrees, is_bipartite, is_connected, odd_walk_length
from .lp import OPTIMAL, LPProblem, solve


@dataclass(frozen=True)
class WeightedIncidence:
    """W = B D^-1 together with its source graph and degree vector."""

    W: Mat
    graph: Graph
    degs: Vec


@dataclass(frozen=True)
class EigenResult:
    """mu with an exact witness: ||optimal_x||_inf = 1 and
    ||W optimal_x||_inf = mu, the maximum attained at tight_edge."""

    mu: Fraction
    optimal_x: Vec
    tight_edge: int
    fixed_coord: int


def incidence_matrix(g: Graph) -> Mat:
    """Edge-vertex 0/1 incidence matrix B, rows in edge order."""
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for u, v in g.edges:
        row = [zero] * g.n
        row[u] = one
        row[v] = one
        rows.append(row)
    return rows


def weighted_incidence(g: Graph) -> WeightedIncidence:
    """Weighted signless incidence matrix W = B D^-1.

    The row of edge (i, j) holds 1/d_i and 1/d_j; every column sums to 1.
    Raises HypothesisError when some vertex is isolated (D not invertible).
    """
    degs = degrees(g)
    isolated = [i for i, d in enumerate(degs) if d == 0]
    if isolated:
        raise HypothesisError(f"isolated vertex v{isolated[0] + 1}: degree matrix is singular")
    zero = Fraction(0)
    rows = []
    for u, v in g.edges:
        row = [zero] * g.n
        row[u] = 1 / degs[u]
        row[v] = 1 / degs[v]
        rows.append(row)
    return WeightedIncidence(rows, g, degs)


def evaluate(w: WeightedIncidence, x: Vec) -> Fraction:
    """Rayleigh-style ratio ||W x||_inf / ||x||_inf, an upper bound for mu."""
    if len(x) != w.graph.n:
        raise ValueError("vector length does not match vertex count")
    norm_x = vec_inf_norm(x)
    if norm_x == 0:
        raise ValueError("vector must be nonzero")
    return vec_inf_norm(mat_vec(w.W, x)) / norm_x


def _face_lp(rows: Mat, n: int, k: int) -> tuple[Fraction, Vec]:
    """min t s.t. -t <= (M x)_e <= t, x in [-1,1]^n, x_k = 1."""
    nedges = len(rows)
    objective = [Fraction(0)] * n + [Fraction(1)]
    constraints = []
    for row in rows:
        constraints.append((list(row) + [Fraction(-1)], "<=", Fraction(0)))
        constraints.append((list(row) + [Fraction(1)], ">=", Fraction(0)))
    bounds: list[tuple[Fraction | None, Fraction | None]] = [
        (Fraction(-1), Fraction(1)) for _ in range(n)
    ]
    bounds[k] = (Fraction(1), Fraction(1))
    bounds.append((Fraction(0), None))
    sol = solve(LPProblem(objective, constraints, bounds))
    if sol.status != OPTIMAL or len(sol.point) != n + 1:
        raise ConsistencyError(f"face LP (k={k}, m={nedges}) did not solve to optimality")
    return sol.value, sol.point[:n]


def _sphere_min_max(rows: Mat, n: int) -> tuple[Fraction, Vec, int, int]:
    """Minimize max_e |(M x)_e| over ||x||_inf = 1 by the face decomposition.

    Ties between faces keep the lowest fixed coordinate; the tight edge is
    the lowest-index row attaining the maximum at the winner.
    """
    best_val = None
    best_x = None
    best_k = -1
    for k in range(n):
        val, x = _face_lp(rows, n, k)
        if best_val is None or val < best_val:
            best_val, best_x, best_k = val, x, k
    image = mat_vec(rows, best_x)
    if vec_inf_norm(image) != best_val:
        raise ConsistencyError("face LP witness does not reproduce its optimum")
    tight = next(e for e, v in enumerate(image) if abs(v) == best_val)
    return best_val, best_x, tight, best_k


def mu_infinity(g: Graph) -> EigenResult:
    """Smallest normalized signless infinity-Laplacian eigenvalue with witness.

    Connected bipartite graphs get the exact value 0 with the certificate
    x_i = side_i * d_i / max-degree, under which every edge value vanishes.
    Non-bipartite graphs are solved by n face LPs.  Disconnected input is
    rejected: the invariant is only meaningful per component.
    """
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    w = weighted_incidence(g)
    bip, side = is_bipartite(g)
    if bip:
        degs = w.degs
        maxdeg = max(degs)
        star = min(i for i in range(g.n) if degs[i] == maxdeg)
        if side[star] < 0:
            side = [-s for s in side]
        x = [side[i] * degs[i] / maxdeg for i in range(g.n)]
        return EigenResult(Fraction(0), x, 0, star)
    val, x, tight, k = _sphere_min_max(w.W, g.n)
    return EigenResult(val, x, tight, k)


def q_infinity_formula(g: Graph) -> Fraction:
    """Closed form 2 / max_u l(u) for the unnormalized invariant; 0 when bipartite."""
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    lengths = [odd_walk_length(g, u) for u in range(g.n)]
    if any(l is None for l in lengths):
        return Fraction(0)
    return Fraction(2, max(lengths))


def q_infinity_lp(g: Graph) -> Fraction:
    """min over ||x||_inf = 1 of max_{ij in E} |x_i + x_j|, by face LPs.

    Independent of q_infinity_formula: this one never looks at walks.
    """
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    bip, _ = is_bipartite(g)
    if bip:
        return Fraction(0)
    b = incidence_matrix(g)
    val, _, _, _ = _sphere_min_max(b, g.n)
    return val
