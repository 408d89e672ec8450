"""Minimal infinity-norm generalized inverses of the weighted incidence matrix.

For a connected non-bipartite graph W has full column rank, so its
generalized inverses (W G W = W) are exactly its left inverses (G W = I).
The minimal induced (inf, inf) norm over all of them is found row by row:
the norm is the largest absolute row sum, the row constraints g_i W = e_i^T
are independent, and so the min of the max equals the max of the per-row
minima.  Each row is a 1-norm minimization over an affine subspace, solved
exactly by LP.

For bicyclic graphs (m = n + 1) the left null space of W is a line, so each
row's search space is one-dimensional and the LP collapses to a weighted
median; ``min_norm_bicyclic_median`` takes that fast path and must agree
with the LP route exactly.

The reciprocal of the minimal norm equals mu_infinity; ``verify_duality``
checks that identity bit-exactly from both independently computed sides.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError
from .exact import (
    Mat,
    Vec,
    identity,
    integer_primitive,
    mat_mul,
    nullspace,
    shape,
    solve_square,
    transpose,
)
from .graphs import Graph, is_bipartite, is_connected
from .lp import min_l1_affine, weighted_median_l1
from .spectral import mu_infinity, weighted_incidence


@dataclass(frozen=True)
class GenInvResult:
    """A norm-minimal left inverse: G W = I, norm = max of row_values
    = induced (inf, inf) norm of G."""

    G: Mat
    norm: Fraction
    row_values: Vec


@dataclass(frozen=True)
class KernelRow:
    """Normalized spanning row of the left null space {z : z W = 0}:
    coprime integer entries, last nonzero entry positive."""

    beta: Vec


@dataclass(frozen=True)
class DualityReport:
    mu: Fraction
    norm: Fraction
    product: Fraction
    passed: bool


def is_generalized_inverse(w: Mat, g: Mat) -> bool:
    """True iff W G W = W exactly."""
    m, n = shape(w)
    if shape(g) != (n, m):
        raise ValueError(f"G must be {n}x{m} for an {m}x{n} W")
    return mat_mul(mat_mul(w, g), w) == w


def _require_nonbipartite_connected(g: Graph) -> None:
    if not is_connected(g):
        raise HypothesisError("graph is disconnected")
    bip, _ = is_bipartite(g)
    if bip:
        raise HypothesisError(
            "graph is bipartite: the weighted incidence matrix lacks full "
            "column rank, so no left inverse exists"
        )


def min_norm_generalized_inverse(g: Graph) -> GenInvResult:
    """Generalized inverse of W with the smallest induced (inf, inf) norm.

    Row i solves min ||g||_1 subject to g W = e_i^T; the assembled matrix
    attains the norm max_i of the row minima, which is the global minimum
    by row independence.
    """
    _require_nonbipartite_connected(g)
    w = weighted_incidence(g)
    wt = transpose(w.W)
    rows = []
    values = []
    for i in range(g.n):
        e = [Fraction(0)] * g.n
        e[i] = Fraction(1)
        gi, vi = min_l1_affine(wt, e)
        rows.append(gi)
        values.append(vi)
    return GenInvResult(rows, max(values), values)


def kernel_row(g: Graph) -> KernelRow:
    """Spanning vector of the left null space of W for a bicyclic graph.

    Requires m = n + 1 and full column rank (connected, non-bipartite), so
    the space is exactly one-dimensional.
    """
    _require_nonbipartite_connected(g)
    if g.m != g.n + 1:
        raise HypothesisError(f"graph is not bicyclic: m = {g.m}, need n + 1 = {g.n + 1}")
    w = weighted_incidence(g)
    basis = nullspace(transpose(w.W))
    if len(basis) != 1:
        raise HypothesisError("left null space is not one-dimensional")
    return KernelRow(integer_primitive(basis[0]))


def _pseudoinverse_left(w: Mat) -> Mat:
    # (W^T W)^-1 W^T, exact; W^T W is invertible for full column rank.
    wt = transpose(w)
    return solve_square(mat_mul(wt, w), wt)


def min_norm_bicyclic_median(g: Graph, particular: Mat | None = None) -> GenInvResult:
    """Bicyclic fast path for the norm-minimal left inverse.

    Every left inverse is particular + alpha beta with beta spanning the
    left null space, so row i minimizes sum_j |g_ij + z beta_j| over the
    scalar z: a weighted median over the breakpoints -g_ij / beta_j with
    weights |beta_j|, plus the constant contribution of the beta_j = 0
    columns.  The resulting norm is independent of which particular left
    inverse is used; by default the exact pseudoinverse (W^T W)^-1 W^T.
    """
    beta = kernel_row(g).beta  # also enforces the bicyclic hypotheses
    w = weighted_incidence(g)
    if particular is None:
        particular = _pseudoinverse_left(w.W)
    elif mat_mul(particular, w.W) != identity(g.n):
        raise ValueError("particular matrix is not a left inverse of W")
    rows = []
    values = []
    for ghat in particular:
        const = sum(abs(ghat[j]) for j in range(g.m) if beta[j] == 0)
        points = [(-ghat[j] / beta[j], abs(beta[j])) for j in range(g.m) if beta[j]]
        z, med = weighted_median_l1(points)
        rows.append([ghat[j] + z * beta[j] for j in range(g.m)])
        values.append(med + const)
    return GenInvResult(rows, max(values), values)


def verify_duality(g: Graph) -> DualityReport:
    """Compute mu (face LPs) and the minimal inverse norm (row LPs)
    independently and check mu * norm = 1 exactly."""
    _require_nonbipartite_connected(g)
    mu = mu_infinity(g).mu
    norm = min_norm_generalized_inverse(g).norm
    product = mu * norm
    return DualityReport(mu, norm, product, product == 1)
