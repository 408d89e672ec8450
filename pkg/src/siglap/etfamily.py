"""The ET(n, a, b) bicyclic family: an odd a-cycle and a b-cycle sharing one
vertex, with a closed-form minimal inverse norm and explicit optimal vectors.

Edges come in a fixed order: the a-cycle v1..va closed by (va, v1), then the
path va, v(a+1), .., vn closed back by (vn, va).  The hub va has degree 4,
every other vertex degree 2, and m = n + 1 with n = a + b - 1.

The closed-form minimal norm splits into four cases:

    b odd,  a > 2b             ->  a
    b odd,  a <= 2b, b <= 2a   ->  2 min(a, b)
    b odd,  b > 2a             ->  b
    b even                     ->  max(2a, a + b)

and the reciprocal is the smallest normalized signless infinity-Laplacian
eigenvalue.  ``optimal_vector`` builds an integer witness vector attaining
it: every weighted edge value has magnitude exactly 1 and the sup norm of
the vector equals the case value.  Both facts are re-verified internally
before the vector is returned.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .exact import Vec, mat_vec, vec_inf_norm
from .geninv import min_norm_bicyclic_median, min_norm_generalized_inverse
from .graphs import Graph
from .spectral import evaluate, mu_infinity, weighted_incidence


@dataclass(frozen=True)
class ETParams:
    """Cycle lengths (a odd, both > 2); the vertex count is n = a + b - 1."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise InputError("cycle lengths must be integers")
        if self.a <= 2 or self.b <= 2:
            raise InputError(f"cycle lengths must exceed 2, got a={self.a}, b={self.b}")
        if self.a % 2 == 0:
            raise InputError(f"first cycle length must be odd, got a={self.a}")

    @property
    def n(self) -> int:
        return self.a + self.b - 1


@dataclass(frozen=True)
class ETReport:
    """All five routes to the same value, and whether they agree exactly."""

    closed_form: Fraction
    lp_norm: Fraction
    median_norm: Fraction
    mu_lp: Fraction
    y_eval: Fraction
    all_consistent: bool


def build_et(p: ETParams) -> Graph:
    """Construct ET(n, a, b) with the canonical edge order."""
    a, n = p.a, p.n
    edges = [(k, k + 1) for k in range(a - 1)]  # a-cycle path v1..va
    edges.append((a - 1, 0))  # close the a-cycle
    edges.extend((k - 1, k) for k in range(a, n))  # path va..vn
    edges.append((n - 1, a - 1))  # close the b-cycle
    return Graph(n, tuple(edges))


def closed_form_min_norm(p: ETParams) -> Fraction:
    """Case value of the minimal inverse norm; mu is its reciprocal."""
    a, b = p.a, p.b
    if b % 2 == 0:
        return Fraction(max(2 * a, a + b))
    if a > 2 * b:
        return Fraction(a)
    if b > 2 * a:
        return Fraction(b)
    return Fraction(2 * min(a, b))


def _sign(i: int) -> int:
    return 1 if i % 2 == 0 else -1


def _vector_odd_large_a(a: int, b: int) -> list[int]:
    # both cycles odd, a > 2b; peak a at i = (a-1)/2, hub value 2
    y = [0] * (a + b)  # 1-based scratch
    for i in range(1, a):
        y[i] = _sign(i) * (a - 2 * abs((a - 1) // 2 - i))
    y[a] = 2
    mid = a + (b + 1) // 2
    for i in range(a + 1, a + b):
        y[i] = _sign(i) * (b - 2 * abs(mid - i))
    return y[1:]


def _vector_odd_balanced(a: int, b: int) -> list[int]:
    # both cycles odd, b <= a <= 2b; hub value 2b is the peak
    y = [0] * (a + b)
    for i in range(1, (b - 1) // 2 + 1):
        y[i] = _sign(i) * (b - 2 * i)
    for i in range((b + 1) // 2, a - (b + 1) // 2 + 1):  # empty when a = b
        y[i] = _sign((b - 1) // 2)
    for i in range(a - (b - 1) // 2, a):
        y[i] = _sign(a - i) * (b - 2 * (a - i))
    y[a] = 2 * b
    for i in range(a + 1, a + (b - 1) // 2 + 1):
        y[i] = _sign(i - a) * (b - 2 * (i - a))
    for i in range(a + (b + 1) // 2, a + b):
        y[i] = _sign(a + b - i) * (b - 2 * (a + b - i))
    return y[1:]


def _vector_even_b(a: int, b: int) -> list[int]:
    # b even; peak 2a at the hub when a > b, a + b at i = a + b/2 when a < b
    y = [0] * (a + b)
    for i in range(1, (a - 1) // 2 + 1):
        y[i] = _sign(i) * (a - 2 * i)
    for i in range((a + 1) // 2, a):
        y[i] = _sign(a - i) * (a - 2 * (a - i))
    y[a] = 2 * a
    for i in range(a + 1, a + b // 2 + 1):
        y[i] = _sign(i - a) * (a + 2 * (i - a))
    for i in range(a + b // 2 + 1, a + b):
        y[i] = _sign(a + b - i) * (a + 2 * (a + b - i))
    return y[1:]


def optimal_vector(p: ETParams) -> Vec:
    """Integer vector Y with every weighted edge value of magnitude 1 and
    ||Y||_inf equal to the closed-form value, so that evaluating it attains
    mu exactly.

    For b odd with b > a the construction swaps the cycle roles and maps the
    result back through the graph isomorphism exchanging the two cycles
    (hub to hub, path positions in traversal order).  The returned vector is
    always re-verified; a mismatch raises ConsistencyError instead of
    returning a wrong witness.
    """
    a, b = p.a, p.b
    if b % 2 == 0:
        y = _vector_even_b(a, b)
    elif a >= b:
        y = _vector_odd_large_a(a, b) if a > 2 * b else _vector_odd_balanced(a, b)
    else:
        # swapped roles: build for (a'=b, b'=a), then relabel back
        ys = _vector_odd_large_a(b, a) if b > 2 * a else _vector_odd_balanced(b, a)
        y = [0] * p.n
        for i in range(1, a):  # a-cycle positions take the swapped second cycle
            y[i - 1] = ys[b + i - 1]
        y[a - 1] = ys[b - 1]  # hub
        for j in range(1, b):  # b-cycle positions take the swapped first cycle
            y[a + j - 1] = ys[j - 1]
    vec = [Fraction(v) for v in y]

    w = weighted_incidence(build_et(p))
    edge_peak = vec_inf_norm(mat_vec(w.W, vec))
    value = closed_form_min_norm(p)
    if edge_peak != 1 or vec_inf_norm(vec) != value:
        raise ConsistencyError(
            f"optimal vector for a={a}, b={b} failed verification: "
            f"edge peak {edge_peak}, sup norm {vec_inf_norm(vec)}, expected 1 and {value}"
        )
    return vec


def et_report(p: ETParams) -> ETReport:
    """Run every route to the minimal norm and compare them exactly."""
    g = build_et(p)
    closed = closed_form_min_norm(p)
    lp_norm = min_norm_generalized_inverse(g).norm
    median_norm = min_norm_bicyclic_median(g).norm
    mu = mu_infinity(g).mu
    y_eval = evaluate(weighted_incidence(g), optimal_vector(p))
    consistent = (
        closed == lp_norm == median_norm and mu * closed == 1 and y_eval * closed == 1
    )
    return ETReport(closed, lp_norm, median_norm, mu, y_eval, consistent)
