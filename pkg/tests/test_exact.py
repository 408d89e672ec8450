"""Exact linear algebra: norms, rank, products, canonical form."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from siglap import (
    Graph,
    induced_inf_norm,
    mat_mul,
    mat_vec,
    matrix,
    rank,
    transpose,
    vec_inf_norm,
    vector,
    weighted_incidence,
)
from siglap.exact import identity, integer_primitive, nullspace, solve_square

from graphgen import cycle, complete, random_rational

K3 = Graph(3, ((0, 1), (1, 2), (2, 0)))


def frac_mat(rows):
    return matrix(rows)


# vec_inf_norm

def test_vec_inf_norm_zero_vector():
    assert vec_inf_norm(vector([0, 0, 0])) == 0


def test_vec_inf_norm_mixed_signs():
    assert vec_inf_norm(vector([1, Fraction(-1, 3), Fraction(-1, 3)])) == 1


def test_vec_inf_norm_et_case_vector():
    # the a = b = 3 optimal vector of the two-triangle graph
    assert vec_inf_norm(vector([-1, -1, 6, -1, -1])) == 6


def test_vec_inf_norm_empty_rejected():
    with pytest.raises(ValueError):
        vec_inf_norm([])


# induced_inf_norm

def test_induced_inf_norm_identity():
    assert induced_inf_norm(identity(3)) == 1


def test_induced_inf_norm_row_sums():
    assert induced_inf_norm(frac_mat([[1, -2], [3, 0]])) == 3


def test_induced_inf_norm_weighted_incidence_k3():
    w = weighted_incidence(K3)
    assert induced_inf_norm(w.W) == 1


def test_induced_inf_norm_empty_rejected():
    with pytest.raises(ValueError):
        induced_inf_norm([])
    with pytest.raises(ValueError):
        induced_inf_norm([[], []])


def test_induced_inf_norm_sign_vector_brute_force():
    # ||A||_{inf,inf} = max over sign vectors s of ||A s||_inf
    rng = random.Random(42)
    for _ in range(30):
        m = rng.randint(1, 4)
        n = rng.randint(1, 6)
        a = [[random_rational(rng) for _ in range(n)] for _ in range(m)]
        brute = max(
            vec_inf_norm(mat_vec(a, [Fraction(s) for s in signs]))
            for signs in product((-1, 1), repeat=n)
        )
        assert induced_inf_norm(a) == brute


# rank

def _det_expansion(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    total = Fraction(0)
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * _det_expansion(minor)
    return total


def _rank_by_minors(a):
    m, n = len(a), len(a[0])
    for k in range(min(m, n), 0, -1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[a[i][j] for j in cols] for i in rows]
                if _det_expansion(sub) != 0:
                    return k
    return 0


def test_rank_zero_matrix():
    assert rank(frac_mat([[0, 0], [0, 0]])) == 0


def test_rank_weighted_incidence_c4():
    # bipartite connected: rank n - 1, confirmed by minor expansion
    w = weighted_incidence(cycle(4)).W
    assert rank(w) == 3
    assert _rank_by_minors(w) == 3


def test_rank_weighted_incidence_k3():
    w = weighted_incidence(K3).W
    assert rank(w) == 3
    assert _rank_by_minors(w) == 3


def test_rank_matches_minor_expansion_oracle():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[random_rational(rng, 3, 2) for _ in range(n)] for _ in range(m)]
        assert rank(a) == _rank_by_minors(a)


# products

def test_mat_mul_identity():
    a = frac_mat([[1, 2], [3, Fraction(4, 5)]])
    assert mat_mul(identity(2), a) == a
    assert mat_mul(a, identity(2)) == a


def test_mat_vec_row_sums_of_w():
    w = weighted_incidence(K3).W
    assert mat_vec(w, vector([1, 1, 1])) == vector([1, 1, 1])


def test_mat_vec_k3_witness():
    w = weighted_incidence(K3).W
    x = vector([1, Fraction(-1, 3), Fraction(-1, 3)])
    assert mat_vec(w, x) == vector([Fraction(1, 3), Fraction(-1, 3), Fraction(1, 3)])


def test_dimension_mismatch_rejected():
    a = frac_mat([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        mat_vec(a, vector([1, 2, 3]))
    with pytest.raises(ValueError):
        mat_mul(a, frac_mat([[1, 2, 3]]))


# norm axioms and canonical form

def test_norm_axioms_random():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = [[random_rational(rng) for _ in range(n)] for _ in range(m)]
        b = [[random_rational(rng) for _ in range(n)] for _ in range(m)]
        x = [random_rational(rng) for _ in range(n)]
        lam = random_rational(rng)
        a_plus_b = [[ai + bi for ai, bi in zip(ra, rb)] for ra, rb in zip(a, b)]
        assert induced_inf_norm(a_plus_b) <= induced_inf_norm(a) + induced_inf_norm(b)
        scaled = [[lam * e for e in row] for row in a]
        assert induced_inf_norm(scaled) == abs(lam) * induced_inf_norm(a)
        if any(x):
            assert vec_inf_norm(mat_vec(a, x)) <= induced_inf_norm(a) * vec_inf_norm(x)


def test_results_stay_canonical():
    # every Fraction produced along random arithmetic chains is reduced
    # with a positive denominator
    rng = random.Random(13)
    v = random_rational(rng)
    for _ in range(300):
        w = random_rational(rng)
        v = rng.choice([v + w, v - w, v * w, v / w if w else v])
        assert v.denominator > 0
        from math import gcd
        assert gcd(abs(v.numerator), v.denominator) == 1


# solver helpers used by the inverse machinery

def test_solve_square_against_known_inverse():
    w = weighted_incidence(K3).W
    inv = solve_square(w, identity(3))
    assert mat_mul(w, inv) == identity(3)
    assert inv == frac_mat([[1, -1, 1], [1, 1, -1], [-1, 1, 1]])


def test_nullspace_annihilates():
    w = weighted_incidence(cycle(4)).W  # rank 3, one null direction
    basis = nullspace(transpose(w))
    assert len(basis) == 1
    z = basis[0]
    assert mat_vec(transpose(w), z) == vector([0, 0, 0, 0])


def test_integer_primitive_normalization():
    v = vector([Fraction(2, 3), Fraction(-4, 3), 2])
    assert integer_primitive(v) == vector([1, -2, 3])


def test_integer_primitive_sign_rule():
    # scaled to coprime integers with the last nonzero entry positive
    assert integer_primitive(vector([Fraction(1, 2), Fraction(-1, 2)])) == vector([-1, 1])
    assert integer_primitive(vector([-3, 0])) == vector([1, 0])
    with pytest.raises(ValueError):
        integer_primitive(vector([0, 0]))


def test_complete_graph_column_sums():
    for k in (3, 4, 5):
        w = weighted_incidence(complete(k)).W
        for col in range(k):
            assert sum(row[col] for row in w) == 1
