"""Exit criteria, one test each; the terminal summary prints PASS/FAIL per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v``.
"""

import itertools
import random
from fractions import Fraction
from math import comb, factorial

import pytest

from oracles import fraction_rank, hypersurface_h, inversions, point_hilbert_function, signature_by_descartes
from sdistance import bounds as B
from sdistance.hilbert import (
    buchberger_moller,
    hilbert_function,
    hilbert_poly_estimate,
    standard_monomials_leq,
    vanishing_ideal,
)
from sdistance.points import PointSet, squared_distance_set
from sdistance.poly import DEGLEX, Polynomial, TermOrder, parse_polynomial
from sdistance.verify import (
    box,
    brute_force_max_sdist,
    canonical_pp_polynomial,
    check_pp_theorem,
    evaluation_matrix,
    inertia,
    pp_matrix,
    rank,
    swap_halves,
    uniform_layer,
)

acceptance = pytest.mark.acceptance


def sphere(n, center=None, radius2=1):
    center = center or [0] * n
    f = Polynomial.constant(-radius2, n)
    for i, c in enumerate(center, start=1):
        lin = Polynomial.var(i, n) - c
        f = f + lin * lin
    return f


def random_polynomial(rng, n, max_degree, n_terms, top_degree=None):
    """Random rational polynomial; with ``top_degree`` the degree is exactly that."""
    terms = {}
    for _ in range(n_terms):
        m = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            m[rng.randrange(n)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if top_degree is not None:
        m = [0] * n
        for _ in range(top_degree):
            m[rng.randrange(n)] += 1
        terms[tuple(m)] = Fraction(rng.choice([-3, -1, 1, 2]), rng.randint(1, 3))
    return Polynomial(n, terms)


def random_point_set(rng, size, n, lo=-4, hi=4):
    assert size <= (hi - lo + 1) ** n
    pts = set()
    while len(pts) < size:
        pts.add(tuple(Fraction(rng.randint(lo, hi), rng.choice([1, 1, 2])) for _ in range(n)))
    return PointSet.of(sorted(pts))


@acceptance(1, "sphere ideal Hilbert function equals the closed form, 2<=n<=5, 1<=s<=6")
def test_sphere_ideal_matches_closed_form():
    for n in range(2, 6):
        gens = [sphere(n)]
        for s in range(1, 7):
            closed = comb(n + s - 1, s) + comb(n + s - 2, s - 1)
            assert B.general_bound(gens, s) == B.dgs_bound(n, s) == closed


@acceptance(2, "principal ideal Hilbert function, 20 random F with n<=3, deg<=4")
def test_principal_ideal_hilbert_function():
    rng = random.Random(2024)
    for _ in range(20):
        n, d = rng.randint(1, 3), rng.randint(1, 4)
        F = random_polynomial(rng, n, d - 1, rng.randint(0, 4), top_degree=d)
        assert F.degree == d and not F.leading_form().is_zero()
        for s in range(d + 5):
            expected = comb(n + s, n) - comb(n + s - d, n) if s >= d else comb(n + s, n)
            assert hilbert_function([F], s) == expected == hypersurface_h(n, d, s)


@acceptance(3, "sphere-union sum equals difference form; p=1 reduces; product ideal matches")
def test_sphere_union_identity_and_product_ideal():
    for n in range(1, 9):
        for p in range(1, 5):
            for s in range(2 * p, 2 * p + 7):
                brute = sum(comb(n + s - 1 - i, s - i) for i in range(2 * p))
                diff = comb(n + s, n) - comb(n + s - 2 * p, n)
                assert B.sphere_union_sum(n, p, s) == brute == diff
                if n >= 2:
                    assert B.sphere_union_bound(n, p, s) == diff
    for n in range(2, 9):
        for s in range(2, 9):
            assert B.sphere_union_bound(n, 1, s) == B.dgs_bound(n, s)
    rng = random.Random(3)
    for _ in range(3):
        F = sphere(2, [rng.randint(-3, 3), rng.randint(-3, 3)], rng.randint(1, 9))
        F = F * sphere(2, [Fraction(rng.randint(-6, 6), 2), rng.randint(-3, 3)], rng.randint(1, 9))
        for s in (4, 5):
            assert B.general_bound([F], s) == B.sphere_union_bound(2, 2, s) == comb(2 + s, 2) - comb(s - 2, 2)


def _compositions(n, j, q):
    return sum(1 for v in itertools.product(range(q), repeat=n) if sum(v) == j)


@acceptance(4, "box vanishing ideal is the coordinate products; box bound = monomial count")
def test_box_pipeline():
    rng = random.Random(44)
    for _ in range(5):
        n, q = rng.randint(1, 3), rng.randint(2, 3)
        T = [sorted(rng.sample([Fraction(k, 2) for k in range(-8, 9)], q)) for _ in range(n)]
        expected = set()
        for i, Ti in enumerate(T, start=1):
            f = Polynomial.constant(1, n)
            for t in Ti:
                f = f * (Polynomial.var(i, n) - t)
            expected.add(f)
        A = box(*T)
        for order in TermOrder:
            assert set(vanishing_ideal(A, order)) == expected
        G = vanishing_ideal(A, DEGLEX)
        for s in range(n * (q - 1) + 2):
            count = len(standard_monomials_leq(G, s))
            ext = sum(_compositions(n, j, q) for j in range(s + 1))
            assert B.box_bound(n, q, s) == count == ext
            assert sum(B.extended_binomial(n, j, q) for j in range(s + 1)) == ext
    for n in range(1, 7):
        for s in range(n + 2):
            assert B.box_bound(n, 2, s) == sum(comb(n, j) for j in range(min(s, n) + 1))


@acceptance(5, "permutation standard-monomial degree profile equals inversion numbers")
def test_permutation_profile():
    for n in (3, 4):
        alphas = random.Random(n).sample(range(-9, 10), n)
        perms = list(itertools.permutations(alphas))
        _, sm = buchberger_moller(perms)
        counts = [0] * (comb(n, 2) + 1)
        for p in itertools.permutations(range(n)):
            counts[inversions(p)] += 1
        profile = [sum(1 for m in sm if sum(m) == k) for k in range(len(counts))]
        assert profile == counts == list(B.inversion_numbers(n).counts)
        assert len(sm) == factorial(n)
    for n in range(1, 9):
        assert sum(B.inversion_numbers(n).counts) == factorial(n)


@acceptance(6, "uniform layer Hilbert function equals C(n, s)")
def test_uniform_layer_hilbert_function():
    for n, d in [(4, 2), (5, 2), (6, 3)]:
        Y = uniform_layer(n, d)
        G = vanishing_ideal(Y)
        for s in range(min(d, n - d) + 1):
            assert hilbert_function(G.elements, s) == comb(n, s) == point_hilbert_function(Y.points, s)
            assert B.uniform_bound(n, d, s) == comb(n, s)


def _random_pp_polynomial(rng, n, s):
    deg = rng.randint(0, 2 * s + 1)
    p = random_polynomial(rng, 2 * n, deg, rng.randint(1, 5))
    if rng.random() < 0.5:
        p = p + swap_halves(p)
    if rng.random() < 0.3:
        # products p(x, y) = g(x) g(y) give positive semidefinite forms
        g = random_polynomial(rng, n, s, rng.randint(1, 3))
        shifted = Polynomial(2 * n, {m + (0,) * n: c for m, c in g.items()})
        p = shifted * swap_halves(shifted)
    return p


@acceptance(7, "rank and inertia inequalities on 200 random (A, p, s)")
def test_rank_inertia_inequalities():
    rng = random.Random(7)
    violations = []
    for trial in range(200):
        n = rng.randint(1, 3)
        A = random_point_set(rng, rng.randint(1, 8), n)
        s = rng.randint(0, 3)
        p = _random_pp_polynomial(rng, n, s)
        assert p.degree <= 2 * s + 1
        res = check_pp_theorem(A, p, s)
        h = point_hilbert_function(A.points, s)
        assert res.h_value == h
        assert res.rank == fraction_rank(evaluation_matrix(A, p))
        if not (res.rank <= 2 * h and max(res.signature.r_plus, res.signature.r_minus) <= h):
            violations.append(trial)
        assert res.rank_ok and res.inertia_ok
    assert violations == []


@acceptance(8, "standard monomials of an s-distance set have degree <= s; canonical matrix positive diagonal")
def test_s_distance_standard_monomials():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 3)
        A = random_point_set(rng, rng.randint(2, 8), n)
        s = len(squared_distance_set(A))
        _, sm = buchberger_moller(A, DEGLEX)
        assert max(sum(m) for m in sm) <= s
        M = pp_matrix(A, canonical_pp_polynomial(A))
        assert M.is_diagonal()
        assert all(M.entries[i][i] > 0 for i in range(len(A)))


def _congruent(M, S):
    m = len(M)
    MS = [[sum(M[i][k] * S[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    return [[sum(S[k][i] * MS[k][j] for k in range(m)) for j in range(m)] for i in range(m)]


@acceptance(9, "inertia invariant under congruence on 100 random symmetric matrices")
def test_sylvester_invariance():
    rng = random.Random(9)
    for _ in range(100):
        m = rng.randint(1, 6)
        M = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            for j in range(i, m):
                if rng.random() < 0.7:
                    M[i][j] = M[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        S = None
        while S is None or fraction_rank(S) < m:
            S = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(m)] for _ in range(m)]
        sig = inertia(M)
        assert inertia(_congruent(M, S)) == sig
        assert (sig.r_plus, sig.r_minus, sig.r_zero) == signature_by_descartes(M)
        assert rank(M) == sig.r_plus + sig.r_minus == fraction_rank(M)


@acceptance(10, "exhaustive maxima 2, 4, 8 within box bounds 3, 4, 11")
def test_brute_force_against_box_bounds():
    square = box([0, 1], [0, 1])
    hypercube = box(*[[0, 1]] * 4)
    cases = [(square, 2, 1, 2, 3), (square, 2, 2, 4, 4), (hypercube, 4, 2, 8, 11)]
    for cands, n, s, expected, bound in cases:
        res = brute_force_max_sdist(cands, s)
        assert res.max_size == expected
        assert len(res.witness) == expected
        assert len(res.witness) < 2 or len(squared_distance_set(res.witness)) <= s
        assert B.box_bound(n, 2, s) == bound
        assert res.max_size <= bound
    # tight only for the whole square
    assert brute_force_max_sdist(square, 2).max_size == B.box_bound(2, 2, 2)


@acceptance(11, "Hilbert polynomial degree and leading multiplicity from finite differences")
def test_hilbert_polynomial_estimates():
    cases = [
        ([sphere(2)], 2, 1, 2),
        ([parse_polynomial("x2^2 - x1^3 - 1", 2)], 2, 1, 3),
        ([], 2, 2, 1),
    ]
    for gens, arity, d, k in cases:
        est = hilbert_poly_estimate(gens, 3, 12, arity=arity)
        assert (est.dimension, est.degree) == (d, k)
        # the fitted polynomial reproduces every value in the window
        for s in range(est.stable_from, 13):
            assert est(s) == hilbert_function(gens, s, arity=arity)
