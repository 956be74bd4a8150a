import itertools
import random
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import inversions
from sdistance import bounds as B
from sdistance.hilbert import vanishing_ideal
from sdistance.poly import Polynomial, parse_polynomial
from sdistance.verify import permutations


def test_bbs():
    assert B.bbs_bound(2, 1) == 3
    assert B.bbs_bound(1, 1) == 2
    assert B.bbs_bound(4, 3) == 35 == B.general_bound([], 3, arity=4)
    with pytest.raises(B.BoundDomainError):
        B.bbs_bound(0, 1)


def test_dgs():
    assert B.dgs_bound(2, 1) == 3
    sphere3 = parse_polynomial("x1^2 + x2^2 + x3^2 - 1", 3)
    assert B.dgs_bound(3, 2) == 9 == B.general_bound([sphere3], 2)
    assert B.dgs_bound(2, 2) == 5 == B.general_bound([parse_polynomial("x1^2 + x2^2 - 1", 2)], 2)
    with pytest.raises(B.BoundDomainError):
        B.dgs_bound(1, 1)


def test_hypersurface():
    assert B.hypersurface_bound(2, 3, 3) == 9
    assert B.hypersurface_bound(2, 2, 3) == 7 == B.dgs_bound(2, 3)
    assert B.hypersurface_bound(3, 5, 2) == 10


def test_plane_curve():
    assert B.plane_curve_bound(3, 3) == 9
    assert B.plane_curve_bound(1, 5) == 6 == comb(7, 2) - comb(6, 2)
    assert B.plane_curve_bound(4, 6) == 22 == comb(8, 2) - comb(4, 2)
    with pytest.raises(B.BoundDomainError):
        B.plane_curve_bound(4, 3)


def test_sphere_union():
    assert B.sphere_union_bound(2, 1, 2) == 5 == B.dgs_bound(2, 2)
    assert B.sphere_union_bound(2, 2, 4) == 14 == comb(6, 2) - comb(2, 2)
    assert B.sphere_union_sum(2, 2, 4) == comb(5, 4) + comb(4, 3) + comb(3, 2) + comb(2, 1)
    assert B.sphere_union_bound(3, 2, 3) == B.bbs_bound(3, 3) == 20


def _compositions(n, j, q):
    return sum(1 for v in itertools.product(range(q), repeat=n) if sum(v) == j)


def test_extended_binomial_examples():
    assert B.extended_binomial(2, 2, 3) == 3
    assert B.extended_binomial(4, 1, 2) == 4
    assert B.extended_binomial(3, 0, 9) == 1


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("q", range(2, 5))
def test_extended_binomial_matches_enumeration(n, q):
    for j in range(n * (q - 1) + 2):
        assert B.extended_binomial(n, j, q) == _compositions(n, j, q)
    if q == 2:
        assert all(B.extended_binomial(n, j, 2) == comb(n, j) for j in range(n + 1))


def test_box_examples():
    assert B.box_bound(3, 2, 1) == 4
    assert B.box_bound(2, 2, 2) == 4
    assert B.box_bound(1, 5, 3) == 4
    with pytest.raises(B.BoundDomainError):
        B.box_bound(2, 1, 2)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("q", range(2, 5))
def test_box_matches_monomial_count(n, q):
    for s in range(n * (q - 1) + 2):
        count = sum(1 for v in itertools.product(range(q), repeat=n) if sum(v) <= s)
        assert B.box_bound(n, q, s) == count == sum(B.extended_binomial(n, j, q) for j in range(s + 1))
        if q == 2:
            assert count == sum(comb(n, j) for j in range(s + 1))


def test_inversion_examples():
    assert B.inversion_numbers(3).counts == (1, 2, 2, 1)
    assert B.inversion_numbers(1).counts == (1,)
    assert B.inversion_numbers(4).counts == (1, 3, 5, 6, 5, 3, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_inversions_match_enumeration(n):
    counts = [0] * (n * (n - 1) // 2 + 1)
    for p in itertools.permutations(range(n)):
        counts[inversions(p)] += 1
    assert B.inversion_numbers(n).counts == tuple(counts)


@pytest.mark.parametrize("n", range(1, 9))
def test_inversion_symmetry_and_total(n):
    c = B.inversion_numbers(n).counts
    assert c == c[::-1]
    assert sum(c) == factorial(n)


def test_permutation_bound():
    assert B.permutation_bound(3, 1) == 3
    assert B.permutation_bound(3, 3) == 6
    assert B.permutation_bound(4, 2) == 9
    assert B.permutation_bound(3, 50) == 6


def test_uniform_bound():
    assert B.uniform_bound(4, 2, 1) == 4
    assert B.uniform_bound(6, 3, 3) == 20
    assert B.uniform_bound(5, 0, 0) == 1
    with pytest.raises(B.BoundDomainError):
        B.uniform_bound(6, 2, 3)


def test_general_bound_examples():
    assert B.general_bound([parse_polynomial("x1^2 + x2^2 - 1", 2)], 2) == 5 == B.dgs_bound(2, 2)
    box = [parse_polynomial("x1^2 - x1", 2), parse_polynomial("x2^2 - x2", 2)]
    assert B.general_bound(box, 1) == 3 == B.box_bound(2, 2, 1)
    assert B.general_bound([], 1, arity=2) == 3 == B.bbs_bound(2, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_hockey_stick(n):
    for s in range(1, 13):
        if n >= 2:
            assert B.hypersurface_bound(n, 2, s) == B.dgs_bound(n, s)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("p", range(1, 5))
def test_sphere_union_identity(n, p):
    for s in range(2 * p, 2 * p + 8):
        assert B.sphere_union_sum(n, p, s) == comb(n + s, n) - comb(n + s - 2 * p, n)


def test_plane_curve_specialisation():
    for s in range(1, 13):
        for d in range(1, s + 1):
            assert B.plane_curve_bound(d, s) == B.hypersurface_bound(2, d, s)


def _random_sphere(rng, n):
    center = [rng.randint(-3, 3) for _ in range(n)]
    f = Polynomial.constant(-rng.randint(1, 9), n)
    for i, c in enumerate(center, start=1):
        lin = Polynomial.var(i, n) - c
        f = f + lin * lin
    return f


@pytest.mark.parametrize("seed", range(5))
def test_general_bound_on_sphere_products(seed):
    rng = random.Random(seed)
    n, p = rng.choice([(2, 1), (2, 2), (3, 2), (2, 3)])
    F = Polynomial.constant(1, n)
    for _ in range(p):
        F = F * _random_sphere(rng, n)
    for s in range(2 * p, 2 * p + 3):
        assert B.general_bound([F], s) == B.sphere_union_bound(n, p, s)


def test_general_bound_on_box_and_permutation_ideals():
    box = [parse_polynomial("x1^3 - x1", 2), parse_polynomial("x2^3 - 4*x2", 2)]
    for s in range(6):
        assert B.general_bound(box, s) == B.box_bound(2, 3, s)
    for n in (2, 3, 4):
        G = vanishing_ideal(permutations(*range(1, n + 1)))
        for s in range(n * (n - 1) // 2 + 1):
            assert B.general_bound(G.elements, s) == B.permutation_bound(n, s)


@given(st.integers(2, 6), st.integers(1, 4), st.integers(1, 3), st.integers(2, 4), st.integers(1, 10))
def test_bounds_nondecreasing_in_s(n, d, p, q, s):
    assert B.bbs_bound(n, s) <= B.bbs_bound(n, s + 1)
    assert B.dgs_bound(n, s) <= B.dgs_bound(n, s + 1)
    assert B.hypersurface_bound(n, d, s) <= B.hypersurface_bound(n, d, s + 1)
    assert B.sphere_union_bound(n, p, s) <= B.sphere_union_bound(n, p, s + 1)
    assert B.box_bound(n, q, s) <= B.box_bound(n, q, s + 1)
    assert B.permutation_bound(n, s) <= B.permutation_bound(n, s + 1)


@given(st.integers(2, 6), st.integers(1, 8))
def test_constrained_families_below_bbs(n, s):
    bbs = B.bbs_bound(n, s)
    assert B.dgs_bound(n, s) <= bbs
    assert B.hypersurface_bound(n, 3, s) <= bbs
    assert B.box_bound(n, 3, s) <= bbs
    assert B.permutation_bound(n, s) <= bbs


def test_evaluate_bound_dispatch():
    rep = B.evaluate_bound("dgs", 2, n=3)
    assert rep.value == 9 and rep.family is B.Family.DGS
    assert B.evaluate_bound(B.Family.BOX, 1, n=3, q=2).value == 4
    with pytest.raises(B.BoundDomainError):
        B.evaluate_bound("box", 1, n=3)
    rep = B.evaluate_bound("general", 2, [parse_polynomial("x1^2 + x2^2 - 1", 2)])
    assert rep.value == 5 and rep.parameters == {"n": 2, "s": 2}
