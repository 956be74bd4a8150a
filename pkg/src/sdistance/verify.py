"""Checks of the rank/inertia machinery and of the bounds on concrete point sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import bounds as B
from .hilbert import buchberger_moller, point_set_hilbert_function
from .points import (
    PointSet,
    PointSetError,
    SquaredDistanceSet,
    squared_distance,
    squared_distance_set,
)
from .poly import DEGLEX, ArityError, Polynomial

__all__ = [
    "PointSet",
    "SquaredDistanceSet",
    "squared_distance_set",
    "SymmetricRationalMatrix",
    "InertiaSignature",
    "HypothesisViolation",
    "ProductPolynomial",
    "canonical_pp_polynomial",
    "evaluation_matrix",
    "pp_matrix",
    "rank",
    "inertia",
    "check_pp_theorem",
    "check_distance_bound",
    "standard_monomial_max_degree",
    "box",
    "permutations",
    "uniform_layer",
    "even_weight",
    "sphere_sample",
    "brute_force_max_sdist",
]


class HypothesisViolation(ValueError):
    """A mathematical precondition of a bound or inequality does not hold for the input."""


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricRationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != m:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def of(cls, rows) -> "SymmetricRationalMatrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j)


@dataclass(frozen=True)
class InertiaSignature:
    r_plus: int
    r_minus: int
    r_zero: int

    @property
    def rank(self) -> int:
        return self.r_plus + self.r_minus

    @property
    def dimension(self) -> int:
        return self.r_plus + self.r_minus + self.r_zero


def _integer_rows(M) -> list[list[int]]:
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(M) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Accepts a :class:`SymmetricRationalMatrix` or any rectangular list of
    rationals; rows are scaled to integers first.
    """
    rows = M.rows() if isinstance(M, SymmetricRationalMatrix) else M
    A = _integer_rows(rows)
    if not A or not A[0]:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            row_i = A[i]
            row_r = A[r]
            for j in range(c + 1, ncols):
                num = p * row_i[j] - a * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0
                row_i[j] = q
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def inertia(M) -> InertiaSignature:
    """Sylvester signature by exact symmetric congruence.

    Pivots on a nonzero diagonal entry when one remains; otherwise a nonzero
    off-diagonal entry a_ij is turned into a diagonal one by adding row and
    column j to row and column i (a_ii becomes 2 a_ij).
    """
    if not isinstance(M, SymmetricRationalMatrix):
        M = SymmetricRationalMatrix.of(M)
    A = M.rows()
    active = list(range(M.dimension))
    plus = minus = 0
    while active:
        i = next((k for k in active if A[k][k]), None)
        if i is None:
            pair = next(((j, k) for j in active for k in active if j < k and A[j][k]), None)
            if pair is None:
                break
            j, k = pair
            for t in range(len(A)):
                A[j][t] += A[k][t]
            for t in range(len(A)):
                A[t][j] += A[t][k]
            i = j
        d = A[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        active.remove(i)
        row_i = A[i]
        for j in active:
            f = A[j][i] / d
            if f:
                row_j = A[j]
                for k in active:
                    row_j[k] -= f * row_i[k]
        for j in active:
            A[j][i] = A[i][j] = Fraction(0)
    return InertiaSignature(plus, minus, M.dimension - plus - minus)


# ---------------------------------------------------------------------------
# point-pair evaluation matrices
# ---------------------------------------------------------------------------


def swap_halves(p: Polynomial) -> Polynomial:
    """p(y, x) for p in 2n variables (x first, then y)."""
    n2 = p.arity
    if n2 % 2:
        raise ArityError("expected a polynomial in 2n variables")
    n = n2 // 2
    return Polynomial(n2, {m[n:] + m[:n]: c for m, c in p.items()})


class ProductPolynomial:
    """Unexpanded product of polynomials over a common ring.

    Evaluation multiplies factor values, so high-degree products such as the
    canonical distance polynomial never need to be expanded.
    """

    def __init__(self, factors: Sequence[Polynomial], arity: int):
        if any(f.arity != arity for f in factors):
            raise ArityError("factors of different arity")
        self.factors = tuple(factors)
        self.arity = arity

    @property
    def degree(self):
        return sum((f.degree for f in self.factors), 0)

    def evaluate(self, point) -> Fraction:
        v = Fraction(1)
        for f in self.factors:
            v *= f.evaluate(point)
            if not v:
                break
        return v

    def expand(self) -> Polynomial:
        out = Polynomial.constant(1, self.arity)
        for f in self.factors:
            out = out * f
        return out

    def is_symmetric(self) -> bool:
        """Sufficient test: every factor is invariant under x <-> y."""
        return all(swap_halves(f) == f for f in self.factors)


def canonical_pp_polynomial(A: PointSet) -> ProductPolynomial:
    """prod over squared distances T of A of (T - |x - y|^2), in 2n variables."""
    n = A.arity
    sq = Polynomial.zero(2 * n)
    for i in range(n):
        diff = Polynomial.var(i + 1, 2 * n) - Polynomial.var(n + i + 1, 2 * n)
        sq = sq + diff * diff
    factors = []
    if len(A) >= 2:
        factors = [Polynomial.constant(t, 2 * n) - sq for t in squared_distance_set(A)]
    return ProductPolynomial(factors, 2 * n)


def evaluation_matrix(A: PointSet, p) -> list[list[Fraction]]:
    """Matrix of p(a, b) over ordered pairs of A (not necessarily symmetric)."""
    if p.arity != 2 * A.arity:
        raise ArityError(f"p has arity {p.arity}, expected {2 * A.arity} for points in Q^{A.arity}")
    return [[p.evaluate(a + b) for b in A.points] for a in A.points]


def pp_matrix(A: PointSet, p, symmetrize: bool = False) -> SymmetricRationalMatrix:
    """Symmetric matrix M(A, p)(a, b) = p(a, b).

    An asymmetric p is rejected unless ``symmetrize`` is set, in which case
    (p(x,y) + p(y,x)) / 2 is used; the quadratic form is unchanged by this.
    """
    if isinstance(p, ProductPolynomial):
        if p.is_symmetric():
            return SymmetricRationalMatrix.of(evaluation_matrix(A, p))
        p = p.expand()
    q = swap_halves(p) if p.arity % 2 == 0 else None
    if q is None or q != p:
        if not symmetrize or q is None:
            raise HypothesisViolation("p(x, y) is not symmetric under x <-> y; pass symmetrize=True")
        p = (p + q).scale(Fraction(1, 2))
    return SymmetricRationalMatrix.of(evaluation_matrix(A, p))


@dataclass(frozen=True)
class PPCheck:
    rank: int
    signature: InertiaSignature
    h_value: int
    rank_ok: bool
    inertia_ok: bool


def check_pp_theorem(A: PointSet, p, s: int) -> PPCheck:
    """rank M(A,p) <= 2 h_A(s) and max(r+, r-) <= h_A(s), for deg p <= 2s+1."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if p.degree > 2 * s + 1:
        raise HypothesisViolation(f"deg p = {p.degree} exceeds 2s+1 = {2 * s + 1}")
    h = point_set_hilbert_function(A, s)
    rk = rank(evaluation_matrix(A, p))
    sig = inertia(pp_matrix(A, p, symmetrize=True))
    return PPCheck(rk, sig, h, rk <= 2 * h, max(sig.r_plus, sig.r_minus) <= h)


def standard_monomial_max_degree(A: PointSet) -> int:
    """Largest degree of a DegLex standard monomial of I(A)."""
    _, sm = buchberger_moller(A, DEGLEX)
    return max(sum(u) for u in sm)


# ---------------------------------------------------------------------------
# bounds on concrete point sets
# ---------------------------------------------------------------------------


def _on_common_sphere(A: PointSet) -> bool:
    # |x|^2 = 2 c.x + k must be solvable in (c, k)
    coef = [[2 * x for x in a] + [Fraction(1)] for a in A.points]
    aug = [row + [sum(x * x for x in a)] for row, a in zip(coef, A.points)]
    return rank(coef) == rank(aug)


def _check_family_membership(A: PointSet, family: B.Family, params: dict, generators) -> None:
    n = A.arity
    if family is B.Family.GENERAL:
        for g in generators:
            if g.arity != n:
                raise ArityError(f"generator of arity {g.arity} for points in Q^{n}")
            for a in A.points:
                if g.evaluate(a) != 0:
                    raise HypothesisViolation(f"generator {g} does not vanish at ({', '.join(map(str, a))})")
    elif family is B.Family.DGS:
        if not _on_common_sphere(A):
            raise HypothesisViolation("points do not lie on a common sphere")
    elif family is B.Family.BOX:
        q = params["q"]
        for i in range(n):
            vals = {a[i] for a in A.points}
            if len(vals) > q:
                raise HypothesisViolation(f"coordinate {i + 1} takes {len(vals)} > q = {q} values")
    elif family is B.Family.PERMUTATION:
        ref = sorted(A.points[0])
        if len(set(ref)) != n:
            raise HypothesisViolation("permutation family needs distinct coordinate values")
        if any(sorted(a) != ref for a in A.points):
            raise HypothesisViolation("points are not permutations of a common vector")
    elif family is B.Family.UNIFORM:
        d = params["d"]
        for a in A.points:
            if any(x not in (0, 1) for x in a) or sum(a) != d:
                raise HypothesisViolation(f"point ({', '.join(map(str, a))}) is not a 0/1 vector of weight {d}")


@dataclass(frozen=True)
class DistanceBoundCheck:
    s: int
    size: int
    bound: int
    holds: bool
    report: B.BoundReport


def check_distance_bound(
    A: PointSet, family: B.Family | str, generators: Sequence[Polynomial] = (), **params
) -> DistanceBoundCheck:
    """Compare |A| with the family bound at s = number of distinct distances of A.

    Membership of A in the family's set is checked where it is decidable from
    the points alone (sphere, box, permutations, uniform layer, generators of
    a general ideal); hypersurface and sphere-union families are taken on
    trust.
    """
    family = B.Family(family) if not isinstance(family, B.Family) else family
    if not len(A):
        raise PointSetError("empty point set")
    params = dict(params)
    if params.get("n") is None:
        params["n"] = A.arity
    elif params["n"] != A.arity:
        raise ArityError(f"family n = {params['n']} but points live in Q^{A.arity}")
    if family is B.Family.GENERAL and generators:
        params.pop("n")
    _check_family_membership(A, family, params, generators)
    s = len(squared_distance_set(A)) if len(A) >= 2 else 0
    if s == 0:
        # a single point: every bound is at least 1
        report = B.BoundReport(family, {**params, "s": 0}, 1, "1")
    else:
        report = B.evaluate_bound(family, s, generators, **params)
    return DistanceBoundCheck(s, len(A), report.value, len(A) <= report.value, report)


# ---------------------------------------------------------------------------
# point families
# ---------------------------------------------------------------------------


def box(*coordinate_sets: Sequence) -> PointSet:
    """Cartesian product T_1 x ... x T_n."""
    if not coordinate_sets:
        raise PointSetError("box needs at least one coordinate set")
    sets = []
    for i, T in enumerate(coordinate_sets, start=1):
        T = [Fraction(t) for t in T]
        if len(set(T)) != len(T) or len(T) < 2:
            raise PointSetError(f"T_{i} must have at least two distinct values")
        sets.append(T)
    return PointSet.of(itertools.product(*sets))


def permutations(*alphas) -> PointSet:
    """All permutations of distinct reals alpha_1..alpha_n, as vectors."""
    vals = [Fraction(a) for a in alphas]
    if not vals or len(set(vals)) != len(vals):
        raise PointSetError("permutation family needs distinct values")
    return PointSet.of(itertools.permutations(vals))


def uniform_layer(n: int, d: int) -> PointSet:
    """0/1 vectors of length n with exactly d ones."""
    if not 0 <= d <= n or n < 1:
        raise PointSetError(f"need 0 <= d <= n, n >= 1 (got n={n}, d={d})")
    pts = []
    for ones in itertools.combinations(range(n), d):
        pts.append(tuple(1 if i in ones else 0 for i in range(n)))
    return PointSet.of(pts)


def even_weight(n: int) -> PointSet:
    if n < 1:
        raise PointSetError("n must be positive")
    return PointSet.of(v for v in itertools.product((0, 1), repeat=n) if sum(v) % 2 == 0)


def _rational_sqrt(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise PointSetError("radius squared must be positive")
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a != x.numerator or b * b != x.denominator:
        raise PointSetError(f"radius squared {x} is not the square of a rational")
    return Fraction(a, b)


def sphere_sample(center: Sequence, radius2, count: int, seed: int, height: int = 12) -> PointSet:
    """``count`` distinct rational points exactly on the sphere |x - center|^2 = radius2.

    Points come from inverse stereographic projection of random rational
    parameters t in Q^{n-1} with numerators and denominators bounded by
    ``height``.
    """
    c = [Fraction(x) for x in center]
    n = len(c)
    if n < 2:
        raise PointSetError("sphere sampling needs dimension >= 2")
    if count < 1:
        raise PointSetError("count must be positive")
    r = _rational_sqrt(Fraction(radius2))
    rng = np.random.default_rng(seed)
    seen: dict = {}
    attempts = 0
    while len(seen) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise PointSetError("could not draw enough distinct sphere points")
        nums = rng.integers(-height, height + 1, size=n - 1)
        dens = rng.integers(1, height + 1, size=n - 1)
        t = [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]
        tt = sum(x * x for x in t)
        den = 1 + tt
        unit = [2 * x / den for x in t] + [(tt - 1) / den]
        pt = tuple(ci + r * ui for ci, ui in zip(c, unit))
        seen.setdefault(pt, None)
    return PointSet.of(seen)


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

SEARCH_GUARD = 24


@dataclass(frozen=True)
class SearchResult:
    max_size: int
    witness: PointSet | None
    indices: tuple[int, ...]


def brute_force_max_sdist(candidates: PointSet, s: int, size_cap: int | None = None) -> SearchResult:
    """Largest subset of ``candidates`` with at most s distinct squared distances.

    Depth-first over candidate indices, pruning on the running distance set
    and on the number of candidates left. ``size_cap`` stops the search once
    a subset of that size is found.
    """
    m = len(candidates)
    if m > SEARCH_GUARD and size_cap is None:
        raise ValueError(f"{m} candidates exceeds the exhaustive-search guard of {SEARCH_GUARD}; pass size_cap")
    if s < 0:
        raise ValueError("s must be non-negative")
    pts = candidates.points
    dist = [[squared_distance(a, b) for b in pts] for a in pts]
    cap = m if size_cap is None else min(size_cap, m)
    best: list[int] = [0] if m else []
    chosen: list[int] = []

    def rec(start: int, ds: frozenset):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= cap:
                return True
        if len(chosen) + (m - start) <= len(best):
            return False
        for j in range(start, m):
            new = ds.union(dist[j][i] for i in chosen)
            if len(new) <= s:
                chosen.append(j)
                if rec(j + 1, new):
                    return True
                chosen.pop()
            if len(chosen) + (m - j - 1) <= len(best):
                break
        return False

    rec(0, frozenset())
    witness = candidates.subset(best) if best else None
    return SearchResult(len(best), witness, tuple(best))
