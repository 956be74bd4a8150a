"""Standard monomials, affine Hilbert functions and vanishing ideals of points."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .groebner import GroebnerBasis, buchberger
from .poly import DEGLEX, ArityError, Monomial, Polynomial, TermOrder, monomial_divides
from .points import PointSet


@dataclass(frozen=True)
class StandardMonomialSet:
    order: TermOrder
    arity: int
    degree_cap: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def degree_profile(self) -> list[int]:
        """Number of standard monomials in each degree 0..degree_cap."""
        counts = [0] * (self.degree_cap + 1)
        for m in self.monomials:
            counts[sum(m)] += 1
        return counts


def _staircase(lms: Sequence[Monomial], n: int, s: int) -> list[Monomial]:
    out: list[Monomial] = []
    if any(monomial_divides(lm, (0,) * n) for lm in lms):
        return out

    def rec(prefix: list[int], budget: int):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        pad = [0] * (n - i - 1)
        for e in range(budget + 1):
            m = tuple(prefix + [e] + pad)
            if e and any(monomial_divides(lm, m) for lm in lms):
                break
            rec(prefix + [e], budget - e)

    rec([], s)
    return out


def standard_monomials_leq(G: GroebnerBasis, s: int) -> StandardMonomialSet:
    """Monomials of degree <= s outside the initial ideal of G."""
    if s < 0:
        raise ValueError("degree cap must be non-negative")
    mons = _staircase(G.leading_monomials(), G.arity, s)
    mons.sort(key=G.order.key)
    return StandardMonomialSet(G.order, G.arity, s, tuple(mons))


def _infer_arity(generators: Sequence[Polynomial], arity: int | None) -> int:
    if generators:
        n = generators[0].arity
        if any(g.arity != n for g in generators):
            raise ArityError("generators of different arity")
        if arity is not None and arity != n:
            raise ArityError(f"generators have arity {n}, expected {arity}")
        return n
    if arity is None:
        raise ValueError("arity is required for an empty generator list")
    return arity


@dataclass(frozen=True)
class HilbertTable:
    values: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def as_list(self) -> list[int]:
        return [self.values[s] for s in sorted(self.values)]


def hilbert_table(generators: Sequence[Polynomial], s_max: int, arity: int | None = None, s_min: int = 0) -> HilbertTable:
    """h(s) for s_min <= s <= s_max from a single DegLex Groebner basis.

    An empty (or all-zero) generator list stands for the zero ideal.
    """
    gens = [g for g in generators]
    n = _infer_arity(gens, arity)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return HilbertTable({s: comb(n + s, n) for s in range(s_min, s_max + 1)})
    G = buchberger(gens, DEGLEX)
    profile = standard_monomials_leq(G, s_max).degree_profile()
    values = {}
    running = 0
    for s, c in enumerate(profile):
        running += c
        if s >= s_min:
            values[s] = running
    return HilbertTable(values)


def hilbert_function(generators: Sequence[Polynomial], s: int, arity: int | None = None) -> int:
    """Affine Hilbert function h_{S/I}(s) of I = (generators)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return hilbert_table(generators, s, arity, s_min=s)[s]


# ---------------------------------------------------------------------------
# vanishing ideals of finite point sets (Buchberger-Moeller)
# ---------------------------------------------------------------------------


def _as_point_set(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet.of(points)


def _evaluate_monomial(m: Monomial, pts) -> list[Fraction]:
    out = []
    for p in pts:
        v = Fraction(1)
        for x, e in zip(p, m):
            if e:
                v *= x**e
        out.append(v)
    return out


def buchberger_moller(points, order: TermOrder = DEGLEX) -> tuple[GroebnerBasis, tuple[Monomial, ...]]:
    """Reduced Groebner basis of I(X) together with its standard monomials.

    Monomials are visited in increasing term order. A monomial whose
    evaluation vector is dependent on those of the standard monomials found
    so far yields a basis element; otherwise it is standard and its
    multiples by each variable are queued.
    """
    X = _as_point_set(points)
    n, pts = X.arity, X.points
    m = len(pts)
    one = (0,) * n
    heap = [(order.key(one), one)]
    queued = {one}
    rows: list[tuple[int, list[Fraction], dict[Monomial, Fraction]]] = []
    standard: list[Monomial] = []
    basis: list[Polynomial] = []
    lms: list[Monomial] = []

    while heap:
        _, t = heapq.heappop(heap)
        if any(monomial_divides(lm, t) for lm in lms):
            continue
        v = _evaluate_monomial(t, pts)
        combo: dict[Monomial, Fraction] = {t: Fraction(1)}
        for piv, vec, poly in rows:
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, vec)]
                for u, w in poly.items():
                    combo[u] = combo.get(u, 0) - c * w
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            basis.append(Polynomial(n, combo))
            lms.append(t)
            continue
        inv = 1 / v[piv]
        rows.append((piv, [a * inv for a in v], {u: w * inv for u, w in combo.items() if w}))
        standard.append(t)
        for k in range(n):
            u = t[:k] + (t[k] + 1,) + t[k + 1 :]
            if u not in queued:
                queued.add(u)
                heapq.heappush(heap, (order.key(u), u))

    assert len(standard) == m
    if not basis:
        # n == 0: a single point in Q^0; the ideal is zero
        raise ValueError("vanishing ideal of a point in zero-dimensional space is the zero ideal")
    return GroebnerBasis(order, tuple(basis), True), tuple(standard)


def vanishing_ideal(points, order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal of polynomials vanishing on ``points``."""
    return buchberger_moller(points, order)[0]


def point_set_hilbert_function(points, s: int) -> int:
    """h_X(s): dimension of the functions on X given by polynomials of degree <= s."""
    _, sm = buchberger_moller(points, DEGLEX)
    return sum(1 for u in sm if sum(u) <= s)


# ---------------------------------------------------------------------------
# eventual Hilbert polynomial
# ---------------------------------------------------------------------------


class HilbertPolynomialNotStable(ValueError):
    """The finite differences did not settle inside the supplied window."""


@dataclass(frozen=True)
class HilbertPolynomialEstimate:
    dimension: int
    degree: int
    coefficients: tuple[Fraction, ...]  # ascending powers of s
    stable_from: int
    values: dict[int, int]

    def __call__(self, s: int) -> Fraction:
        return sum((c * s**i for i, c in enumerate(self.coefficients)), Fraction(0))


def _forward_differences(values: list[int]) -> list[list[int]]:
    rows = [list(values)]
    while len(rows[-1]) > 1:
        r = rows[-1]
        rows.append([b - a for a, b in zip(r, r[1:])])
    return rows


def _newton_to_power_basis(diffs: list[int], s0: int) -> list[Fraction]:
    """Coefficients of sum_j diffs[j] * C(s - s0, j) in powers of s."""
    total = [Fraction(0)] * max(len(diffs), 1)
    basis = [Fraction(1)]  # (s - s0)(s - s0 - 1)...(s - s0 - j + 1) / j!
    for j, dj in enumerate(diffs):
        for i, c in enumerate(basis):
            total[i] += dj * c
        # multiply by (s - s0 - j) / (j + 1)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, c in enumerate(basis):
            nxt[i + 1] += c
            nxt[i] -= (s0 + j) * c
        basis = [c / (j + 1) for c in nxt]
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def hilbert_poly_estimate(
    generators: Sequence[Polynomial],
    s_lo: int,
    s_hi: int,
    arity: int | None = None,
    min_zero_checks: int = 2,
) -> HilbertPolynomialEstimate:
    """Recover the eventual Hilbert polynomial from h(s_lo..s_hi).

    The polynomial degree d is the smallest d for which the last
    ``min_zero_checks`` entries of the (d+1)-th difference row vanish; k is
    the constant d-th difference, i.e. d! times the leading coefficient.
    Raises :class:`HilbertPolynomialNotStable` when no such d exists.
    """
    if s_lo < 0 or s_hi < s_lo:
        raise ValueError("need 0 <= s_lo <= s_hi")
    table = hilbert_table(generators, s_hi, arity, s_min=s_lo)
    vals = [table[s] for s in range(s_lo, s_hi + 1)]
    rows = _forward_differences(vals)
    for d in range(len(rows) - 1):
        nxt = rows[d + 1]
        z = 0
        for x in reversed(nxt):
            if x:
                break
            z += 1
        if z < min_zero_checks:
            continue
        tail_len = z + d + 1
        start = len(vals) - tail_len
        s0 = s_lo + start
        diffs = [rows[j][start] for j in range(d + 1)]
        coeffs = _newton_to_power_basis(diffs, s0)
        if all(c == 0 for c in coeffs):
            return HilbertPolynomialEstimate(-1, 0, (Fraction(0),), s0, table.values)
        deg = len(coeffs) - 1
        k = coeffs[-1] * factorial(deg)
        assert k.denominator == 1
        return HilbertPolynomialEstimate(deg, int(k), tuple(coeffs), s0, table.values)
    raise HilbertPolynomialNotStable(
        f"finite differences of h(s) did not stabilise over s = {s_lo}..{s_hi}; widen the window"
    )
