"""Division, S-polynomials and Buchberger's algorithm over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import (
    DEGLEX,
    ArityError,
    Monomial,
    Polynomial,
    TermOrder,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """(L/lt f)*f - (L/lt g)*g with L the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.arity != g.arity:
        raise ArityError(f"arity mismatch: {f.arity} vs {g.arity}")
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = monomial_lcm(mf, mg)
    return f.mul_term(monomial_quotient(lcm, mf), 1 / cf) - g.mul_term(monomial_quotient(lcm, mg), 1 / cg)


def _divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder, want_quotients: bool):
    n = f.arity
    for g in divisors:
        if g.arity != n:
            raise ArityError(f"arity mismatch: {n} vs {g.arity}")
        if g.is_zero():
            raise ValueError("division by the zero polynomial")
    leads = [g.leading_term(order) for g in divisors]
    key = order.key
    p: dict[Monomial, Fraction] = dict(f.items())
    rem: dict[Monomial, Fraction] = {}
    quots: list[dict[Monomial, Fraction]] | None = [{} for _ in divisors] if want_quotients else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if monomial_divides(lm, m):
                q = monomial_quotient(m, lm)
                factor = c / lc
                for gm, gc in divisors[i].items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(t, 0) - factor * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                if quots is not None:
                    quots[i][q] = quots[i].get(q, 0) + factor
                break
        else:
            rem[m] = c
            del p[m]
    remainder = Polynomial._raw(n, rem)
    if quots is None:
        return remainder
    return [Polynomial(n, q) for q in quots], remainder


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of f on full division by ``divisors``.

    The largest reducible monomial is always eliminated first, with divisors
    tried in list order, so the result is deterministic.
    """
    return _divide(f, divisors, order, want_quotients=False)


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder):
    """Like :func:`normal_form` but also return the quotients.

    ``f == sum(q * g for q, g in zip(quotients, divisors)) + remainder``.
    """
    return _divide(f, divisors, order, want_quotients=True)


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    @property
    def arity(self) -> int:
        return self.elements[0].arity

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        """True if the ideal is the whole ring."""
        return any(g.is_constant() for g in self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def ideal_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G.elements, G.order).is_zero()


def _update(basis, lms, pairs, new_index, order):
    """Gebauer-Moeller pair update after appending basis[new_index]."""
    lm_new = lms[new_index]

    def lcm_of(i, j):
        return monomial_lcm(lms[i], lms[j])

    # chain criterion on old pairs
    kept = set()
    for i, j in pairs:
        L = lcm_of(i, j)
        if (
            monomial_divides(lm_new, L)
            and L != lcm_of(i, new_index)
            and L != lcm_of(j, new_index)
        ):
            continue
        kept.add((i, j))

    by_lcm: dict[Monomial, list[int]] = {}
    for i in range(new_index):
        if basis[i] is None:
            continue
        by_lcm.setdefault(lcm_of(i, new_index), []).append(i)

    # drop lcms properly divisible by another new lcm
    candidates = sorted(by_lcm, key=order.key)
    minimal: list[Monomial] = []
    for L in candidates:
        if not any(monomial_divides(M, L) for M in minimal):
            minimal.append(L)

    for L in minimal:
        group = by_lcm[L]
        # coprime leading monomials: the whole class reduces to zero
        if any(L == tuple(a + b for a, b in zip(lms[i], lm_new)) for i in group):
            continue
        kept.add((min(group), new_index))
    return kept


def buchberger(generators: Sequence[Polynomial], order: TermOrder = DEGLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("all generators are zero; the zero ideal has no Groebner basis here")
    n = gens[0].arity
    if any(g.arity != n for g in gens):
        raise ArityError("generators of different arity")

    basis: list[Polynomial | None] = []
    lms: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()

    def add(h: Polynomial):
        nonlocal pairs
        h = h.monic(order)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        pairs = _update(basis, lms, pairs, len(basis) - 1, order)

    for g in sorted(gens, key=lambda p: order.key(p.leading_monomial(order))):
        r = normal_form(g, [b for b in basis if b is not None], order)
        if not r.is_zero():
            add(r)

    while pairs:
        # normal selection strategy; ties broken by indices for determinism
        pair = min(pairs, key=lambda ij: (order.key(monomial_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard(pair)
        i, j = pair
        s = s_polynomial(basis[i], basis[j], order)
        r = normal_form(s, [b for b in basis if b is not None], order)
        if not r.is_zero():
            add(r)

    return GroebnerBasis(order, tuple(reduce_basis([b for b in basis if b is not None], order)), True)


def minimalize(G: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Drop elements whose leading monomial is divisible by another's."""
    out: list[Polynomial] = []
    for g in sorted(G, key=lambda p: order.key(p.leading_monomial(order))):
        lm = g.leading_monomial(order)
        if not any(monomial_divides(h.leading_monomial(order), lm) for h in out):
            out.append(g)
    return out


def reduce_basis(G: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Turn a Groebner basis into the reduced one, sorted by leading monomial."""
    G = minimalize(G, order)
    out = []
    for i, g in enumerate(G):
        lm, lc = g.leading_term(order)
        tail = g - Polynomial.monomial(lm, lc)
        tail = normal_form(tail, G[:i] + G[i + 1 :], order)
        out.append((tail + Polynomial.monomial(lm, lc)).monic(order))
    return out


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder) -> bool:
    """Buchberger's criterion checked over every pair."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not normal_form(s_polynomial(G[i], G[j], order), G, order).is_zero():
                return False
    return True


def is_reduced(G: Sequence[Polynomial], order: TermOrder) -> bool:
    lms = [g.leading_monomial(order) for g in G]
    for i, g in enumerate(G):
        if g.leading_term(order)[1] != 1:
            return False
        for j, lm in enumerate(lms):
            if i != j and any(monomial_divides(lm, m) for m in g.monomials()):
                return False
    return True
