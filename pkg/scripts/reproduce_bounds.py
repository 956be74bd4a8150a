#!/usr/bin/env python3
"""Tabulate closed-form bounds next to the Groebner/standard-monomial count.

Each row pairs a closed form with the Hilbert function of a concrete ideal
(sphere, random hypersurface, box, permutations, uniform layer); the last
column flags any disagreement.
"""

from __future__ import annotations

import argparse
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from sdistance import bounds as B
from sdistance.hilbert import hilbert_function, hilbert_poly_estimate, vanishing_ideal
from sdistance.poly import Polynomial, parse_polynomial
from sdistance.verify import box, permutations, uniform_layer


@dataclass
class Config:
    max_n: int = 4
    max_s: int = 5
    seed: int = 0


def sphere(n: int) -> Polynomial:
    f = Polynomial.constant(-1, n)
    for i in range(1, n + 1):
        f = f + Polynomial.var(i, n) ** 2
    return f


def random_hypersurface(rng: random.Random, n: int, d: int) -> Polynomial:
    terms = {}
    for _ in range(4):
        m = [0] * n
        for _ in range(rng.randint(0, d - 1)):
            m[rng.randrange(n)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    top = [0] * n
    top[rng.randrange(n)] = d
    terms[tuple(top)] = 1
    return Polynomial(n, terms)


def rows(cfg: Config):
    rng = random.Random(cfg.seed)
    for n in range(2, cfg.max_n + 1):
        for s in range(1, cfg.max_s + 1):
            yield "sphere", f"n={n} s={s}", B.dgs_bound(n, s), hilbert_function([sphere(n)], s)
    for n, d in itertools.product(range(1, cfg.max_n), (2, 3, 4)):
        F = random_hypersurface(rng, n, d)
        for s in range(1, cfg.max_s + 1):
            yield "hypersurface", f"n={n} d={d} s={s}", B.hypersurface_bound(n, d, s), hilbert_function([F], s)
    for n, q in itertools.product(range(1, 4), (2, 3)):
        G = vanishing_ideal(box(*[range(q)] * n))
        for s in range(n * (q - 1) + 1):
            yield "box", f"n={n} q={q} s={s}", B.box_bound(n, q, s), hilbert_function(G.elements, s)
    for n in (3, 4):
        G = vanishing_ideal(permutations(*range(1, n + 1)))
        for s in range(n * (n - 1) // 2 + 1):
            yield "perm", f"n={n} s={s}", B.permutation_bound(n, s), hilbert_function(G.elements, s)
    for n, d in [(4, 2), (5, 2), (6, 3)]:
        G = vanishing_ideal(uniform_layer(n, d))
        for s in range(min(d, n - d) + 1):
            yield "uniform", f"n={n} d={d} s={s}", B.uniform_bound(n, d, s), hilbert_function(G.elements, s)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-s", type=int, default=Config.max_s)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ns = ap.parse_args()
    cfg = Config(ns.max_n, ns.max_s, ns.seed)

    mismatches = 0
    print(f"{'family':<13}{'parameters':<20}{'closed':>8}{'ideal':>8}")
    for family, params, closed, counted in rows(cfg):
        flag = "" if closed == counted else "  MISMATCH"
        mismatches += bool(flag)
        print(f"{family:<13}{params:<20}{closed:>8}{counted:>8}{flag}")

    print()
    print("Hilbert polynomial estimates (dimension, leading multiplicity):")
    for label, gens, arity in [
        ("circle", [sphere(2)], 2),
        ("x2^2 - x1^3 - 1", [parse_polynomial("x2^2 - x1^3 - 1", 2)], 2),
        ("zero ideal", [], 2),
        ("2-sphere", [sphere(3)], 3),
    ]:
        est = hilbert_poly_estimate(gens, 3, 12, arity=arity)
        print(f"  {label:<18} d={est.dimension} k={est.degree}")
    print(f"\n{mismatches} mismatch(es)")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
