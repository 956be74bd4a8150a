#!/usr/bin/env python3
"""Exhaustive maximum s-distance subsets of small families against their bounds.

Prints the largest subset found by branch-and-bound, the matching closed-form
bound and whether equality holds.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sdistance import bounds as B
from sdistance.verify import box, brute_force_max_sdist, even_weight, permutations, uniform_layer


@dataclass
class Case:
    label: str
    candidates: object
    s: int
    bound: int


def cases(max_cube: int) -> list[Case]:
    out = []
    for n in range(2, max_cube + 1):
        cube = box(*[[0, 1]] * n)
        for s in range(1, n + 1):
            if s <= 2 or n <= 3:
                out.append(Case(f"{{0,1}}^{n}", cube, s, B.box_bound(n, 2, s)))
    grid = box([0, 1, 2], [0, 1, 2])
    out += [Case("{0,1,2}^2", grid, s, B.box_bound(2, 3, s)) for s in (1, 2, 3)]
    out += [Case("Y(5,2)", uniform_layer(5, 2), s, B.uniform_bound(5, 2, s)) for s in (1, 2)]
    out += [Case("Y(6,3)", uniform_layer(6, 3), s, B.uniform_bound(6, 3, s)) for s in (1, 2)]
    out += [Case("X(1,2,4,8)", permutations(1, 2, 4, 8), s, B.permutation_bound(4, s)) for s in (1, 2, 3)]
    out += [Case("even weight 4", even_weight(4), 1, B.box_bound(4, 2, 1))]
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-cube", type=int, default=4, help="largest n for {0,1}^n (at most 4)")
    args = ap.parse_args()

    print(f"{'candidates':<16}{'s':>3}{'max':>6}{'bound':>7}  status")
    failures = 0
    for c in cases(min(args.max_cube, 4)):
        res = brute_force_max_sdist(c.candidates, c.s)
        if res.max_size > c.bound:
            status = "VIOLATED"
            failures += 1
        else:
            status = "tight" if res.max_size == c.bound else "strict"
        print(f"{c.label:<16}{c.s:>3}{res.max_size:>6}{c.bound:>7}  {status}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
