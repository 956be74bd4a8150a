"""Upper bounds for s-distance sets in real algebraic sets.

Each family has a closed form; :func:`general_bound` evaluates the affine
Hilbert function of an arbitrary ideal, which every closed form specialises.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .hilbert import hilbert_function
from .poly import Polynomial


class BoundDomainError(ValueError):
    """Parameters outside the range where a bound is stated."""


class Family(enum.Enum):
    BBS = "bbs"
    DGS = "dgs"
    HYPERSURFACE = "hypersurface"
    SPHERE_UNION = "spheres"
    BOX = "box"
    PERMUTATION = "perm"
    UNIFORM = "uniform"
    GENERAL = "general"


@dataclass(frozen=True)
class BoundReport:
    family: Family
    parameters: dict
    value: int
    formula_text: str


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BoundDomainError(msg)


def bbs_bound(n: int, s: int) -> int:
    """Bound for s-distance sets in R^n: C(n+s, s)."""
    _require(n >= 1 and s >= 1, f"bbs bound needs n, s >= 1 (got n={n}, s={s})")
    return comb(n + s, s)


def dgs_bound(n: int, s: int) -> int:
    """Spherical s-distance sets on S^{n-1}."""
    _require(n >= 2 and s >= 1, f"dgs bound needs n >= 2, s >= 1 (got n={n}, s={s})")
    return comb(n + s - 1, s) + comb(n + s - 2, s - 1)


def hypersurface_bound(n: int, d: int, s: int) -> int:
    """h(s) of a principal ideal generated in degree d."""
    _require(n >= 1 and d >= 1 and s >= 1, f"hypersurface bound needs n, d, s >= 1 (got {n}, {d}, {s})")
    if s < d:
        return comb(n + s, n)
    return comb(n + s, n) - comb(n + s - d, n)


def plane_curve_bound(d: int, s: int) -> int:
    _require(d >= 1, "curve degree must be >= 1")
    _require(s >= d, f"plane curve form needs s >= d (got s={s}, d={d})")
    # d(d-3) is always even
    return d * s - d * (d - 3) // 2


def sphere_union_sum(n: int, p: int, s: int) -> int:
    return sum(comb(n + s - i - 1, s - i) for i in range(2 * p))


def sphere_union_bound(n: int, p: int, s: int) -> int:
    """Union of p spheres in R^n; falls back to the BBS bound when s < 2p."""
    _require(n >= 2 and p >= 1 and s >= 1, f"sphere union bound needs n >= 2, p, s >= 1 (got {n}, {p}, {s})")
    if s < 2 * p:
        return bbs_bound(n, s)
    total = sphere_union_sum(n, p, s)
    diff = comb(n + s, n) - comb(n + s - 2 * p, n)
    if total != diff:
        raise ArithmeticError(f"sphere union forms disagree at n={n}, p={p}, s={s}: {total} != {diff}")
    return total


def extended_binomial(n: int, j: int, q: int) -> int:
    """Compositions of j into n parts, each in {0, ..., q-1}."""
    _require(n >= 0 and q >= 1, "extended binomial needs n >= 0, q >= 1")
    if j < 0:
        return 0
    row = [1] + [0] * j
    for _ in range(n):
        new = [0] * (j + 1)
        for total in range(j + 1):
            if row[total]:
                for part in range(min(q - 1, j - total) + 1):
                    new[total + part] += row[total]
        row = new
    return row[j]


def box_bound(n: int, q: int, s: int) -> int:
    """Monomials with every exponent < q and total degree <= s."""
    _require(n >= 1, "box bound needs n >= 1")
    _require(q >= 2, f"box bound needs q >= 2 (got q={q})")
    _require(s >= 0, "box bound needs s >= 0")
    # by_degree[t] = number of exponent vectors of the first k variables with sum t
    by_degree = [1] + [0] * s
    for _ in range(n):
        acc = [0] * (s + 1)
        for t, c in enumerate(by_degree):
            if c:
                for e in range(min(q - 1, s - t) + 1):
                    acc[t + e] += c
        by_degree = acc
    return sum(by_degree)


@dataclass(frozen=True)
class InversionTable:
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    @property
    def max_inversions(self) -> int:
        return len(self.counts) - 1


def inversion_numbers(n: int) -> InversionTable:
    """I_n(i) as coefficients of prod_{k=1..n} (1 + z + ... + z^{k-1})."""
    _require(n >= 1, "inversion numbers need n >= 1")
    coeffs = [1]
    for k in range(1, n + 1):
        out = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j in range(k):
                out[i + j] += c
        coeffs = out
    return InversionTable(n, tuple(coeffs))


def permutation_bound(n: int, s: int) -> int:
    _require(s >= 0, "s must be non-negative")
    table = inversion_numbers(n)
    return sum(table.counts[: min(s, table.max_inversions) + 1])


def uniform_bound(n: int, d: int, s: int) -> int:
    """0/1 vectors of weight d; stated only for 0 <= s <= min(d, n-d)."""
    _require(0 <= d <= n, f"need 0 <= d <= n (got n={n}, d={d})")
    _require(0 <= s <= min(d, n - d), f"uniform bound needs 0 <= s <= min(d, n-d) = {min(d, n - d)} (got s={s})")
    return comb(n, s)


def general_bound(generators: Sequence[Polynomial], s: int, arity: int | None = None) -> int:
    """h_{R[x]/I}(s) for I generated by ``generators`` (empty list: zero ideal)."""
    return hilbert_function(list(generators), s, arity)


# ---------------------------------------------------------------------------
# uniform dispatch
# ---------------------------------------------------------------------------

_REQUIRED = {
    Family.BBS: ("n",),
    Family.DGS: ("n",),
    Family.HYPERSURFACE: ("n", "d"),
    Family.SPHERE_UNION: ("n", "p"),
    Family.BOX: ("n", "q"),
    Family.PERMUTATION: ("n",),
    Family.UNIFORM: ("n", "d"),
    Family.GENERAL: (),
}


def required_parameters(family: Family) -> tuple[str, ...]:
    return _REQUIRED[family]


def evaluate_bound(family: Family | str, s: int, generators: Sequence[Polynomial] = (), **params) -> BoundReport:
    """Evaluate ``family`` at distance count s; params are n, d, p, q as needed."""
    family = Family(family) if not isinstance(family, Family) else family
    missing = [k for k in _REQUIRED[family] if params.get(k) is None]
    if missing:
        raise BoundDomainError(f"family {family.value} needs parameter(s): {', '.join(missing)}")
    n, d, p, q = (params.get(k) for k in "ndpq")
    if family is Family.BBS:
        value, text = bbs_bound(n, s), f"C({n}+{s}, {s})"
    elif family is Family.DGS:
        value, text = dgs_bound(n, s), f"C({n}+{s}-1, {s}) + C({n}+{s}-2, {s}-1)"
    elif family is Family.HYPERSURFACE:
        value = hypersurface_bound(n, d, s)
        text = f"C({n}+{s}, {n}) - C({n}+{s}-{d}, {n})" if s >= d else f"C({n}+{s}, {n})"
    elif family is Family.SPHERE_UNION:
        value = sphere_union_bound(n, p, s)
        text = f"sum_(i=0)^(2*{p}-1) C({n}+{s}-i-1, {s}-i)" if s >= 2 * p else f"C({n}+{s}, {s})"
    elif family is Family.BOX:
        value = box_bound(n, q, s)
        text = f"sum_(j=0)^{s} C({n}, j)_{q}"
    elif family is Family.PERMUTATION:
        value = permutation_bound(n, s)
        text = f"sum_(i=0)^{s} I_{n}(i)"
    elif family is Family.UNIFORM:
        value, text = uniform_bound(n, d, s), f"C({n}, {s})"
    else:
        gens = list(generators)
        value = general_bound(gens, s, n)
        n = n if n is not None else (gens[0].arity if gens else None)
        text = f"h_(R[x]/I)({s}) with {len(gens)} generator(s)"
    used = {k: v for k, v in (("n", n), ("d", d), ("p", p), ("q", q)) if v is not None}
    used["s"] = s
    return BoundReport(family, used, value, text)
