"""Exact multivariate polynomials over the rationals.

Monomials are dense exponent tuples. Polynomials are immutable maps from
monomials to nonzero :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]

# degree of the zero polynomial; keeps deg(fg) = deg f + deg g true for f = 0
ZERO_DEGREE = -math.inf


class ArityError(ValueError):
    """Raised when operands live in polynomial rings of different arity."""


class TermOrder(enum.Enum):
    LEX = "lex"
    DEGLEX = "deglex"

    def key(self, m: Monomial):
        """Sort key realising the order; larger key means larger monomial."""
        if self is TermOrder.LEX:
            return m
        return (sum(m), m)

    @classmethod
    def parse(cls, name: str | "TermOrder") -> "TermOrder":
        if isinstance(name, TermOrder):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown term order {name!r} (expected lex or deglex)") from None


LEX = TermOrder.LEX
DEGLEX = TermOrder.DEGLEX


def compare_monomials(u: Monomial, v: Monomial, order: TermOrder) -> int:
    """Return -1, 0 or 1 as u is less than, equal to or greater than v."""
    if len(u) != len(v):
        raise ArityError(f"monomials of arity {len(u)} and {len(v)}")
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def monomial_divides(u: Monomial, v: Monomial) -> bool:
    """True iff u divides v."""
    return all(a <= b for a, b in zip(u, v))


def monomial_quotient(v: Monomial, u: Monomial) -> Monomial:
    """v / u, assuming u divides v."""
    return tuple(b - a for a, b in zip(u, v))


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def variable(i: int, n: int) -> Monomial:
    """Exponent vector of x_{i+1} in arity n (0-based index)."""
    return tuple(1 if j == i else 0 for j in range(n))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use Fraction or int")
    return Fraction(c)


class Polynomial:
    """A polynomial in ``arity`` variables with rational coefficients."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != arity:
                raise ArityError(f"monomial {m} does not have arity {arity}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = _coerce(c)
            s = clean.get(m, 0) + c
            if s:
                clean[m] = s
            else:
                clean.pop(m, None)
        self.arity = arity
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity)

    @classmethod
    def constant(cls, c, arity: int) -> "Polynomial":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def var(cls, i: int, arity: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= arity:
            raise ValueError(f"variable x{i} out of range for arity {arity}")
        return cls(arity, {variable(i - 1, arity): 1})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls(len(m), {m: c})

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "Polynomial":
        # trusted path: terms already clean
        p = cls.__new__(cls)
        p.arity = arity
        p._terms = terms
        p._hash = None
        return p

    # -- accessors ----------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    @property
    def degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(sum(m) for m in self._terms)

    def leading_term(self, order: TermOrder) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        return self.leading_term(order)[0]

    def leading_form(self) -> "Polynomial":
        """Homogeneous component of top degree."""
        d = self.degree
        return Polynomial._raw(self.arity, {m: c for m, c in self._terms.items() if sum(m) == d})

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.arity)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.arity, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.arity, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.arity)
        return Polynomial._raw(self.arity, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term c * x^m."""
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.arity)
        return Polynomial._raw(
            self.arity,
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._terms.items()},
        )

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.arity:
            raise ArityError(f"point of length {len(point)} for arity {self.arity}")
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def substitute_variables(self, arity: int, positions: Sequence[int]) -> "Polynomial":
        """Embed into a larger ring: variable i goes to position positions[i]."""
        out = {}
        for m, c in self._terms.items():
            nm = [0] * arity
            for i, e in enumerate(m):
                nm[positions[i]] += e
            out[tuple(nm)] = c
        return Polynomial(arity, out)

    # -- comparison / display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.arity)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.arity}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


class PolynomialSyntaxError(ValueError):
    """Parse failure; ``pos`` is the 0-based character offset into the text."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}")


_TOKEN = re.compile(r"(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^])|(?P<ws>\s+)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        if mt.lastgroup != "ws":
            tokens.append((mt.lastgroup, mt.group(), pos))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text: str, arity: int) -> Polynomial:
    """Parse e.g. ``"x1^2 + 3/4*x1*x3 - 1"`` into a polynomial of the given arity.

    Grammar: signed terms joined by ``+``/``-``; a term is an optional
    coefficient (``int`` or ``int/int``) followed by ``*``-joined powers
    ``xk`` or ``xk^e``, or a bare coefficient.
    """
    toks = _tokenize(text)
    i = 0

    def peek(op: str | None = None):
        kind, val, _ = toks[i]
        if op is None:
            return kind
        return kind == "op" and val == op

    def take(kind: str, what: str):
        nonlocal i
        k, val, pos = toks[i]
        if k != kind:
            found = "end of input" if k == "end" else repr(val)
            raise PolynomialSyntaxError(f"expected {what}, found {found}", text, pos)
        i += 1
        return val, pos

    terms: dict[Monomial, Fraction] = {}
    first = True
    while peek() != "end" or first:
        sign = 1
        if peek("+") or peek("-"):
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            take("op", "'+' or '-'")
        first = False

        coeff = Fraction(sign)
        exps = [0] * arity
        need_var = True
        if peek() == "num":
            num, _ = take("num", "number")
            den = 1
            if peek("/"):
                i += 1
                d, dpos = take("num", "denominator")
                den = int(d)
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", text, dpos)
            coeff *= Fraction(int(num), den)
            if peek("*"):
                i += 1
            else:
                need_var = False
        while need_var:
            name, pos = take("var", "a variable x1..xn")
            idx = int(name[1:])
            if not 1 <= idx <= arity:
                raise PolynomialSyntaxError(f"variable {name} out of range for arity {arity}", text, pos)
            e = 1
            if peek("^"):
                i += 1
                e = int(take("num", "exponent")[0])
            exps[idx - 1] += e
            need_var = peek("*")
            if need_var:
                i += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial(arity, terms)


def max_variable_index(text: str) -> int:
    """Largest k such that ``xk`` occurs in text (0 if none)."""
    found = [int(m) for m in re.findall(r"x(\d+)", text)]
    return max(found, default=0)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial, order: TermOrder = DEGLEX) -> str:
    """Render terms in decreasing order; output is accepted by :func:`parse_polynomial`."""
    if f.is_zero():
        return "0"
    out = []
    for m in sorted(f.monomials(), key=order.key, reverse=True):
        c = f.coefficient(m)
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m)
        if mono == "1":
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)
