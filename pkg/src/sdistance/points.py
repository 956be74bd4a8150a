"""Finite point sets with exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]


class PointSetError(ValueError):
    pass


def _to_point(p: Iterable) -> Point:
    out = []
    for x in p:
        if isinstance(x, float):
            raise PointSetError("float coordinates are not allowed; use Fraction, int or 'a/b' strings")
        out.append(Fraction(x))
    return tuple(out)


@dataclass(frozen=True)
class PointSet:
    """Distinct points of Q^n, kept in insertion order."""

    arity: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if any(len(p) != self.arity for p in self.points):
            raise PointSetError(f"all points must have {self.arity} coordinates")
        if len(set(self.points)) != len(self.points):
            seen = set()
            for p in self.points:
                if p in seen:
                    raise PointSetError(f"duplicate point {format_point(p)}")
                seen.add(p)

    @classmethod
    def of(cls, points: Iterable[Iterable]) -> "PointSet":
        pts = tuple(_to_point(p) for p in points)
        if not pts:
            raise PointSetError("empty point set")
        return cls(len(pts[0]), pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.arity, tuple(self.points[i] for i in indices))


def squared_distance(a: Point, b: Point) -> Fraction:
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class SquaredDistanceSet:
    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def squared_distance_set(A: PointSet) -> SquaredDistanceSet:
    """All nonzero squared distances between pairs of A, sorted."""
    if len(A) < 2:
        raise PointSetError("need at least two points to form a distance")
    return SquaredDistanceSet(tuple(sorted({squared_distance(a, b) for a, b in combinations(A.points, 2)})))


def format_point(p: Point) -> str:
    return " ".join(str(x) for x in p)
