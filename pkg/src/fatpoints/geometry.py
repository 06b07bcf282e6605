"""Projective points, hyperplanes and arrangements in P^n with exact coordinates.

Points and hyperplane covectors are canonicalized so that the first nonzero
coordinate equals 1, which makes equality a plain componentwise comparison
and makes every type here hashable.  All operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exactalg import Matrix, as_scalar, kernel_basis, rank


class GeometryError(Exception):
    """Base class for geometric input errors."""


class DegenerateSpan(GeometryError):
    """The given points do not span a hyperplane."""


class DimMismatch(GeometryError):
    """Objects from projective spaces of different dimensions were mixed."""


class TooFewHyperplanes(GeometryError):
    """An arrangement has fewer hyperplanes than the ambient dimension."""


class DuplicatePoint(GeometryError):
    """A point set contained the same point twice (multiplicity must be
    requested through the order parameter, never through repetition)."""


class DuplicateHyperplane(GeometryError):
    """An arrangement contained the same hyperplane twice."""


class EmptyPointSet(GeometryError):
    """An operation that needs at least one point received none."""


def _normalize(coords: Sequence) -> tuple[Fraction, ...]:
    vals = tuple(as_scalar(c) for c in coords)
    pivot = next((v for v in vals if v != 0), None)
    if pivot is None:
        raise ValueError("homogeneous coordinates must not all be zero")
    if pivot == 1:
        return vals
    return tuple(v / pivot for v in vals)


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^n, stored as n+1 coordinates with first nonzero entry 1."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) < 2:
            raise ValueError("a projective point needs at least 2 coordinates")
        object.__setattr__(self, "coords", _normalize(self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane of P^n, stored by its covector, normalized like a point.

    A point P lies on the hyperplane iff covector . coords(P) == 0.
    """

    covector: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.covector) < 2:
            raise ValueError("a hyperplane covector needs at least 2 entries")
        object.__setattr__(self, "covector", _normalize(self.covector))

    @property
    def dim(self) -> int:
        return len(self.covector) - 1

    def __repr__(self) -> str:
        return "{" + ":".join(str(c) for c in self.covector) + "}"


@dataclass(frozen=True)
class Arrangement:
    """Finite list of pairwise distinct hyperplanes in one P^n."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise DimMismatch("hyperplane %r does not live in P^%d" % (h, self.dim))
        if len(set(self.hyperplanes)) != len(self.hyperplanes):
            raise DuplicateHyperplane("arrangement hyperplanes must be distinct")

    @classmethod
    def of(cls, hyperplanes: Iterable[Hyperplane]) -> "Arrangement":
        hs = tuple(hyperplanes)
        if not hs:
            raise ValueError("cannot infer dimension of an empty arrangement")
        return cls(hs[0].dim, hs)

    def __len__(self) -> int:
        return len(self.hyperplanes)


@dataclass(frozen=True)
class PointSet:
    """Finite configuration of pairwise distinct points in one P^n."""

    dim: int
    points: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        for p in self.points:
            if p.dim != self.dim:
                raise DimMismatch("point %r does not live in P^%d" % (p, self.dim))
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoint("points must be pairwise distinct")

    @classmethod
    def of(cls, points: Iterable[ProjPoint]) -> "PointSet":
        pts = tuple(points)
        if not pts:
            raise EmptyPointSet("cannot infer dimension of an empty point set")
        return cls(pts[0].dim, pts)

    def __len__(self) -> int:
        return len(self.points)


def hyperplane_through(points: Sequence[ProjPoint]) -> Hyperplane:
    """The unique hyperplane through n given points of P^n.

    Raises DegenerateSpan when the points fail to span a hyperplane.
    """
    points = tuple(points)
    if not points:
        raise EmptyPointSet("need points to span a hyperplane")
    n = points[0].dim
    if any(p.dim != n for p in points):
        raise DimMismatch("points live in different projective spaces")
    if len(points) != n:
        raise ValueError("P^%d needs exactly %d points to span a hyperplane" % (n, n))
    m = Matrix.from_rows([p.coords for p in points])
    ker = kernel_basis(m)
    if len(ker) != 1:
        raise DegenerateSpan("the %d points only span rank %d" % (n, n + 1 - len(ker)))
    return Hyperplane(ker[0])


def incident(point: ProjPoint, hyperplane: Hyperplane) -> bool:
    """Exact dual pairing test."""
    if point.dim != hyperplane.dim:
        raise DimMismatch("point in P^%d vs hyperplane in P^%d"
                          % (point.dim, hyperplane.dim))
    return sum(c * x for c, x in zip(hyperplane.covector, point.coords)) == 0


def general_position(arrangement: Arrangement) -> bool:
    """True iff no point of P^n lies on more than n of the hyperplanes.

    Equivalently: every n-subset of covectors has rank n (so it meets in
    exactly one point) and every (n+1)-subset has rank n+1.  Subsets are
    enumerated exhaustively; no randomized shortcut.
    """
    n = arrangement.dim
    hs = arrangement.hyperplanes
    if len(hs) < n:
        raise TooFewHyperplanes("need at least %d hyperplanes in P^%d" % (n, n))
    covs = [h.covector for h in hs]
    for sub in combinations(covs, n):
        if rank(Matrix.from_rows(sub)) != n:
            return False
    for sub in combinations(covs, n + 1):
        if rank(Matrix.from_rows(sub)) != n + 1:
            return False
    return True


def containing_hyperplane(z: PointSet) -> Optional[Hyperplane]:
    """Some hyperplane containing all of Z, or None if Z spans P^n.

    A non-None result is equivalent to the ideal of Z containing a linear
    form.  The returned covector is the first canonical kernel vector of
    the coordinate matrix.
    """
    if not z.points:
        raise EmptyPointSet("containing_hyperplane needs a nonempty point set")
    m = Matrix.from_rows([p.coords for p in z.points])
    ker = kernel_basis(m)
    if not ker:
        return None
    return Hyperplane(ker[0])
