"""Decision procedures on point configurations.

The central dichotomy: when the n-th symbolic power's initial degree grows
by exactly one per step (alpha(I^(n)) = alpha(I) + n - 1), the configuration
is either contained in a single hyperplane or is a star configuration.
This module computes alpha tables, checks that growth hypothesis, detects
stars by inverting the star constructor, classifies configurations, and
derives Waldschmidt-constant bounds from finite alpha data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Union

from .exactalg import RATIONAL
from .configurations import StarData, star
from .geometry import (
    Arrangement,
    DegenerateSpan,
    DimMismatch,
    EmptyPointSet,
    Hyperplane,
    PointSet,
    general_position,
    hyperplane_through,
    incident,
    containing_hyperplane,
)
from .interpolation import alpha

COPLANAR = "Coplanar"
STAR = "Star"
NEITHER = "Neither"

#: detect_star enumerates spans of n-subsets, so it is capped hard.
DETECT_STAR_MAX_POINTS = 120


class TooManyPoints(Exception):
    """detect_star received more points than its enumeration cap allows."""


@dataclass(frozen=True)
class Classification:
    """Outcome of the coplanar / star / neither trichotomy with witness."""

    tag: str
    witness: Union[Hyperplane, Arrangement, None]

    def __post_init__(self) -> None:
        expected = {COPLANAR: Hyperplane, STAR: Arrangement, NEITHER: type(None)}
        if self.tag not in expected:
            raise ValueError("unknown classification tag %r" % (self.tag,))
        if not isinstance(self.witness, expected[self.tag]):
            raise ValueError("witness type does not match tag %s" % self.tag)


@dataclass(frozen=True)
class WaldschmidtBounds:
    """Finite-power bounds on the asymptotic initial degree.

    ``upper`` is a true upper bound (the asymptotic value is an infimum of
    alpha(I^(k))/k).  ``lower`` is the (alpha + n - 1)/n bound; it is only
    certified here when the configuration classifies as Star or Coplanar,
    otherwise the unverified-assumptions flag stays set and consumers must
    not treat the bound as proven.
    """

    lower: Fraction
    upper: Fraction
    demailly_assumptions_unverified: bool


@dataclass(frozen=True)
class AlphaReport:
    """Alpha table with the derived hypothesis flag, classification and
    Waldschmidt bounds."""

    n: int
    alphas: dict[int, int]
    hypothesis_holds: bool
    classification: Classification
    waldschmidt: WaldschmidtBounds

    def __post_init__(self) -> None:
        ks = sorted(self.alphas)
        for a, b in zip(ks, ks[1:]):
            if self.alphas[b] - self.alphas[a] < b - a:
                raise ValueError("alpha table gaps must be at least 1 per step")


def alpha_table(z: PointSet, max_power: Optional[int] = None,
                field: int | None = RATIONAL) -> AlphaReport:
    """Alpha values for k = 1..K (K defaults to the ambient dimension),
    with classification, hypothesis flag and Waldschmidt bounds filled in."""
    if not z.points:
        raise EmptyPointSet("alpha_table needs a nonempty point set")
    n = z.dim
    k_max = n if max_power is None else max_power
    if k_max < 1:
        raise ValueError("max power must be at least 1")
    alphas = {k: alpha(z, k, field) for k in range(1, k_max + 1)}
    a_n = alphas[n] if n <= k_max else alpha(z, n, field)
    hypothesis = a_n == alphas[1] + n - 1
    cls = classify(z)
    bounds = _bounds_from_table(n, alphas, cls)
    return AlphaReport(n, alphas, hypothesis, cls, bounds)


def hypothesis_check(z: PointSet) -> bool:
    """True iff alpha(I^(n)) == alpha(I) + n - 1 for n the ambient dimension."""
    n = z.dim
    return alpha(z, n) == alpha(z, 1) + n - 1


def detect_star(z: PointSet) -> Optional[StarData]:
    """Recover the arrangement whose star configuration is exactly Z, if any.

    Requires |Z| = C(d, n) for some d; candidate hyperplanes are spans of
    n-subsets of Z, of which exactly d must contain C(d-1, n-1) points
    each, with every point on exactly n of them; the candidates must pass
    general position and their star must reproduce Z.  Arrangements of
    d = n hyperplanes (a single point) are not recoverable: the
    hyperplanes are not determined by the point, so None is returned.
    """
    n = z.dim
    size = len(z.points)
    if size > DETECT_STAR_MAX_POINTS:
        raise TooManyPoints(
            "detect_star enumerates C(|Z|, n) spans; capped at %d points"
            % DETECT_STAR_MAX_POINTS)
    d = _binomial_preimage(size, n)
    if d is None:
        return None
    threshold = comb(d - 1, n - 1)
    candidates = set()
    for subset in combinations(z.points, n):
        try:
            candidates.add(hyperplane_through(subset))
        except DegenerateSpan:
            continue
    rich = []
    for h in candidates:
        if sum(1 for q in z.points if incident(q, h)) >= threshold:
            rich.append(h)
    if len(rich) != d:
        return None
    for h in rich:
        if sum(1 for q in z.points if incident(q, h)) != threshold:
            return None
    for q in z.points:
        if sum(1 for h in rich if incident(q, h)) != n:
            return None
    arrangement = Arrangement(n, tuple(sorted(rich, key=lambda h: h.covector)))
    if not general_position(arrangement):
        return None
    data = star(arrangement)
    if set(data.points.points) != set(z.points):
        return None
    return data


def _binomial_preimage(size: int, n: int) -> Optional[int]:
    """The d >= n with C(d, n) == size, if one exists."""
    d = n
    while comb(d, n) < size:
        d += 1
    return d if comb(d, n) == size else None


def classify(z: PointSet) -> Classification:
    """Coplanar before star: a hyperplane containing Z wins, then star
    detection, then Neither."""
    h = containing_hyperplane(z)
    if h is not None:
        return Classification(COPLANAR, h)
    data = detect_star(z)
    if data is not None:
        return Classification(STAR, data.arrangement)
    return Classification(NEITHER, None)


def waldschmidt_bounds(z: PointSet, max_power: int) -> WaldschmidtBounds:
    """Bounds on the asymptotic initial degree from powers up to max_power."""
    if max_power < 1:
        raise ValueError("max power must be at least 1")
    n = z.dim
    alphas = {k: alpha(z, k) for k in range(1, max_power + 1)}
    return _bounds_from_table(n, alphas, classify(z))


def _bounds_from_table(n: int, alphas: dict[int, int],
                       cls: Classification) -> WaldschmidtBounds:
    lower = Fraction(alphas[1] + n - 1, n)
    upper = min(Fraction(a, k) for k, a in alphas.items())
    return WaldschmidtBounds(lower, upper, cls.tag == NEITHER)


def corollary_check(z: PointSet) -> Optional[bool]:
    """For Z in P^3 with alpha(I^(4)) == alpha(I) + 3: is Z coplanar?

    Returns None when the degree condition fails.  Some(False) would
    contradict the classification theory, so it should never occur.
    """
    if z.dim != 3:
        raise DimMismatch("corollary_check is a P^3 statement")
    if alpha(z, 4) != alpha(z, 1) + 3:
        return None
    return containing_hyperplane(z) is not None
