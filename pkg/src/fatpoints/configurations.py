"""Constructors for the point configurations the engine studies.

Star configurations of hyperplane arrangements, the 16-point Kummer-type
orbit with its 16_6 incidence validator, the concurrent-lines five-point
set, five general points, and seeded random configurations.

Seeded constructors run on a self-contained SplitMix64 generator, so the
same 64-bit seed reproduces the same configuration bit-for-bit on any
platform or interpreter version.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exactalg import Matrix, bareiss_rank, kernel_basis, rank
from .geometry import (
    Arrangement,
    DegenerateSpan,
    Hyperplane,
    PointSet,
    ProjPoint,
    general_position,
    hyperplane_through,
    incident,
)
from .interpolation import _int_rows, alpha


class ConfigurationError(Exception):
    """Base class for configuration construction errors."""


class NotGeneralPosition(ConfigurationError):
    """The arrangement fails the general-position test."""


class DegenerateOrbit(ConfigurationError):
    """A group orbit collapsed to fewer points than the group order."""


class WrongCardinality(ConfigurationError):
    """A validator received a point set of the wrong size."""


class RandomnessExhausted(ConfigurationError):
    """Bounded random search failed to produce the requested configuration."""


#: Default coordinate range for random points.
DEFAULT_COORD_RANGE = 10
#: Seed of the shipped five-general-points fixture.
FIVE_POINTS_SEED = 101
#: Seed of the shipped Kummer-type 16_6 fixture search.
KUMMER_SEED = 7


# ---------------------------------------------------------------------------
# Deterministic RNG
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic 64-bit generator (SplitMix64)."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = _MASK64 - (_MASK64 + 1) % n
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def _draw_point(rng: SplitMix64, n: int, coord_range: int) -> ProjPoint:
    while True:
        coords = tuple(rng.int_in(-coord_range, coord_range) for _ in range(n + 1))
        if any(coords):
            return ProjPoint(coords)


# ---------------------------------------------------------------------------
# Star configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarData:
    """A star configuration: the arrangement, its C(d, n) n-fold
    intersection points, and the point -> defining-hyperplanes map."""

    arrangement: Arrangement
    points: PointSet
    incidence: dict[ProjPoint, tuple[Hyperplane, ...]]


def star(arrangement: Arrangement) -> StarData:
    """All points where exactly n hyperplanes of the arrangement meet.

    Each point is the exact kernel of its n covectors.  General position
    guarantees the C(d, n) points are distinct and that none lies on a
    further hyperplane.
    """
    n = arrangement.dim
    if not general_position(arrangement):
        raise NotGeneralPosition("star() needs a general-position arrangement")
    incidence: dict[ProjPoint, tuple[Hyperplane, ...]] = {}
    for subset in combinations(arrangement.hyperplanes, n):
        ker = kernel_basis(Matrix.from_rows([h.covector for h in subset]))
        assert len(ker) == 1
        point = ProjPoint(ker[0])
        incidence[point] = subset
    points = PointSet(n, tuple(incidence.keys()))
    for point in points.points:
        on = sum(1 for h in arrangement.hyperplanes if incident(point, h))
        assert on == n, "general position violated after the fact"
    return StarData(arrangement, points, incidence)


def random_arrangement(n: int, d: int, seed: int, coord_range: int = 2,
                       max_attempts: int = 5000) -> Arrangement:
    """Seeded general-position arrangement of d hyperplanes in P^n."""
    if d < n:
        raise ValueError("need at least n hyperplanes in P^n")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        hyperplanes: list[Hyperplane] = []
        while len(hyperplanes) < d:
            h = Hyperplane(_draw_point(rng, n, coord_range).coords)
            if h not in hyperplanes:
                hyperplanes.append(h)
        arr = Arrangement(n, tuple(hyperplanes))
        if general_position(arr):
            return arr
    raise RandomnessExhausted("no general-position arrangement after %d attempts"
                              % max_attempts)


# ---------------------------------------------------------------------------
# Kummer-type 16_6 configuration
# ---------------------------------------------------------------------------

_KUMMER_PERMS = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
_KUMMER_SIGNS = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))


def kummer_transforms() -> list:
    """The 16 coordinate transformations generating the orbit."""
    return [(p, s) for p in _KUMMER_PERMS for s in _KUMMER_SIGNS]


def apply_kummer_transform(point: ProjPoint, transform) -> ProjPoint:
    perm_, signs = transform
    c = point.coords
    return ProjPoint(tuple(signs[i] * c[perm_[i]] for i in range(4)))


def kummer16(p: ProjPoint) -> PointSet:
    """Orbit of p under the order-16 sign/double-transposition group.

    Requires all 16 images distinct; the orbit of a generic point is the
    node set of a 16-nodal quartic and carries the 16_6 incidence
    structure, which validate_16_6 checks independently.
    """
    if p.dim != 3:
        raise ValueError("kummer16 lives in P^3")
    if any(c == 0 for c in p.coords):
        raise DegenerateOrbit("orbit seed must have all coordinates nonzero")
    orbit = {apply_kummer_transform(p, t) for t in kummer_transforms()}
    if len(orbit) != 16:
        raise DegenerateOrbit("orbit has only %d distinct points" % len(orbit))
    return PointSet(3, tuple(sorted(orbit, key=lambda q: q.coords)))


def validate_16_6(z: PointSet) -> bool:
    """True iff z carries a 16_6 incidence structure: exactly 16 planes
    contain >= 6 of the points, each containing exactly 6, and every point
    lying on exactly 6 of them.  Candidate planes are spans of 3-subsets."""
    if len(z.points) != 16:
        raise WrongCardinality("validate_16_6 needs exactly 16 points")
    if z.dim != 3:
        raise WrongCardinality("validate_16_6 lives in P^3")
    candidates = set()
    for triple in combinations(z.points, 3):
        try:
            candidates.add(hyperplane_through(triple))
        except DegenerateSpan:
            continue
    rich = {}
    for h in candidates:
        count = sum(1 for q in z.points if incident(q, h))
        if count >= 6:
            rich[h] = count
    if len(rich) != 16:
        return False
    if any(count != 6 for count in rich.values()):
        return False
    for q in z.points:
        if sum(1 for h in rich if incident(q, h)) != 6:
            return False
    return True


@lru_cache(maxsize=None)
def kummer_fixture(seed: int = KUMMER_SEED) -> PointSet:
    """The shipped 16_6 fixture: the first seeded orbit that passes
    validate_16_6 and reproduces the expected initial degrees 3 and 4."""
    rng = SplitMix64(seed)
    for _ in range(256):
        values = list(range(1, 10))
        coords = []
        for _ in range(4):
            coords.append(values.pop(rng.below(len(values))))
        try:
            orbit = kummer16(ProjPoint(tuple(coords)))
        except DegenerateOrbit:
            continue
        if not validate_16_6(orbit):
            continue
        if alpha(orbit, 1) == 3 and alpha(orbit, 2) == 4:
            return orbit
    raise RandomnessExhausted("no validated 16_6 orbit found")


# ---------------------------------------------------------------------------
# Worked example configurations
# ---------------------------------------------------------------------------

def concurrent_lines_example() -> PointSet:
    """Five points on three concurrent, non-coplanar lines through
    (1:0:0:0): two on each of the first two lines, one on the third.

    The smallest non-coplanar set whose first two initial degrees grow by
    exactly one without being a star configuration.
    """
    return PointSet(3, (
        ProjPoint((0, 1, 0, 0)),
        ProjPoint((1, 1, 0, 0)),
        ProjPoint((0, 0, 1, 0)),
        ProjPoint((1, 0, 1, 0)),
        ProjPoint((0, 0, 0, 1)),
    ))


def five_general_points(seed: int = FIVE_POINTS_SEED,
                        coord_range: int = DEFAULT_COORD_RANGE,
                        max_attempts: int = 1000) -> PointSet:
    """Five seeded random points, redrawn until every 4-subset spans P^3."""
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        points: list[ProjPoint] = []
        while len(points) < 5:
            q = _draw_point(rng, 3, coord_range)
            if q not in points:
                points.append(q)
        if all(rank(Matrix.from_rows([q.coords for q in sub])) == 4
               for sub in combinations(points, 4)):
            return PointSet(3, tuple(points))
    raise RandomnessExhausted("no general-linear-position draw after %d attempts"
                              % max_attempts)


def random_points(n: int, count: int, seed: int,
                  coord_range: int = DEFAULT_COORD_RANGE) -> PointSet:
    """Seeded, reproducible set of distinct points with integer
    coordinates in [-coord_range, coord_range]."""
    if count < 1:
        raise ValueError("need at least one point")
    rng = SplitMix64(seed)
    points: list[ProjPoint] = []
    for _ in range(200 + 100 * count):
        q = _draw_point(rng, n, coord_range)
        if q not in points:
            points.append(q)
            if len(points) == count:
                return PointSet(n, tuple(points))
    raise RandomnessExhausted("could not draw %d distinct points" % count)


def independent_subset(z: PointSet, t: int) -> PointSet:
    """Greedy subset (in input order) whose degree-t evaluation conditions
    already have the full rank of all of Z's conditions.

    A point joins the subset exactly when its evaluation row raises the
    rank, so the subset size equals the rank of the full system.
    """
    if not z.points:
        raise WrongCardinality("independent_subset needs a nonempty point set")
    rows = _int_rows(z, t, 1)
    target = bareiss_rank(rows)
    chosen: list[ProjPoint] = []
    chosen_rows: list[tuple[int, ...]] = []
    current = 0
    for point, row in zip(z.points, rows):
        if current == target:
            break
        r = bareiss_rank(chosen_rows + [row])
        if r > current:
            chosen.append(point)
            chosen_rows.append(row)
            current = r
    return PointSet(z.dim, tuple(chosen))


def coplanar_example(extra: int = 1) -> PointSet:
    """A plane-spanning configuration inside {x3 = 0} in P^3 (4+extra points)."""
    base = [
        ProjPoint((1, 0, 0, 0)),
        ProjPoint((0, 1, 0, 0)),
        ProjPoint((0, 0, 1, 0)),
        ProjPoint((1, 1, 1, 0)),
    ]
    for i in range(extra):
        base.append(ProjPoint((1, 2 + i, 3 + 2 * i, 0)))
    return PointSet(3, tuple(base))
