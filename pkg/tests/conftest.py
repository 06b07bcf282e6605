import pytest

from fatpoints.geometry import Arrangement, Hyperplane, PointSet, ProjPoint
from fatpoints.configurations import (
    concurrent_lines_example,
    coplanar_example,
    five_general_points,
    kummer_fixture,
    random_points,
)
from fatpoints.cli import star_fixture


def coordinate_sum_arrangement():
    """The 5-plane fixture: 4 coordinate planes plus the sum-zero plane."""
    covs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]
    return Arrangement(3, tuple(Hyperplane(c) for c in covs))


@pytest.fixture(scope="session")
def star5():
    from fatpoints.configurations import star
    return star(coordinate_sum_arrangement())


@pytest.fixture(scope="session")
def star_fixtures():
    """Seeded general-position stars, (n, d) -> StarData, shared suite-wide."""
    return {(n, d): star_fixture(n, d)
            for n in (2, 3) for d in range(n + 1, 7)}


@pytest.fixture(scope="session")
def five_points():
    return five_general_points()


@pytest.fixture(scope="session")
def concurrent():
    return concurrent_lines_example()


@pytest.fixture(scope="session")
def kummer():
    return kummer_fixture()


@pytest.fixture(scope="session")
def coplanar5():
    return coplanar_example()


JUMP_SEED_BASE = 41_000
THEOREM_SEED_BASE = 42_000
COROLLARY_SEED_BASE = 43_000


@pytest.fixture(scope="session")
def jump_configs():
    """100 seeded configurations across P^2 and P^3, sizes 1..12."""
    configs = []
    for i in range(100):
        n = 2 if i % 2 == 0 else 3
        count = 1 + (7 * i) % 12
        configs.append(random_points(n, count, seed=JUMP_SEED_BASE + i))
    return configs


@pytest.fixture(scope="session")
def p3_configs():
    """100 seeded configurations in P^3 for the classification property."""
    return [random_points(3, 1 + (5 * i) % 12, seed=THEOREM_SEED_BASE + i)
            for i in range(100)]


@pytest.fixture(scope="session")
def corollary_configs():
    """25 seeded small P^3 configurations for the 4th-power check."""
    return [random_points(3, 1 + i % 8, seed=COROLLARY_SEED_BASE + i)
            for i in range(25)]
