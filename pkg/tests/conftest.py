import pytest

from oneplanar.constructions import (
    FIXTURE_NAMES,
    fixture,
    glued_family,
    random_insertion_variant,
    stacked_triangulation,
)

STACKED_DEPTHS = range(0, 51)
VARIANT_SEEDS = range(100)


@pytest.fixture(scope="session")
def named_fixtures():
    return {name: fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def corpus(named_fixtures):
    """All fixtures, stacked triangulations depth 0..50, and 100 seeded variants."""
    drawings = dict(named_fixtures)
    for depth in STACKED_DEPTHS:
        drawings[f"stacked({depth})"] = stacked_triangulation(depth)
    for seed in VARIANT_SEEDS:
        drawings[f"variant({seed})"] = random_insertion_variant(seed)
    return drawings


@pytest.fixture(scope="session")
def glued():
    return {k: glued_family(k) for k in (1, 2, 3, 4)}
