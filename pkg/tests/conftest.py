import pytest

from quantum.states import BellKind, bell_state, projector, random_density

DIMS = (2, 3, 4, 8)
PAIRS_PER_DIM = 250
Q_VALUES = (0.1, 0.3, 0.5, 0.7, 0.9)


def seeded_pairs(dim: int, count: int, offset: int = 0):
    """Deterministic (rho, sigma) pairs of Hilbert-Schmidt random states."""
    base = 100_000 * dim + offset
    return [
        (random_density(dim, base + 2 * i), random_density(dim, base + 2 * i + 1))
        for i in range(count)
    ]


@pytest.fixture(scope="session")
def random_pairs():
    """PAIRS_PER_DIM pairs for every dimension in DIMS."""
    return {dim: seeded_pairs(dim, PAIRS_PER_DIM) for dim in DIMS}


@pytest.fixture(scope="session")
def singlet():
    return projector(bell_state(BellKind.PSI_MINUS))
