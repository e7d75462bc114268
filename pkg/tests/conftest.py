import pytest

from nashtoric import AffineSemigroup, Cone


@pytest.fixture
def threefold():
    """Non-normal threefold whose char-2 ideal loses an exponent."""
    return AffineSemigroup.from_cone(
        Cone.from_rays(((1, 0, 0), (0, 1, 0), (1, 1, 2)), 3)
    )


@pytest.fixture
def cusp():
    """Numerical semigroup <2,3>, the canonical trivial-blowup example."""
    return AffineSemigroup(1, [(2,), (3,)])
