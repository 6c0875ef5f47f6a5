import pytest

from relscott import solve_tf


@pytest.fixture(scope="session")
def tf_solution():
    """One shared neutral-atom solve at the default tolerance."""
    return solve_tf(1e-8)
