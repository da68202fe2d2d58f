import pytest

from qtspecials.scalars import Rational
from qtspecials.wcore import AtPoint, QtPoint


@pytest.fixture
def mode():
    """A generic non-degenerate evaluation point."""
    return AtPoint(QtPoint(Rational(2, 7), Rational(3, 5)))


@pytest.fixture
def unit_mode():
    """A point with 0 < q, t < 1 (used by convergent sums and densities)."""
    return AtPoint(QtPoint(Rational(1, 2), Rational(1, 3), n=3, max_part=25))
