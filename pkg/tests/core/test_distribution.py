import pytest

from src.core import Distribution
from src.misc.errors import ValidationError


def test_from_pairs_accumulates_and_sorts():
    distribution = Distribution.from_pairs([(2, 0.25), (0, 0.25), (2, 0.25), (1, 0.0)])
    assert list(distribution.support) == [0, 2]
    assert distribution[2] == 0.5
    assert distribution.tail == pytest.approx(0.25)


def test_mass_must_add_up():
    with pytest.raises(ValidationError):
        Distribution({0: 0.5})
    with pytest.raises(ValidationError):
        Distribution({0: 0.5, 1: -0.5}, tail=1.0)


def test_summaries():
    distribution = Distribution({1: 0.5, 3: 0.25}, tail=0.25)
    assert distribution.mean() == pytest.approx(1.25)
    assert distribution.cdf(1) == 0.5
    assert distribution.at_least(3) == 0.5
    assert distribution.shifted(-1).support == {0: 0.5, 2: 0.25}


def test_marginal_over_pairs():
    joint = Distribution({("a", 1): 0.5, ("b", 1): 0.25, ("b", 2): 0.25})
    assert joint.marginal(lambda key: key[1]).support == {1: 0.75, 2: 0.25}


def test_max_abs_difference_includes_tail():
    left = Distribution({0: 0.5}, tail=0.5)
    right = Distribution({0: 0.5, 1: 0.5})
    assert left.max_abs_difference(right) == 0.5
