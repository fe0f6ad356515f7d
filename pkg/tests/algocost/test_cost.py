from itertools import product

import pytest

from src.algocost import (
    cost_distribution,
    expected_cost,
    horspool_spec,
    sunday_spec,
    window_count_spec,
)
from src.core import Distribution
from src.misc.errors import ResourceGuardError, ValidationError
from src.textmodel import first_order_model, sequence_probability, uniform_model


def naive_horspool(pattern: str, text: str) -> int:
    m = len(pattern)
    right = {character: i for i, character in enumerate(pattern[:-1])}
    cost = 0
    position = 0
    while position + m <= len(text):
        i = m - 1
        cost += 1
        while i > 0 and text[position + i] == pattern[i]:
            i -= 1
            cost += 1
        position += (m - 1) - right.get(text[position + m - 1], -1)
    return cost


def exhaustive(pattern: str, model, n: int) -> dict[int, float]:
    result: dict[int, float] = {}
    for letters in product(model.alphabet, repeat=n):
        text = "".join(letters)
        cost = naive_horspool(pattern, text)
        result[cost] = result.get(cost, 0.0) + sequence_probability(model, text)
    return result


def test_horspool_shifts():
    spec = horspool_spec("ACAGC")
    assert spec.window == 5
    assert spec.shift("TTTTC") == 3
    assert spec.shift("TTTTA") == 2
    assert spec.shift("TTTTG") == 1
    assert spec.shift("TTTTT") == 5
    assert spec.cost("ACAGC") == 5
    assert spec.cost("ACAGA") == 1
    assert spec.cost("TCAGC") == 5
    assert spec.cost("ACTGC") == 3


def test_sunday_shifts():
    spec = sunday_spec("ACAGC")
    assert spec.window == 6
    assert spec.shift("ACAGCT") == 6
    assert spec.shift("ACAGCC") == 1
    assert spec.shift("ACAGCA") == 3
    assert spec.cost("ACAGCT") == 6
    assert spec.cost("TTTTTA") == 2


def test_empty_pattern_is_rejected():
    with pytest.raises(ValidationError):
        horspool_spec("")
    with pytest.raises(ValidationError):
        sunday_spec("")


def test_single_window(uniform_dna):
    distribution = cost_distribution(horspool_spec("AAAAA"), uniform_dna, 5)
    expected = {1: 3 / 4, 2: 3 / 16, 3: 3 / 64, 4: 3 / 256, 5: 1 / 256}
    assert distribution.support.keys() == expected.keys()
    for cost, p in expected.items():
        assert distribution[cost] == pytest.approx(p, abs=1e-12)


@pytest.mark.parametrize("pattern", ["0", "01", "11", "010", "110"])
@pytest.mark.parametrize("n", [3, 6, 9])
def test_horspool_matches_exhaustive_run(pattern, n, biased_binary):
    distribution = cost_distribution(horspool_spec(pattern), biased_binary, n)
    expected = exhaustive(pattern, biased_binary, n)
    assert distribution.total() == pytest.approx(1.0, abs=1e-9)
    for cost, p in expected.items():
        assert distribution[cost] == pytest.approx(p, abs=1e-12)
    assert set(distribution.support) == set(expected)


def test_horspool_matches_exhaustive_run_under_markov_text():
    model = first_order_model("01", [[0.9, 0.1], [0.4, 0.6]], [0.5, 0.5])
    distribution = cost_distribution(horspool_spec("101"), model, 8)
    for cost, p in exhaustive("101", model, 8).items():
        assert distribution[cost] == pytest.approx(p, abs=1e-12)


def test_window_count_of_single_character_pattern(uniform_dna):
    spec = window_count_spec(horspool_spec("A"))
    assert cost_distribution(spec, uniform_dna, 7)[7] == pytest.approx(1.0)


def test_cost_noise_adds_to_every_window(uniform_dna):
    noise = Distribution({0: 0.5, 1: 0.5})
    distribution = cost_distribution(horspool_spec("A"), uniform_dna, 6, cost_noise=noise)
    assert expected_cost(distribution) == pytest.approx(6 + 3)
    assert distribution[12] == pytest.approx(0.5**6)


def test_text_shorter_than_window(uniform_dna):
    with pytest.raises(ValidationError):
        cost_distribution(sunday_spec("ACG"), uniform_dna, 3)


def test_window_guard():
    model = uniform_model("ACDEFGHIKLMNPQRSTVWY")
    with pytest.raises(ResourceGuardError):
        cost_distribution(horspool_spec("ACDEF"), model, 10)


@pytest.mark.slow
def test_sunday_reads_more_than_horspool(uniform_dna):
    horspool = cost_distribution(horspool_spec("ACAGC"), uniform_dna, 20)
    sunday = cost_distribution(sunday_spec("ACAGC"), uniform_dna, 20)
    assert horspool.total() == pytest.approx(1.0, abs=1e-9)
    assert sunday.total() == pytest.approx(1.0, abs=1e-9)
    assert expected_cost(sunday) > expected_cost(horspool)
