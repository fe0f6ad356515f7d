"""Reproduction of published numbers and end-to-end agreement with the oracles."""

from dataclasses import replace
from itertools import product

import pytest

from src.algocost import cost_distribution, expected_cost, horspool_spec, sunday_spec
from src.core import Distribution, Maximum, Paa, dice_paa, value_distribution
from src.core.waiting_time import waiting_paa
from src.daa import (
    PROTEIN_ALPHABET,
    PatternStringsCfg,
    apply_scheme,
    daa_value,
    expand_prosite,
    minimize,
    nfa_from_generalized,
    subset_construction,
)
from src.flowlen import Dispensation, read_length_distribution, read_length_for_text
from src.massstat import cleavage_daa, load_mass_table, trypsin
from src.oracle import (
    OracleReport,
    compare,
    enumerate_exact,
    extract_clumps,
    occurrence_ends,
    run_matcher,
    sample_text,
)
from src.patstats import (
    clump_size_distribution,
    counting_paa,
    occurrence_distribution,
    pattern_waiting_time,
)
from src.patstats.clumps import since_match_paa
from src.seedstat import MultipleSeed, homology_model, seed_hit_distribution
from src.textmodel import iid_model, periodic_model, uniform_model
from tests.corpus import BINARY_PATTERNS, binary_models, coin_paa

PH_SEED = "111*1**1*1**11*111"
ZINC_FINGER = "C-x-H-R-[GAR]-x(7,8)-[GEKVI]-[NERAQ]-x(4,5)-C-x-[FY]-H"

# (seed, p, [(P(k hits), half a unit in the last printed digit) for k = 0..3])
SEED_TABLE = [
    ("11111111111", 0.95, [(4.1285e-4, 5e-9), (5.4005e-4, 5e-9), (8.4467e-4, 5e-9), (0.0012, 5e-5)]),
    (PH_SEED, 0.95, [(6.7331e-6, 5e-11), (4.4978e-5, 5e-10), (1.6120e-4, 5e-9), (4.1669e-4, 5e-9)]),
    ("11111111111", 0.3, [(0.9999325, 5e-8), (4.7615e-5, 5e-10), (1.4025e-5, 5e-10), (4.1295e-6, 5e-11)]),
    (PH_SEED, 0.3, [(0.9999170, 5e-8), (8.2780e-5, 5e-10), (2.2438e-7, 5e-12), (8.9947e-9, 5e-14)]),
]


@pytest.mark.parametrize("seed, p, expected", SEED_TABLE)
def test_seed_table(seed, p, expected):
    distribution = seed_hit_distribution(
        MultipleSeed.parse(seed), homology_model("ungapped", [p]), 64, 3
    )
    for k, (value, tolerance) in enumerate(expected):
        assert distribution[k] == pytest.approx(value, abs=tolerance)


@pytest.mark.parametrize("order, length", [("TACG", 6), ("GTCA", 10)])
def test_flow_table(order, length):
    template = "GTCGTATCCC"
    dispensation = Dispensation(order, 12)
    assert read_length_for_text(template, dispensation) == length
    distribution = read_length_distribution(periodic_model(template, "ACGT"), dispensation, 30)
    assert distribution[length] == pytest.approx(1.0, abs=1e-12)


def test_zinc_finger_automaton_size():
    patterns = expand_prosite(ZINC_FINGER, PROTEIN_ALPHABET)
    subsets = subset_construction(nfa_from_generalized(patterns, PROTEIN_ALPHABET))
    counting = minimize(subsets)
    marking = minimize(apply_scheme(subsets, "match_position"))
    assert counting.num_states == 462
    assert marking.num_states <= counting.num_states <= subsets.num_states


def test_characteristic_fragment_mass():
    daa = cleavage_daa(trypsin(), load_mass_table(), 10_000)
    assert daa_value(daa, "DVCK") == 4452


def naive_count(patterns: list[str], scheme: str):
    if scheme == "overlapping":
        return lambda text: sum(len(occurrence_ends([p], text)) for p in patterns)
    if scheme == "match_position":
        return lambda text: len(occurrence_ends(patterns, text))

    def nonoverlapping(text: str) -> int:
        count, free = 0, 0
        for end in range(len(text)):
            starts = [end - len(p) + 1 for p in patterns if text[: end + 1].endswith(p)]
            if any(start >= free for start in starts):
                count += 1
                free = end + 1
        return count

    return nonoverlapping


ORACLE_CORPUS = list(
    product(
        ["uniform", "biased", "markov1", "markov2"],
        range(len(BINARY_PATTERNS)),
        ["overlapping", "match_position", "nonoverlapping"],
    )
)


@pytest.mark.parametrize("model_name, pattern_index, scheme", ORACLE_CORPUS)
def test_occurrences_match_enumeration(model_name, pattern_index, scheme):
    model = binary_models()[model_name]
    patterns = BINARY_PATTERNS[pattern_index]
    n = 10
    exact = enumerate_exact(naive_count(patterns, scheme), model, n)
    computed = occurrence_distribution(
        PatternStringsCfg("strings", patterns), model, n, 2 * n + 1, scheme
    )
    assert compare(exact, computed).passes(tolerance=1e-12)


@pytest.mark.parametrize("n", [1, 7, 64])
@pytest.mark.parametrize("model_name, pattern_index", list(product(["biased", "markov2"], range(6))))
def test_doubling_agrees_with_basic(model_name, pattern_index, n):
    model = binary_models()[model_name]
    paa = counting_paa(PatternStringsCfg("strings", BINARY_PATTERNS[pattern_index]), model, 12)
    assert paa.num_states * len(paa.value_domain) <= 10**4
    basic = value_distribution(paa, n, "basic")
    doubling = value_distribution(paa, n, "doubling")
    assert basic.max_abs_difference(doubling) <= 1e-10


def full_kernel_paas() -> dict[str, Paa]:
    coin = coin_paa(0.3, 6)
    return {
        "dice": dice_paa(),
        "maximum": replace(coin, operations=(Maximum(),) * coin.num_states),
        "waiting": waiting_paa(coin, frozenset({3})),
        "waiting_dice": waiting_paa(dice_paa(), frozenset({20})),
        "since_match": since_match_paa(
            PatternStringsCfg("strings", ["101", "111"]), binary_models()["markov2"], 3
        ),
    }


@pytest.mark.parametrize("n", [1, 7, 64])
@pytest.mark.parametrize("name", list(full_kernel_paas()))
def test_doubling_agrees_with_basic_for_general_operations(name, n):
    paa = full_kernel_paas()[name]
    assert not paa.is_truncated_addition()
    basic = value_distribution(paa, n, "basic")
    doubling = value_distribution(paa, n, "doubling")
    assert basic.max_abs_difference(doubling) <= 1e-10


@pytest.mark.parametrize("pattern, lengths", [("aaaaa", [5, 8, 10]), ("aba", [3, 7, 10])])
@pytest.mark.parametrize("model", [uniform_model("ab"), iid_model({"a": 0.3, "b": 0.7})])
def test_horspool_matches_direct_execution(pattern, lengths, model):
    for n in lengths:
        exact = enumerate_exact(lambda s: run_matcher("horspool", pattern, s).cost, model, n)
        computed = cost_distribution(horspool_spec(pattern), model, n)
        assert compare(exact, computed).passes(tolerance=1e-12)


@pytest.mark.slow
def test_sunday_costs_more_than_horspool():
    model = uniform_model("ACGT")
    horspool = expected_cost(cost_distribution(horspool_spec("ACAGC"), model, 20))
    sunday = expected_cost(cost_distribution(sunday_spec("ACAGC"), model, 20))
    assert sunday > horspool


@pytest.mark.parametrize("model_name, pattern_index", list(product(binary_models(), range(6))))
@pytest.mark.parametrize("mode", ["first", "subsequent"])
def test_waiting_time_closure(model_name, pattern_index, mode):
    model = binary_models()[model_name]
    pattern = PatternStringsCfg("strings", BINARY_PATTERNS[pattern_index])
    distribution = pattern_waiting_time(pattern, model, 60, mode)
    assert distribution.total() + distribution.tail == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("mode", ["first", "subsequent"])
def test_geometric_waiting_time(mode):
    model = iid_model({"0": 0.3, "1": 0.7})
    distribution = pattern_waiting_time(PatternStringsCfg("strings", ["1"]), model, 40, mode)
    for t in range(1, 41):
        assert distribution[t] == pytest.approx(0.3 ** (t - 1) * 0.7, abs=1e-12)
    assert distribution.tail == pytest.approx(0.3**40, abs=1e-12)


def test_clump_example():
    assert extract_clumps(["ACA"], "GACACATTACAAA") == [2, 1]


@pytest.mark.slow
def test_sampled_clumps_of_11():
    model = uniform_model("01")
    psi = clump_size_distribution(PatternStringsCfg("strings", ["11"]), model, 20).psi
    # Sizes beyond 8 are too rare for a per-bucket check.
    lumped = psi.marginal(lambda size: min(size, 8))
    sizes = extract_clumps(["11"], sample_text(model, 8_200_000, 2024))[:-1]
    assert len(sizes) >= 10**6
    counts: dict[int, int] = {}
    for size in sizes:
        counts[min(size, 8)] = counts.get(min(size, 8), 0) + 1
    empirical = Distribution.from_pairs(
        ((size, count / len(sizes)) for size, count in counts.items()), tail=0.0
    )
    report = compare(OracleReport(empirical, samples=len(sizes), seed=2024), lumped)
    assert report.passes()
