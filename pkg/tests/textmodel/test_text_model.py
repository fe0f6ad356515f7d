from itertools import product

import pytest
import torch

from src.misc.errors import ValidationError
from src.textmodel import (
    Hmm,
    character_marginals,
    forward_probability,
    from_hmm,
    iid_model,
    markov_model,
    periodic_model,
    sequence_probability,
    string_transition,
    to_hmm,
    uniform_model,
)


def binary_markov():
    return markov_model(
        1,
        {
            "": {"0": 0.4, "1": 0.6},
            "0": {"0": 0.8, "1": 0.2},
            "1": {"0": 0.1, "1": 0.9},
        },
    )


def two_state_hmm() -> Hmm:
    return Hmm(
        states=("begin", "fair", "loaded"),
        start=0,
        alphabet=("a", "b", "c"),
        transitions=torch.tensor(
            [[0.0, 0.5, 0.5], [0.0, 0.9, 0.1], [0.0, 0.25, 0.75]], dtype=torch.float64
        ),
        emissions=torch.tensor(
            [[1 / 3, 1 / 3, 1 / 3], [1 / 3, 1 / 3, 1 / 3], [0.7, 0.2, 0.1]], dtype=torch.float64
        ),
    )


def cpg_hmm() -> Hmm:
    return Hmm(
        states=("start", "island", "ocean"),
        start=0,
        alphabet=tuple("ACGT"),
        transitions=torch.tensor(
            [[0.0, 0.2, 0.8], [0.0, 0.95, 0.05], [0.0, 0.02, 0.98]], dtype=torch.float64
        ),
        emissions=torch.tensor(
            [[0.25] * 4, [0.15, 0.35, 0.35, 0.15], [0.3, 0.2, 0.2, 0.3]], dtype=torch.float64
        ),
    )


MODELS = {
    "uniform": lambda: uniform_model("ACGT"),
    "biased": lambda: iid_model({"0": 0.3, "1": 0.7}),
    "markov1": binary_markov,
    "markov2": lambda: markov_model(
        2,
        {
            "": {"a": 0.5, "b": 0.5},
            "a": {"a": 0.3, "b": 0.7},
            "b": {"a": 0.6, "b": 0.4},
            "aa": {"a": 0.1, "b": 0.9},
            "ab": {"a": 0.5, "b": 0.5},
            "ba": {"a": 0.8, "b": 0.2},
            "bb": {"a": 0.35, "b": 0.65},
        },
    ),
    "hmm": lambda: from_hmm(two_state_hmm()),
    "periodic": lambda: periodic_model("GTCGTATCCC", "ACGT"),
}


def test_iid_products():
    assert sequence_probability(uniform_model("ACGT"), "ACG") == pytest.approx(1 / 64)
    assert sequence_probability(iid_model({"0": 0.3, "1": 0.7}), "11") == pytest.approx(0.49)
    assert sequence_probability(uniform_model("ACGT"), "") == 1.0


@pytest.mark.parametrize("name", MODELS)
@pytest.mark.parametrize("n", [1, 3, 6])
def test_string_probabilities_sum_to_one(name, n):
    model = MODELS[name]()
    total = sum(sequence_probability(model, "".join(s)) for s in product(model.alphabet, repeat=n))
    assert total == pytest.approx(1.0, abs=1e-9)


def test_first_order_hand_product():
    model = binary_markov()
    assert sequence_probability(model, "011") == pytest.approx(0.4 * 0.2 * 0.9, abs=1e-15)
    assert model.num_contexts == 3
    assert model.has_deterministic_successors()


def test_order_zero_is_iid():
    model = markov_model(0, {"": {"x": 0.25, "y": 0.75}})
    assert model.num_contexts == 1
    assert sequence_probability(model, "yxy") == pytest.approx(0.75 * 0.25 * 0.75)


def test_missing_history_row():
    with pytest.raises(ValidationError, match="no conditional row"):
        markov_model(1, {"": {"0": 0.5, "1": 0.5}, "0": {"0": 1.0}})


@pytest.mark.parametrize(
    "probs",
    [{"a": 0.5, "b": 0.6}, {"a": 1.2, "b": -0.2}],
)
def test_invalid_character_distribution(probs):
    with pytest.raises(ValidationError):
        iid_model(probs)


def test_unknown_character():
    with pytest.raises(ValidationError):
        sequence_probability(uniform_model("01"), "012")


@pytest.mark.parametrize("hmm", [two_state_hmm(), cpg_hmm()])
def test_from_hmm_matches_forward(hmm):
    model = from_hmm(hmm)
    for n in range(6):
        for s in product(hmm.alphabet, repeat=n):
            text = "".join(s)
            assert sequence_probability(model, text) == pytest.approx(
                forward_probability(hmm, text), abs=1e-14
            )


def test_one_state_hmm_is_iid():
    hmm = Hmm(
        ("only",),
        0,
        ("0", "1"),
        torch.ones((1, 1), dtype=torch.float64),
        torch.tensor([[0.2, 0.8]], dtype=torch.float64),
    )
    model = from_hmm(hmm)
    assert model.num_contexts == 1
    assert sequence_probability(model, "101") == pytest.approx(0.8 * 0.2 * 0.8)


@pytest.mark.parametrize("name", ["uniform", "markov1", "markov2", "hmm"])
def test_hmm_round_trip(name):
    model = MODELS[name]()
    back = from_hmm(to_hmm(model))
    for n in range(5):
        for s in product(model.alphabet, repeat=n):
            text = "".join(s)
            assert abs(sequence_probability(back, text) - sequence_probability(model, text)) < 1e-12


def test_to_hmm_sizes():
    assert to_hmm(uniform_model("ACGT")).num_states == 1
    assert to_hmm(binary_markov()).num_states == 9


def test_string_transition():
    model = periodic_model("ab")
    assert string_transition(model, 0, "aba").tolist() == [0.0, 1.0]
    assert string_transition(model, 0, "b").tolist() == [0.0, 0.0]


def test_character_marginals():
    marginals = character_marginals(binary_markov(), 3)
    assert marginals[0].tolist() == pytest.approx([0.4, 0.6])
    assert marginals[1].tolist() == pytest.approx([0.4 * 0.8 + 0.6 * 0.1, 0.4 * 0.2 + 0.6 * 0.9])
    assert marginals.sum(dim=1).tolist() == pytest.approx([1.0] * 3)


def test_periodic_model_repeats_text():
    model = periodic_model("GTCA", "ACGT")
    assert sequence_probability(model, "GTCAGT") == 1.0
    assert sequence_probability(model, "GTCC") == 0.0
