import json

import pytest

from src.misc.errors import ValidationError
from src.textmodel import (
    TextModelIidCfg,
    get_text_model,
    load_text_model,
    markov_model,
    sequence_probability,
    text_model_from_dict,
    text_model_to_dict,
)


def test_iid_spec():
    model = text_model_from_dict({"type": "iid", "probs": {"0": 0.5, "1": 0.5}})
    assert sequence_probability(model, "010") == pytest.approx(1 / 8)


def test_integer_probabilities_are_coerced():
    model = text_model_from_dict({"type": "iid", "probs": {"A": 1, "C": 0}})
    assert sequence_probability(model, "AA") == 1.0


def test_markov_spec():
    spec = {
        "type": "markov",
        "order": 1,
        "alphabet": "01",
        "conditionals": {
            "": {"0": 0.5, "1": 0.5},
            "0": {"0": 0.8, "1": 0.2},
            "1": {"0": 0.1, "1": 0.9},
        },
    }
    model = text_model_from_dict(spec)
    assert sequence_probability(model, "011") == pytest.approx(0.5 * 0.2 * 0.9)


def test_hmm_spec_without_start_emissions():
    spec = {
        "type": "hmm",
        "states": ["begin", "x", "y"],
        "start": "begin",
        "transitions": {
            "begin": {"x": 1.0},
            "x": {"x": 0.5, "y": 0.5},
            "y": {"y": 1.0},
        },
        "emissions": {"x": {"a": 1.0}, "y": {"b": 1.0}},
    }
    model = text_model_from_dict(spec)
    assert sequence_probability(model, "aab") == pytest.approx(0.25)


def test_kernel_form_round_trip():
    model = markov_model(1, {"": {"a": 0.3, "b": 0.7}, "a": {"b": 1.0}, "b": {"a": 0.6, "b": 0.4}})
    back = text_model_from_dict(json.loads(json.dumps(text_model_to_dict(model))))
    for text in ("", "ab", "bba", "abab"):
        assert sequence_probability(back, text) == pytest.approx(sequence_probability(model, text))


def test_load_from_file(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"type": "uniform", "alphabet": "ACGT"}))
    assert sequence_probability(load_text_model(path), "AC") == pytest.approx(1 / 16)
    with pytest.raises(ValidationError):
        load_text_model(tmp_path / "missing.json")


def test_unknown_type():
    with pytest.raises(ValidationError):
        text_model_from_dict({"type": "neural"})


def test_registry():
    model = get_text_model(TextModelIidCfg(name="iid", probs={"x": 1.0}))
    assert model.alphabet == ("x",)
