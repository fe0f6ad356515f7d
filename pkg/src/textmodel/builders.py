from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Literal

import torch

from ..misc.errors import ValidationError
from .hmm import Hmm, from_hmm
from .iid import iid_model, uniform_model
from .markov import markov_model
from .periodic import periodic_model
from .text_model import TextModel


@dataclass
class TextModelIidCfg:
    name: Literal["iid"]
    probs: dict[str, float]


@dataclass
class TextModelUniformCfg:
    name: Literal["uniform"]
    alphabet: str


@dataclass
class TextModelMarkovCfg:
    name: Literal["markov"]
    order: int
    conditionals: dict[str, dict[str, float]]
    alphabet: str | None = None


@dataclass
class TextModelHmmCfg:
    name: Literal["hmm"]
    states: list[str]
    start: str
    transitions: dict[str, dict[str, float]]
    emissions: dict[str, dict[str, float]]


@dataclass
class TextModelPeriodicCfg:
    name: Literal["periodic"]
    text: str
    alphabet: str | None = None


@dataclass
class TextModelKernelCfg:
    name: Literal["kernel"]
    contexts: list[str]
    start: str
    alphabet: str
    # context -> character -> next context -> probability
    kernel: dict[str, dict[str, dict[str, float]]]


@dataclass
class TextModelFileCfg:
    name: Literal["file"]
    path: Path


def build_iid(cfg: TextModelIidCfg) -> TextModel:
    return iid_model(cfg.probs)


def build_uniform(cfg: TextModelUniformCfg) -> TextModel:
    return uniform_model(cfg.alphabet)


def build_markov(cfg: TextModelMarkovCfg) -> TextModel:
    return markov_model(cfg.order, cfg.conditionals, cfg.alphabet)


def build_periodic(cfg: TextModelPeriodicCfg) -> TextModel:
    return periodic_model(cfg.text, cfg.alphabet)


def build_hmm(cfg: TextModelHmmCfg) -> TextModel:
    states = list(cfg.states)
    if cfg.start not in states:
        raise ValidationError(f"start state {cfg.start!r} is not listed")
    index = {state: i for i, state in enumerate(states)}
    alphabet = sorted({c for row in cfg.emissions.values() for c in row})
    char_index = {c: i for i, c in enumerate(alphabet)}

    transitions = torch.zeros((len(states), len(states)), dtype=torch.float64)
    for source, row in cfg.transitions.items():
        for target, p in row.items():
            if source not in index or target not in index:
                raise ValidationError(f"transition {source!r} -> {target!r} names an unknown state")
            transitions[index[source], index[target]] = p

    emissions = torch.zeros((len(states), len(alphabet)), dtype=torch.float64)
    for state, row in cfg.emissions.items():
        if state not in index:
            raise ValidationError(f"emissions given for unknown state {state!r}")
        for character, p in row.items():
            emissions[index[state], char_index[character]] = p
    # The start state never emits unless the chain returns to it.
    start = index[cfg.start]
    if cfg.start not in cfg.emissions and not transitions[:, start].any():
        emissions[start] = 1 / len(alphabet)

    return from_hmm(Hmm(tuple(states), start, tuple(alphabet), transitions, emissions))


def build_kernel(cfg: TextModelKernelCfg) -> TextModel:
    index = {context: i for i, context in enumerate(cfg.contexts)}
    char_index = {c: i for i, c in enumerate(cfg.alphabet)}
    rows = []
    for context in cfg.contexts:
        row = []
        for character, targets in cfg.kernel.get(context, {}).items():
            for target, p in targets.items():
                if character not in char_index or target not in index:
                    raise ValidationError(f"kernel row of {context!r} names unknown symbols")
                if p > 0:
                    row.append((char_index[character], index[target], float(p)))
        rows.append(tuple(row))
    if cfg.start not in index:
        raise ValidationError(f"start context {cfg.start!r} is not listed")
    return TextModel(tuple(cfg.contexts), index[cfg.start], tuple(cfg.alphabet), tuple(rows))


def build_file(cfg: TextModelFileCfg) -> TextModel:
    from .spec_io import load_text_model

    return load_text_model(cfg.path)


TEXT_MODELS: dict[str, Callable[..., TextModel]] = {
    "file": build_file,
    "hmm": build_hmm,
    "iid": build_iid,
    "kernel": build_kernel,
    "markov": build_markov,
    "periodic": build_periodic,
    "uniform": build_uniform,
}

TextModelCfg = (
    TextModelIidCfg
    | TextModelUniformCfg
    | TextModelMarkovCfg
    | TextModelHmmCfg
    | TextModelPeriodicCfg
    | TextModelKernelCfg
    | TextModelFileCfg
)


def get_text_model(cfg: TextModelCfg) -> TextModel:
    return TEXT_MODELS[cfg.name](cfg)
