from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from ..misc.errors import ValidationError
from .aho_corasick import aho_corasick
from .counting import CountingDfa, Scheme, apply_scheme
from .minimize import minimize
from .nfa import GeneralizedString, as_generalized, nfa_from_generalized, subset_construction
from .prosite import expand_prosite


@dataclass
class PatternStringsCfg:
    name: Literal["strings"]
    strings: list[str]


@dataclass
class PatternGeneralizedCfg:
    name: Literal["generalized"]
    generalized: list[list[str]]


@dataclass
class PatternPrositeCfg:
    name: Literal["prosite"]
    prosite: str


PatternCfg = PatternStringsCfg | PatternGeneralizedCfg | PatternPrositeCfg


def pattern_from_dict(spec: dict) -> PatternCfg:
    """Read {"strings": [...]}, {"generalized": [[...], ...]} or {"prosite": "..."}."""
    kinds = [key for key in ("strings", "generalized", "prosite") if key in spec]
    if len(kinds) != 1:
        raise ValidationError("pattern spec needs exactly one of strings, generalized, prosite")
    (kind,) = kinds
    if kind == "strings":
        return PatternStringsCfg("strings", [str(s) for s in spec[kind]])
    if kind == "generalized":
        return PatternGeneralizedCfg("generalized", [[str(c) for c in g] for g in spec[kind]])
    return PatternPrositeCfg("prosite", str(spec[kind]))


def generalized_strings(cfg: PatternCfg, alphabet: Sequence[str]) -> list[GeneralizedString]:
    """Every pattern of the config written as a generalized string."""
    if cfg.name == "strings":
        return [as_generalized(tuple(s), alphabet) for s in cfg.strings]
    if cfg.name == "generalized":
        return [as_generalized(g, alphabet) for g in cfg.generalized]
    return expand_prosite(cfg.prosite, alphabet)


def strings_dfa(cfg: PatternStringsCfg, alphabet: Sequence[str]) -> CountingDfa:
    return aho_corasick(cfg.strings, alphabet)


def generalized_dfa(cfg: PatternCfg, alphabet: Sequence[str]) -> CountingDfa:
    patterns = generalized_strings(cfg, alphabet)
    return minimize(subset_construction(nfa_from_generalized(patterns, alphabet)))


PATTERN_AUTOMATA: dict[str, Callable[..., CountingDfa]] = {
    "strings": strings_dfa,
    "generalized": generalized_dfa,
    "prosite": generalized_dfa,
}


def get_counting_dfa(
    cfg: PatternCfg,
    alphabet: Sequence[str],
    scheme: Scheme = "overlapping",
) -> CountingDfa:
    return apply_scheme(PATTERN_AUTOMATA[cfg.name](cfg, tuple(alphabet)), scheme)


def pattern_length(cfg: PatternCfg, alphabet: Sequence[str]) -> int:
    """The common length of all pattern instances."""
    lengths = {len(g) for g in generalized_strings(cfg, alphabet)}
    if len(lengths) != 1:
        raise ValidationError("patterns of differing lengths have no common clump length")
    return lengths.pop()


def starts_with_wildcard(cfg: PatternCfg, alphabet: Sequence[str]) -> bool:
    everything = "".join(sorted(set(alphabet)))
    return any(g[0] == everything for g in generalized_strings(cfg, alphabet))
