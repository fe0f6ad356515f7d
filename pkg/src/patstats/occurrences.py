from ..core import Distribution, Paa, value_distribution
from ..core.recurrence import Method
from ..daa import PatternCfg, Scheme, counting_daa, get_counting_dfa, paa_from_daa
from ..misc.errors import ValidationError
from ..textmodel import TextModel


def counting_paa(
    pattern: PatternCfg,
    model: TextModel,
    bound: int,
    scheme: Scheme = "overlapping",
) -> Paa:
    cdfa = get_counting_dfa(pattern, model.alphabet, scheme)
    return paa_from_daa(counting_daa(cdfa, bound), model)


def occurrence_distribution(
    pattern: PatternCfg,
    model: TextModel,
    n: int,
    bound: int,
    scheme: Scheme = "overlapping",
    method: Method = "basic",
) -> Distribution:
    """Distribution of min(bound, number of matches) in a random text of length n."""
    if n < 0:
        raise ValidationError("text length must be nonnegative")
    return value_distribution(counting_paa(pattern, model, bound, scheme), n, method)


def occurrence_pvalue(
    pattern: PatternCfg,
    model: TextModel,
    n: int,
    k: int,
    scheme: Scheme = "overlapping",
) -> float:
    """P(count >= k)."""
    if k < 1:
        raise ValidationError("k must be at least 1")
    return occurrence_distribution(pattern, model, n, k, scheme)[k]
