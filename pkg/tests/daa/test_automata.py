from itertools import product

import pytest

from src.daa import (
    CountingDfa,
    PatternGeneralizedCfg,
    PatternPrositeCfg,
    PatternStringsCfg,
    aho_corasick,
    apply_scheme,
    counting_daa,
    daa_value,
    expand_prosite,
    get_counting_dfa,
    match_states,
    minimize,
    nfa_from_generalized,
    pattern_from_dict,
    pattern_length,
    subset_construction,
)
from src.daa.patterns import starts_with_wildcard
from src.misc.errors import PatternParseError, UnsupportedFeatureError, ValidationError

PATTERN_SETS = [
    ["101", "111"],
    ["11"],
    ["0110", "10"],
    ["1", "01"],
    ["000", "0010"],
    ["1010", "0101", "11"],
]


def strings_up_to(alphabet: str, n: int):
    for length in range(n + 1):
        for s in product(alphabet, repeat=length):
            yield "".join(s)


def test_aho_corasick_states():
    cdfa = aho_corasick(["101", "111"], "01")
    assert cdfa.labels == ("", "1", "10", "11", "101", "111")
    assert dict(zip(cdfa.labels, cdfa.counts)) == {
        "": 0,
        "1": 0,
        "10": 0,
        "11": 0,
        "101": 1,
        "111": 1,
    }
    assert [cdfa.labels[q] for q in match_states(cdfa)] == ["101", "111"]


def test_single_short_pattern():
    cdfa = aho_corasick(["ab"], "ab")
    assert cdfa.num_states == 3
    assert cdfa.counts[cdfa.labels.index("ab")] == 1


def test_suffix_patterns_add_up():
    assert aho_corasick(["aa", "aaa"], "a").cumulative_count("aaa") == 3


def test_aho_corasick_rejects_bad_patterns():
    with pytest.raises(ValidationError):
        aho_corasick(["10", ""], "01")
    with pytest.raises(ValidationError):
        aho_corasick(["12"], "01")


def test_counting_daa_values():
    daa = counting_daa(aho_corasick(["101", "111"], "01"), 10)
    assert daa_value(daa, "") == 0
    assert daa_value(daa, "10101") == 2


def test_counting_daa_truncates():
    daa = counting_daa(aho_corasick(["11"], "01"), 3)
    assert daa_value(daa, "1111111") == 3
    with pytest.raises(ValidationError):
        counting_daa(aho_corasick(["11"], "01"), 0)


def test_daa_rejects_unknown_characters():
    daa = counting_daa(aho_corasick(["11"], "01"), 3)
    with pytest.raises(ValidationError):
        daa_value(daa, "121")


def test_schemes():
    cdfa = aho_corasick(["11"], "01")
    assert apply_scheme(cdfa, "overlapping").cumulative_count("111") == 2
    assert apply_scheme(cdfa, "nonoverlapping").cumulative_count("111") == 1
    assert apply_scheme(cdfa, "match_position").cumulative_count("111") == 2


def test_match_position_clamps_multiplicities():
    cdfa = aho_corasick(["aa", "aaa"], "a")
    assert apply_scheme(cdfa, "match_position").cumulative_count("aaa") == 2


def test_overlapping_needs_multiplicities():
    marked = apply_scheme(aho_corasick(["11"], "01"), "match_position")
    with pytest.raises(ValidationError):
        apply_scheme(marked, "overlapping")


def test_generalized_chain():
    nfa = nfa_from_generalized([["abc", "ac", "ab"]], "abc")
    assert nfa.num_states == 4
    assert nfa.finals == (0, 0, 0, 1)


def test_generalized_patterns_share_only_the_start():
    nfa = nfa_from_generalized([["a", "b"], ["a", "b", "b"]], "ab")
    assert nfa.num_states == 1 + 2 + 3
    with pytest.raises(ValidationError):
        nfa_from_generalized([["a", ""]], "ab")


def test_every_window_matches():
    cdfa = subset_construction(nfa_from_generalized([["ab", "ab"]], "ab"))
    for q, label in enumerate(cdfa.labels):
        assert cdfa.counts[q] == (1 if 2 in label else 0)
    assert cdfa.cumulative_count("abab") == 3
    for row in cdfa.delta:
        assert len(row) == 2


@pytest.mark.parametrize("patterns", PATTERN_SETS)
def test_pipeline_matches_aho_corasick(patterns):
    direct = aho_corasick(patterns, "01")
    generalized = minimize(
        subset_construction(nfa_from_generalized([list(p) for p in patterns], "01"))
    )
    for text in strings_up_to("01", 8):
        assert generalized.cumulative_count(text) == direct.cumulative_count(text)


@pytest.mark.parametrize("patterns", PATTERN_SETS)
def test_minimization_is_idempotent(patterns):
    once = minimize(aho_corasick(patterns, "01"))
    twice = minimize(once)
    assert twice.num_states == once.num_states
    assert twice.counts == once.counts


def test_single_string_minimizes_to_aho_corasick():
    direct = minimize(aho_corasick(["0110"], "01"))
    generalized = minimize(subset_construction(nfa_from_generalized([list("0110")], "01")))
    assert generalized.num_states == direct.num_states


def test_equivalent_states_are_merged():
    cdfa = CountingDfa(
        labels=("s", "x", "y"),
        start=0,
        alphabet=("a",),
        delta=((1,), (2,), (1,)),
        counts=(0, 1, 1),
    )
    minimal = minimize(cdfa)
    assert minimal.num_states == 2
    assert minimal.labels == ("s", "x")


def test_expand_prosite():
    assert expand_prosite("A-x(2,3)-C", "ACGT") == [
        ("A", "ACGT", "ACGT", "C"),
        ("A", "ACGT", "ACGT", "ACGT", "C"),
    ]
    assert expand_prosite("A-C") == [("A", "C")]
    assert expand_prosite("x(2)", "AC") == [("AC", "AC")]
    assert expand_prosite("[GA]-K.") == [("AG", "K")]


def test_prosite_errors():
    with pytest.raises(UnsupportedFeatureError):
        expand_prosite("<A-C")
    with pytest.raises(UnsupportedFeatureError):
        expand_prosite("A-{P}")
    with pytest.raises(PatternParseError) as error:
        expand_prosite("A-?-C")
    assert error.value.position == 2
    with pytest.raises(PatternParseError):
        expand_prosite("A-x(3,2)")


def test_pattern_specs():
    assert pattern_from_dict({"strings": ["101"]}) == PatternStringsCfg("strings", ["101"])
    assert pattern_from_dict({"prosite": "A-C"}).name == "prosite"
    with pytest.raises(ValidationError):
        pattern_from_dict({"strings": ["1"], "prosite": "A"})
    generalized = PatternGeneralizedCfg("generalized", [["01", "1"]])
    assert get_counting_dfa(generalized, "01").cumulative_count("0111") == 3
    assert pattern_length(generalized, "01") == 2
    assert starts_with_wildcard(generalized, "01")
    assert not starts_with_wildcard(PatternStringsCfg("strings", ["11"]), "01")
    with pytest.raises(ValidationError):
        pattern_length(PatternStringsCfg("strings", ["1", "11"]), "01")


def test_prosite_spec_counts():
    cfg = PatternPrositeCfg("prosite", "A-x-C")
    cdfa = get_counting_dfa(cfg, "ACG")
    assert cdfa.cumulative_count("AGCAAC") == 2
