import pytest

from src.daa import PatternGeneralizedCfg, PatternStringsCfg
from src.misc.errors import ValidationError
from src.patstats import (
    clump_size_distribution,
    clump_start_distribution,
    expected_clump_count,
)
from src.textmodel import iid_model


def test_run_of_ones_is_geometric(uniform_binary):
    result = clump_size_distribution(PatternStringsCfg("strings", ["11"]), uniform_binary, 20)
    for h in range(1, 8):
        assert result.psi[h] == pytest.approx(0.5**h, abs=1e-12)
    assert result.psi[20] == pytest.approx(0.5**19, abs=1e-12)
    assert result.psi.total() >= 1 - 1e-9
    assert result.residual < 1e-9


def test_pattern_without_self_overlap(uniform_binary):
    result = clump_size_distribution(PatternStringsCfg("strings", ["01"]), uniform_binary, 5)
    assert result.psi[1] == pytest.approx(1.0, abs=1e-12)


def test_single_overlap_position(uniform_dna):
    result = clump_size_distribution(PatternStringsCfg("strings", ["ACA"]), uniform_dna, 6)
    assert result.psi[1] == pytest.approx(15 / 16, abs=1e-12)
    assert result.psi[2] == pytest.approx(15 / 256, abs=1e-12)


def test_bound_one_counts_every_clump(uniform_binary):
    result = clump_size_distribution(PatternStringsCfg("strings", ["11"]), uniform_binary, 1)
    assert result.psi.support == {1: pytest.approx(1.0)}


def test_clump_start_distribution(uniform_binary):
    gamma = clump_start_distribution(PatternStringsCfg("strings", ["11"]), uniform_binary)
    assert gamma.support == {("11", ""): pytest.approx(1.0)}


def test_clump_start_over_two_patterns():
    model = iid_model({"0": 0.4, "1": 0.6})
    gamma = clump_start_distribution(PatternStringsCfg("strings", ["110", "111"]), model)
    assert gamma.total() == pytest.approx(1.0, abs=1e-9)
    # A clump starts with 110 or 111 after a non-overlapping prefix.
    assert gamma[("110", "")] == pytest.approx(0.4, abs=1e-9)
    assert gamma[("111", "")] == pytest.approx(0.6, abs=1e-9)


def test_renewal_consistency():
    p = 0.6
    model = iid_model({"0": 1 - p, "1": p})
    pattern = PatternStringsCfg("strings", ["11"])
    result = clump_size_distribution(pattern, model, 60, epsilon=1e-13)
    n = 200
    clump_rate = expected_clump_count(pattern, model, n + 1) - expected_clump_count(
        pattern, model, n
    )
    assert result.psi.mean() * clump_rate == pytest.approx(p * p, abs=1e-6)


def test_rejected_patterns(uniform_binary):
    with pytest.raises(ValidationError, match="wildcard"):
        clump_size_distribution(
            PatternGeneralizedCfg("generalized", [["01", "1"]]), uniform_binary, 5
        )
    with pytest.raises(ValidationError):
        clump_size_distribution(PatternStringsCfg("strings", ["1"]), uniform_binary, 5)
    with pytest.raises(ValidationError):
        clump_size_distribution(PatternStringsCfg("strings", ["11", "101"]), uniform_binary, 5)
