from .exhaustive import ENUMERATION_LIMIT, enumerate_exact
from .naive import (
    MatchResult,
    extract_clumps,
    occurrence_ends,
    run_matcher,
    simulate_flows,
)
from .report import OracleReport, compare, empirical_distribution
from .sampling import sample_text, sample_texts
