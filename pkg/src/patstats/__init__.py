from .clumps import (
    ClumpResult,
    clump_size_distribution,
    clump_start_distribution,
    expected_clump_count,
)
from .occurrences import counting_paa, occurrence_distribution, occurrence_pvalue
from .waiting import pattern_waiting_time
