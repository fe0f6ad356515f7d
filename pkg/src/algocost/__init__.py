from .cost import WindowCost, cost_distribution, expected_cost, window_paa
from .spec import (
    ALGORITHMS,
    AlgorithmSpec,
    get_algorithm,
    horspool_spec,
    sunday_spec,
    window_count_spec,
)
