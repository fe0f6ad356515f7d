from .dispensation import NUCLEOTIDES, Dispensation, valid_orders
from .flows import (
    compare_orders,
    expected_read_length,
    flow_daa,
    format_comparison,
    read_length_distribution,
    read_length_for_text,
)
