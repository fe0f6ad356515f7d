from .aho_corasick import aho_corasick
from .construction import paa_from_daa
from .counting import (
    SCHEMES,
    CountingDfa,
    Scheme,
    apply_scheme,
    counting_daa,
    match_states,
)
from .daa import Daa, daa_value
from .minimize import minimize
from .nfa import Nfa, nfa_from_generalized, subset_construction
from .patterns import (
    PatternCfg,
    PatternGeneralizedCfg,
    PatternPrositeCfg,
    PatternStringsCfg,
    get_counting_dfa,
    pattern_from_dict,
    pattern_length,
)
from .prosite import PROTEIN_ALPHABET, expand_prosite
