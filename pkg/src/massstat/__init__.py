from .cleavage import CleavageRule, cleavage_daa, trypsin
from .fragments import (
    FragmentDistribution,
    fragment_length_dist,
    fragment_length_mass,
    fragment_mass_distribution,
    fragment_paa,
)
from .masses import (
    DEFAULT_MASS_TABLE,
    MassTable,
    apply_global_ptm,
    apply_ptm,
    load_mass_table,
    scaled_mass,
)
from .missed import apply_missed_cleavage
from .occurrence import AbsorbingAdd, MassWindow, mass_occurrence_probability
