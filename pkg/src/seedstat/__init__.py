from .hits import seed_hit_distribution, seed_pattern, seed_sensitivity
from .homology import HomologyModel, homology_model, parse_homology
from .seeds import MultipleSeed, Seed, seed_hit_positions, seed_pattern_set
