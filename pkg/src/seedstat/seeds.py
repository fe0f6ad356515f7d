from dataclasses import dataclass
from functools import cached_property
from itertools import product

from ..misc.errors import ValidationError

SEED_SYMBOLS = "1*?"
ALIGNMENT_ALPHABET = "0123"

# Expansions of the seed symbols: match, match or mismatch, and a possibly
# empty position that may also absorb a gap.
SYMBOL_EXPANSIONS = {
    "1": ("1",),
    "*": ("0", "1"),
    "?": ("",) + tuple(ALIGNMENT_ALPHABET),
}
FORBIDDEN_PAIRS = {("2", "3"), ("3", "2")}


@dataclass(frozen=True)
class Seed:
    symbols: str

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValidationError("seed must be nonempty")
        unknown = set(self.symbols) - set(SEED_SYMBOLS)
        if unknown:
            raise ValidationError(f"seed {self.symbols!r} uses unknown symbols {sorted(unknown)}")
        if self.symbols[0] != "1" or self.symbols[-1] != "1":
            raise ValidationError(f"seed {self.symbols!r} must start and end with 1")

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def weight(self) -> int:
        return self.symbols.count("1")

    @cached_property
    def pattern_set(self) -> frozenset[str]:
        return seed_pattern_set(self)


def seed_pattern_set(seed: Seed) -> frozenset[str]:
    """Every alignment string the seed matches.

    Two neighbouring ? may not expand to a pair of opposite gaps.
    """
    options = [SYMBOL_EXPANSIONS[symbol] for symbol in seed.symbols]
    instances = set()
    for choice in product(*options):
        if any(
            seed.symbols[i] == seed.symbols[i + 1] == "?"
            and (choice[i], choice[i + 1]) in FORBIDDEN_PAIRS
            for i in range(len(choice) - 1)
        ):
            continue
        instances.add("".join(choice))
    return frozenset(instances)


@dataclass(frozen=True)
class MultipleSeed:
    seeds: tuple[Seed, ...]

    def __post_init__(self) -> None:
        if not self.seeds:
            raise ValidationError("a multiple seed needs at least one seed")

    @classmethod
    def parse(cls, symbols: list[str] | tuple[str, ...] | str) -> "MultipleSeed":
        if isinstance(symbols, str):
            symbols = symbols.split(",")
        return cls(tuple(Seed(s.strip()) for s in symbols))

    @cached_property
    def pattern_set(self) -> frozenset[str]:
        return frozenset().union(*(seed.pattern_set for seed in self.seeds))

    @property
    def min_weight(self) -> int:
        return min(seed.weight for seed in self.seeds)


def seed_hit_positions(seed: Seed | MultipleSeed, alignment: str) -> list[int]:
    """End positions (0-based) at which some instance of the seed occurs."""
    unknown = set(alignment) - set(ALIGNMENT_ALPHABET)
    if unknown:
        raise ValidationError(f"alignment uses unknown characters {sorted(unknown)}")
    instances = seed.pattern_set
    return [
        end
        for end in range(len(alignment))
        if any(alignment.endswith(instance, 0, end + 1) for instance in instances)
    ]
