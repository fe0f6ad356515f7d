from .chain import state_distribution, stationary_distribution
from .dice import dice_paa
from .distribution import Distribution
from .doubling import DoublingKernel, kernel_power
from .operation import Maximum, Operation, TruncatedAdd
from .paa import MarkovChain, Paa
from .recurrence import state_value_distribution, value_distribution
from .transitions import StochasticFactor, Transitions
from .value_domain import Marker, ValueDomain
from .waiting_time import waiting_time_states, waiting_time_values
