from .builders import (
    TEXT_MODELS,
    TextModelCfg,
    TextModelFileCfg,
    TextModelHmmCfg,
    TextModelIidCfg,
    TextModelKernelCfg,
    TextModelMarkovCfg,
    TextModelPeriodicCfg,
    TextModelUniformCfg,
    get_text_model,
)
from .hmm import Hmm, forward_probability, from_hmm, to_hmm
from .iid import iid_model, uniform_model
from .markov import first_order_model, markov_model
from .periodic import periodic_model
from .spec_io import load_text_model, text_model_from_dict, text_model_to_dict
from .text_model import (
    TextModel,
    character_marginals,
    sequence_probability,
    string_transition,
)
