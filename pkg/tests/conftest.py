import pytest

from src.core import Paa, dice_paa
from src.textmodel import iid_model, uniform_model


@pytest.fixture
def dice() -> Paa:
    return dice_paa()


@pytest.fixture
def uniform_binary():
    return uniform_model("01")


@pytest.fixture
def uniform_dna():
    return uniform_model("ACGT")


@pytest.fixture
def biased_binary():
    return iid_model({"0": 0.3, "1": 0.7})
