import random

import pytest

from e5torsion.torsion.formulas import build_formulas
from e5torsion.utils.utils import load_config


@pytest.fixture(scope="session")
def CFG():
    return load_config("config.yaml")


@pytest.fixture
def rng(CFG):
    return random.Random(CFG.get("SEED", 456))


@pytest.fixture(scope="session")
def tf():
    return build_formulas()
