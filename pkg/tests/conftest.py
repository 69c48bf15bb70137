import os
import shutil
import tempfile

import pytest
import yaml

from weylcent.engine.exact_arith import GF, QQ
from weylcent.engine.op_parser import parse
from weylcent.engine.runtime import WeylRuntime


@pytest.fixture
def config_dir():
    temp_dir = tempfile.mkdtemp()
    config_path = os.path.join(temp_dir, "config")
    os.makedirs(config_path)

    with open(os.path.join(config_path, "settings.yaml"), "w") as f:
        yaml.dump({"max_primes": 32, "lemma_samples": 5, "lemma_degree_bound": 4}, f)

    yield config_path
    shutil.rmtree(temp_dir)


@pytest.fixture
def runtime(config_dir):
    rt = WeylRuntime(config_dir)
    rt.initialize()
    return rt


@pytest.fixture
def qq():
    """Parser bound to A_1(QQ)."""
    return lambda text, nvars=1: parse(text, nvars, QQ)


@pytest.fixture
def fp():
    """Parser bound to A_n(F_p)."""
    return lambda text, p, nvars=1: parse(text, nvars, GF(p))
