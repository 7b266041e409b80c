import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_config(rng, n, l, complex_entries=False):
    z = rng.standard_normal((n, l))
    if complex_entries:
        z = z + 1j * rng.standard_normal((n, l))
    return z
